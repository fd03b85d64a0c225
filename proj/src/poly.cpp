#include "mslab/poly.hpp"

#include <set>

namespace mslab {

DivMod euclid_divmod(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {QPoly(), f};
  std::vector<Rational> rem = f.coeffs();
  const auto dg = static_cast<std::size_t>(g.degree());
  const std::size_t dq = rem.size() - 1 - dg;
  std::vector<Rational> quot(dq + 1);
  const Rational inv_lead = g.leading().inverse();
  for (std::size_t k = dq + 1; k-- > 0;) {
    const Rational factor = rem[k + dg] * inv_lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= factor * g.coeffs()[j];
  }
  rem.resize(dg);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly operator%(const QPoly& f, const QPoly& g) { return euclid_divmod(f, g).remainder; }

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().inverse();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

std::optional<QPoly> exact_divide(const QPoly& f, const QPoly& g) {
  auto [q, r] = euclid_divmod(f, g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

QPoly squarefree_part(const QPoly& a) {
  if (a.is_zero()) throw MathError(ErrorCode::ZeroInput, "squarefree part of zero");
  const QPoly g = gcd(a, derivative(a));
  return monic(euclid_divmod(a, g).quotient);
}

namespace {

constexpr unsigned long long kDivisorLimit = 1ULL << 40;

std::vector<unsigned long long> positive_divisors(const Integer& n) {
  Integer m = ::abs(n);
  if (m > Integer(static_cast<unsigned long>(kDivisorLimit))) {
    throw MathError(ErrorCode::BudgetExhausted, "coefficient too large for rational root search");
  }
  const unsigned long long v = m.get_ui();
  std::vector<unsigned long long> out;
  for (unsigned long long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d != v / d) out.push_back(v / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw MathError(ErrorCode::ZeroInput, "roots of zero polynomial");
  std::set<Rational> roots;
  const std::size_t low = p.low_degree();
  if (low > 0) roots.insert(Rational(0));
  const QPoly q = shift_down(p, low);
  if (q.degree() >= 1) {
    // Clear denominators so that candidate roots are divisor ratios.
    Integer lcm_den = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    const Integer a0 = (q.coeffs().front() * Rational(lcm_den)).numerator();
    const Integer an = (q.leading() * Rational(lcm_den)).numerator();
    for (auto num : positive_divisors(a0)) {
      for (auto den : positive_divisors(an)) {
        for (long sign : {1L, -1L}) {
          Rational cand(Integer(static_cast<unsigned long>(num)) * sign, Integer(static_cast<unsigned long>(den)));
          if (evaluate(q, cand).is_zero()) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace mslab
