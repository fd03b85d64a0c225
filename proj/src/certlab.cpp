#include "mslab/certlab.hpp"

#include <numeric>

#include "mslab/opimage.hpp"

namespace mslab {

namespace {

Rational index_term(std::size_t j, std::size_t n, const Rational& alpha) {
  return Rational(static_cast<long>(j * n + 1)) + alpha;
}

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::size_t normalized_low_degree(const QPoly& f) {
  if (f.is_zero()) throw MathError(ErrorCode::NotNormalized, "f = 0");
  const std::size_t s = f.low_degree();
  if (s == 0) throw MathError(ErrorCode::NotNormalized, "f(0) != 0; the lowest term must be t^s with s >= 1");
  if (!f.coeffs()[s].is_one()) throw MathError(ErrorCode::NotNormalized, "lowest coefficient must be 1");
  return s;
}

void require_theorem_parameters(std::size_t d, const Rational& alpha) {
  if (d == 0 && alpha.is_zero()) {
    throw MathError(ErrorCode::PreconditionViolated, "(d, alpha) = (0, 0)");
  }
  if (in_exceptional_set(d, alpha)) {
    throw MathError(ErrorCode::PreconditionViolated, "alpha lies in -(1 + (d+1)N)");
  }
}

// Everything in a certificate that is a function of (f, d, alpha, m, prime).
struct Derived {
  std::size_t s;
  Integer q, r, s0, s_star, h;
  std::vector<Rational> b_values;
  std::vector<Rational> phi_values;
  Rational bracket;
  Rational sum;  // 1 + sum b_i phi_i
};

Derived derive(const QPoly& f, std::size_t d, const Rational& alpha, std::size_t m) {
  Derived out;
  out.s = normalized_low_degree(f);
  const std::size_t n = d + 1;
  out.q = alpha.denominator();
  out.r = alpha.numerator();
  const Integer sn(static_cast<unsigned long>(out.s * n));
  out.s0 = gcd(sn, out.q + out.r);
  out.s_star = sn / out.s0;
  out.h = (out.q + out.r) / out.s0;

  const auto deg_f = static_cast<std::size_t>(f.degree());
  const std::size_t i_max = (deg_f - out.s) * m;
  out.b_values = b_products(out.s, m, d, alpha, i_max);
  const auto phi = phi_expansion(f, m, d);
  out.phi_values.reserve(i_max);
  for (std::size_t i = 1; i <= i_max; ++i) {
    const auto it = phi.find((out.s * m + i) * n);
    out.phi_values.push_back(it == phi.end() ? Rational(0) : it->second);
  }
  out.bracket = bracket_factorial(out.s * m, n, alpha);
  out.sum = Rational(1);
  for (std::size_t i = 0; i < i_max; ++i) out.sum += out.b_values[i] * out.phi_values[i];
  return out;
}

}  // namespace

Rational bracket_factorial(std::size_t q, std::size_t n, const Rational& alpha) {
  if (n < 1) throw MathError(ErrorCode::BadInput, "bracket factorial needs n >= 1");
  Rational out(1);
  for (std::size_t j = 0; j < q; ++j) out *= index_term(j, n, alpha);
  return out;
}

Rational lzero_monomial(std::size_t q, std::size_t i, std::size_t d, const Rational& alpha) {
  if (i > d) throw MathError(ErrorCode::BadInput, "need 0 <= i <= d");
  if (i > 0) return Rational(0);
  return bracket_factorial(q, d + 1, alpha);
}

std::map<std::size_t, Rational> phi_expansion(const QPoly& f, std::size_t m, std::size_t d) {
  const std::size_t s = normalized_low_degree(f);
  const QPoly power = pow(f, m * (d + 1));
  const std::size_t base = s * m * (d + 1);
  if (!power.coeffs()[base].is_one()) throw MathError(ErrorCode::NotNormalized, "leading-low coefficient != 1");
  std::map<std::size_t, Rational> out;
  for (std::size_t k = base + 1; k < power.size(); ++k) {
    if (!power.coeffs()[k].is_zero()) out.emplace(k, power.coeffs()[k]);
  }
  return out;
}

std::vector<Rational> b_products(std::size_t s, std::size_t m, std::size_t d, const Rational& alpha,
                                 std::size_t i_max) {
  std::vector<Rational> out;
  out.reserve(i_max);
  Rational acc(1);
  for (std::size_t i = 1; i <= i_max; ++i) {
    acc *= index_term(s * m + i - 1, d + 1, alpha);
    out.push_back(acc);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Valuation vp(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) throw MathError(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (x.is_zero()) return Valuation::infinity();
  const Integer prime(static_cast<unsigned long>(p));
  Integer rest;
  const long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.numerator().get_mpz_t(), prime.get_mpz_t()));
  const long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.denominator().get_mpz_t(), prime.get_mpz_t()));
  return Valuation(up - down);
}

std::optional<PrimeHit> dirichlet_prime(std::int64_t a, std::int64_t b, std::uint64_t m_min,
                                        std::uint64_t budget) {
  if (a < 1) throw MathError(ErrorCode::BadInput, "progression step must be >= 1");
  if (std::gcd(a, b) != 1) throw MathError(ErrorCode::NotCoprime, "gcd(A, B) != 1");
  for (std::uint64_t k = 0; k < budget; ++k) {
    const std::uint64_t m = m_min + k;
    const __int128 value = static_cast<__int128>(a) * m + b;
    if (value > static_cast<__int128>(UINT64_MAX)) break;
    if (value < 2) continue;
    if (is_prime(static_cast<std::uint64_t>(value))) return PrimeHit{m, static_cast<std::uint64_t>(value)};
  }
  return std::nullopt;
}

bool in_exceptional_set(std::size_t d, const Rational& alpha) {
  if (!alpha.is_integer() || alpha.sign() >= 0) return false;
  const Integer k = -alpha.numerator() - 1;
  return k % Integer(static_cast<unsigned long>(d + 1)) == 0;
}

Certificate certificate_nonmembership(const QPoly& f, std::size_t d, const Rational& alpha,
                                      std::uint64_t budget) {
  require_theorem_parameters(d, alpha);
  const std::size_t s = normalized_low_degree(f);
  const Integer q = alpha.denominator();
  const Integer r = alpha.numerator();
  const Integer sn(static_cast<unsigned long>(s * (d + 1)));
  const Integer s0 = gcd(sn, q + r);
  const Integer step = (sn / s0) * q;
  const Integer offset = (q + r) / s0;
  if (!step.fits_slong_p() || !offset.fits_slong_p()) {
    throw MathError(ErrorCode::BudgetExhausted, "progression parameters exceed 64 bits");
  }

  std::uint64_t m_min = 1;
  std::uint64_t remaining = budget;
  while (remaining > 0) {
    const auto hit = dirichlet_prime(step.get_si(), offset.get_si(), m_min, remaining);
    if (!hit) break;
    remaining -= hit->m - m_min + 1;
    m_min = hit->m + 1;
    // phi_k are integer polynomials in the coefficients, so p-integral
    // coefficients make every phi p-integral.
    bool integral = true;
    for (const auto& c : f.coeffs()) {
      if (vp(c, hit->p) < Valuation(0)) {
        integral = false;
        break;
      }
    }
    if (!integral) continue;

    const Derived derived = derive(f, d, alpha, hit->m);
    Certificate cert;
    cert.f = f;
    cert.d = d;
    cert.alpha = alpha;
    cert.s = derived.s;
    cert.m = hit->m;
    cert.prime = hit->p;
    cert.q = derived.q;
    cert.r = derived.r;
    cert.s0 = derived.s0;
    cert.s_star = derived.s_star;
    cert.h = derived.h;
    cert.b_values = derived.b_values;
    cert.phi_values = derived.phi_values;
    for (const auto& b : cert.b_values) cert.bi_valuations.push_back(vp(b, cert.prime).value());
    for (const auto& phi : cert.phi_values) cert.phi_valuations.push_back(vp(phi, cert.prime));
    cert.bracket = derived.bracket;
    cert.conclusion_exponent = cert.m * (d + 1);
    cert.lzero = lzero(unit_operator(d, alpha), pow(f, cert.conclusion_exponent));
    return cert;
  }
  throw MathError(ErrorCode::BudgetExhausted, "no admissible prime within budget");
}

bool verify_certificate(const Certificate& cert) {
  try {
    require_theorem_parameters(cert.d, cert.alpha);
    if (cert.m < 1 || !is_prime(cert.prime)) return false;
    const Derived derived = derive(cert.f, cert.d, cert.alpha, cert.m);
    if (derived.s != cert.s || derived.q != cert.q || derived.r != cert.r || derived.s0 != cert.s0 ||
        derived.s_star != cert.s_star || derived.h != cert.h) {
      return false;
    }
    if (Integer(static_cast<unsigned long>(cert.prime)) !=
        cert.s_star * cert.q * Integer(static_cast<unsigned long>(cert.m)) + cert.h) {
      return false;
    }
    if (derived.b_values != cert.b_values || derived.phi_values != cert.phi_values) return false;
    if (derived.bracket != cert.bracket || cert.conclusion_exponent != cert.m * (cert.d + 1)) return false;
    if (cert.bi_valuations.size() != cert.b_values.size() ||
        cert.phi_valuations.size() != cert.phi_values.size()) {
      return false;
    }
    for (std::size_t i = 0; i < cert.b_values.size(); ++i) {
      const Valuation v = vp(cert.b_values[i], cert.prime);
      if (v.is_infinite() || v.value() <= 0 || v.value() != cert.bi_valuations[i]) return false;
    }
    for (std::size_t i = 0; i < cert.phi_values.size(); ++i) {
      const Valuation v = vp(cert.phi_values[i], cert.prime);
      if (v < Valuation(0) || !(v == cert.phi_valuations[i])) return false;
    }
    // 1 + sum b_i phi_i has p-adic valuation 0, hence is nonzero.
    if (!(vp(derived.sum, cert.prime) == Valuation(0))) return false;
    const Rational direct = lzero(unit_operator(cert.d, cert.alpha), pow(cert.f, cert.conclusion_exponent));
    if (direct != cert.lzero || direct != derived.bracket * derived.sum || direct.is_zero()) return false;
    return true;
  } catch (const MathError&) {
    return false;
  }
}

}  // namespace mslab
