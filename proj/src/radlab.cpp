#include "mslab/radlab.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "mslab/opimage.hpp"

namespace mslab {

namespace {

std::vector<ModulusFactor> normalize_factors(std::vector<ModulusFactor> factors, std::vector<QPoly>& unverified) {
  for (auto& f : factors) {
    if (f.factor.degree() < 1) throw MathError(ErrorCode::BadInput, "modulus factors must be nonconstant");
    if (f.multiplicity < 1) throw MathError(ErrorCode::BadInput, "multiplicities must be positive");
    f.factor = monic(f.factor);
    if (f.factor.degree() <= 3) {
      // A reducible cubic or quadratic has a linear factor.
      if (f.factor.degree() > 1 && !rational_roots(f.factor).empty()) {
        throw MathError(ErrorCode::BadInput, "modulus factor is reducible");
      }
    } else {
      unverified.push_back(f.factor);
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i].factor == factors[j].factor) throw MathError(ErrorCode::BadInput, "repeated modulus factor");
    }
  }
  return factors;
}

QPoly product(const std::vector<ModulusFactor>& factors) {
  QPoly g = QPoly::t_power(0);
  for (const auto& f : factors) g *= pow(f.factor, f.multiplicity);
  return g;
}

std::vector<RVector> to_rvectors(const std::vector<std::vector<Rational>>& vectors, std::size_t n) {
  std::vector<RVector> out;
  for (const auto& v : vectors) {
    if (v.size() != n) throw MathError(ErrorCode::BadInput, "V-bar vector has wrong length");
    RVector r(static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) r(static_cast<Index>(i)) = v[i];
    out.push_back(std::move(r));
  }
  return out;
}

// (u, v) with u*a + v*b = gcd(a, b) (monic).
std::pair<QPoly, QPoly> bezout(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::t_power(0), s1;
  QPoly t0, t1 = QPoly::t_power(0);
  while (!r1.is_zero()) {
    const DivMod qr = euclid_divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  const Rational scale = r0.leading().inverse();
  return {s0 * scale, t0 * scale};
}

// CRT idempotents E_i: 1 modulo the i-th prime power, 0 modulo the others.
std::vector<QPoly> primitive_idempotents(const CofiniteSubspace& v) {
  std::vector<QPoly> out;
  const QPoly& g = v.modulus();
  for (const auto& f : v.factors()) {
    const QPoly power = pow(f.factor, f.multiplicity);
    const QPoly cofactor = *exact_divide(g, power);
    const QPoly inv = bezout(cofactor, power).first;
    out.push_back((cofactor * inv) % g);
  }
  return out;
}

bool split_squarefree(const CofiniteSubspace& v) {
  return std::all_of(v.factors().begin(), v.factors().end(),
                     [](const ModulusFactor& f) { return f.multiplicity == 1 && f.factor.degree() == 1; });
}

// Positive (or negative) weights w_i with V = {f : sum w_i f(r_i) = 0}, if V is such a hyperplane.
bool is_atomic_hyperplane(const CofiniteSubspace& v) {
  const std::size_t n = v.dimension();
  if (n == 0 || !split_squarefree(v) || static_cast<std::size_t>(v.span().dimension()) + 1 != n) return false;
  const RMatrix annihilator = nullspace(v.span().basis());
  if (annihilator.cols() != 1) return false;
  std::vector<Rational> roots;
  for (const auto& f : v.factors()) roots.push_back(-f.factor.coeffs()[0]);
  int sign = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    QPoly lagrange = QPoly::t_power(0);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      lagrange *= QPoly({-roots[j], Rational(1)}) * (roots[i] - roots[j]).inverse();
    }
    const RVector coords = to_vector(lagrange, static_cast<Index>(n));
    Rational weight;
    for (Index k = 0; k < coords.size(); ++k) weight += coords(k) * annihilator(k, 0);
    if (weight.is_zero()) return false;
    if (sign == 0) sign = weight.sign();
    if (weight.sign() != sign) return false;
  }
  return true;
}

// A b violating the absorption property for a, or nullopt when a is not a witness.
std::optional<QPoly> refute(const CofiniteSubspace& v, const QPoly& radical_iv, const QPoly& candidate) {
  const QPoly a = v.reduce(candidate);
  if ((a % radical_iv).is_zero()) return std::nullopt;
  if (!radical_member_cofinite(v, a)) return std::nullopt;
  // Absorption is linear in b and automatic on (g), so the basis 1, ..., t^(D-1) suffices.
  for (std::size_t j = 0; j < v.dimension(); ++j) {
    const QPoly b = QPoly::t_power(j);
    if (!eventually_absorbs(v, a, b)) return b;
  }
  return std::nullopt;
}

struct SearchHit {
  std::size_t index;
  QPoly a;
  QPoly b;
};

// First candidate (in list order) that refutes, evaluated on `jobs` threads.
std::optional<SearchHit> search(const CofiniteSubspace& v, const QPoly& radical_iv, const std::vector<QPoly>& cands,
                                unsigned jobs) {
  std::vector<std::optional<QPoly>> results(cands.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < cands.size(); i += step) results[i] = refute(v, radical_iv, cands[i]);
  };
  if (jobs <= 1 || cands.size() < 2) {
    for (std::size_t i = 0; i < cands.size(); ++i) {
      results[i] = refute(v, radical_iv, cands[i]);
      if (results[i]) return SearchHit{i, v.reduce(cands[i]), *results[i]};
    }
    return std::nullopt;
  }
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(jobs, cands.size());
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (results[i]) return SearchHit{i, v.reduce(cands[i]), *results[i]};
  }
  return std::nullopt;
}

}  // namespace

CofiniteSubspace::CofiniteSubspace(std::vector<ModulusFactor> factors,
                                   const std::vector<std::vector<Rational>>& vbar_basis)
    : factors_(normalize_factors(std::move(factors), unverified_)),
      modulus_(product(factors_)),
      vbar_basis_(vbar_basis),
      span_(static_cast<Index>(modulus_.degree()), to_rvectors(vbar_basis, static_cast<std::size_t>(modulus_.degree()))) {
  if (static_cast<std::size_t>(span_.dimension()) != vbar_basis_.size()) {
    throw MathError(ErrorCode::BadInput, "V-bar vectors are linearly dependent");
  }
}

CofiniteSubspace CofiniteSubspace::ideal(std::vector<ModulusFactor> factors) {
  return CofiniteSubspace(std::move(factors), {});
}

RVector CofiniteSubspace::coordinates(const QPoly& f) const {
  return to_vector(reduce(f), static_cast<Index>(dimension()));
}

bool CofiniteSubspace::contains(const QPoly& f) const { return span_.contains(coordinates(f)); }

MembershipOracle CofiniteSubspace::oracle() const {
  return [self = *this](const QPoly& f) { return self.contains(f); };
}

CofiniteSubspace atomic_hyperplane(const std::vector<Rational>& points, const std::vector<Rational>& weights) {
  if (points.empty() || points.size() != weights.size()) {
    throw MathError(ErrorCode::BadWeight, "atomic measure needs matching points and weights");
  }
  std::vector<ModulusFactor> factors;
  for (const auto& r : points) factors.push_back({QPoly({-r, Rational(1)}), 1});
  const auto n = static_cast<Index>(points.size());
  // Row functional f -> sum_i w_i f(r_i) on coefficient vectors; V-bar is its kernel.
  RMatrix functional = RMatrix::Constant(1, n, Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational power(1);
    for (Index j = 0; j < n; ++j) {
      functional(0, j) += weights[i] * power;
      power *= points[i];
    }
  }
  const RMatrix kernel = nullspace(functional);
  std::vector<std::vector<Rational>> basis;
  for (Index c = 0; c < kernel.cols(); ++c) {
    basis.emplace_back(kernel.col(c).data(), kernel.col(c).data() + n);
  }
  return CofiniteSubspace(std::move(factors), basis);
}

bool radical_probe(const MembershipOracle& in_v, const QPoly& f, std::size_t lo, std::size_t hi) {
  if (lo > hi) throw MathError(ErrorCode::BadInput, "empty window");
  QPoly power = pow(f, lo);
  for (std::size_t m = lo; m <= hi; ++m) {
    if (!in_v(power)) return false;
    power *= f;
  }
  return true;
}

std::optional<std::size_t> escape_exponent(const OperatorSpec& op, const QPoly& f, std::size_t budget) {
  if (f.is_zero()) throw MathError(ErrorCode::ZeroInput, "escape exponent of 0");
  QPoly power = f;
  for (std::size_t m = 1; m <= budget; ++m) {
    if (!member(op, power).member) return m;
    power *= f;
  }
  return std::nullopt;
}

QPoly largest_ideal(const CofiniteSubspace& v) {
  const std::size_t n = v.dimension();
  const auto& factors = v.factors();
  std::vector<std::size_t> exps(factors.size(), 0);
  QPoly best;
  while (true) {
    QPoly divisor = QPoly::t_power(0);
    for (std::size_t i = 0; i < factors.size(); ++i) divisor *= pow(factors[i].factor, exps[i]);
    const auto deg = static_cast<std::size_t>(divisor.degree());
    bool inside = true;
    for (std::size_t j = 0; j + deg < n && inside; ++j) inside = v.contains(shift_up(divisor, j));
    if (inside) best = gcd(best, divisor);

    std::size_t i = 0;
    while (i < factors.size() && exps[i] == factors[i].multiplicity) exps[i++] = 0;
    if (i == factors.size()) break;
    ++exps[i];
  }
  return best;
}

// Powers of a in the D-dimensional algebra Q[t]/(g) satisfy the recurrence
// given by the minimal polynomial chi of multiplication by a. Writing
// chi = X^e psi with psi(0) != 0 (e <= D), the sequence a^m b is reversible
// for m >= e with order deg psi <= D. Its image modulo V-bar vanishes for all
// large m iff it vanishes for all m >= e, iff it vanishes on the D+1
// consecutive exponents [D, 2D].
bool eventually_absorbs(const CofiniteSubspace& v, const QPoly& a, const QPoly& b) {
  const std::size_t n = v.dimension();
  if (n == 0) return true;
  const QPoly base = v.reduce(a);
  QPoly power = v.reduce(pow(base, n) % v.modulus() * b);
  for (std::size_t m = n; m <= 2 * n; ++m) {
    if (!v.contains(power)) return false;
    power = v.reduce(power * base);
  }
  return true;
}

bool radical_member_cofinite(const CofiniteSubspace& v, const QPoly& f) {
  return eventually_absorbs(v, f, QPoly::t_power(0));
}

std::optional<std::size_t> definition_witness(const MembershipOracle& in_v, const QPoly& a, const QPoly& b,
                                              std::size_t budget) {
  std::vector<bool> inside(budget + 1, false);
  QPoly power = a * b;
  for (std::size_t m = 1; m <= budget; ++m) {
    inside[m] = in_v(power);
    power *= a;
  }
  if (budget == 0 || !inside[budget]) return std::nullopt;
  std::size_t n = budget;
  while (n > 1 && inside[n - 1]) --n;
  return n;
}

const char* to_string(MathieuStatus status) {
  switch (status) {
    case MathieuStatus::NotMathieu: return "NOT_MATHIEU";
    case MathieuStatus::MathieuExact: return "MATHIEU_EXACT";
    case MathieuStatus::ConsistentUpToBudget: return "CONSISTENT_UP_TO_BUDGET";
  }
  return "?";
}

MathieuVerdict mathieu_check(const CofiniteSubspace& v, const MathieuConfig& config) {
  MathieuVerdict verdict;
  verdict.budget = config;
  verdict.i_v_generator = largest_ideal(v);
  verdict.radical_iv_generator = squarefree_part(verdict.i_v_generator);
  if (!radical_member_cofinite(v, verdict.radical_iv_generator)) {
    throw MathError(ErrorCode::Degenerate, "radical of I_V not inside radical of V");
  }

  const std::size_t n = v.dimension();
  if (static_cast<std::size_t>(v.span().dimension()) + static_cast<std::size_t>(verdict.i_v_generator.degree()) == n) {
    verdict.status = MathieuStatus::MathieuExact;
    verdict.reason = "V is an ideal";
    return verdict;
  }
  if (is_atomic_hyperplane(v)) {
    verdict.status = MathieuStatus::MathieuExact;
    verdict.reason = "V is the hyperplane of an atomic measure with positive weights";
    return verdict;
  }

  // Structural candidates: idempotents for every nonempty subset of the
  // coprime prime-power factors, the full set (e = 1) first.
  std::vector<QPoly> candidates;
  const auto primitive = primitive_idempotents(v);
  const std::size_t k = primitive.size();
  if (k < 20) {
    const std::size_t full = (std::size_t{1} << k) - 1;
    auto idempotent = [&](std::size_t mask) {
      QPoly e;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) e += primitive[i];
      }
      return e;
    };
    candidates.push_back(idempotent(full));
    for (std::size_t mask = 1; mask < full; ++mask) candidates.push_back(idempotent(mask));
  }
  const std::size_t structural = candidates.size();
  candidates.insert(candidates.end(), config.candidates.begin(), config.candidates.end());

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<long> coeff(-config.height, config.height);
  const auto& basis = v.span().basis();
  for (std::size_t c = 0; c < config.max_candidates && basis.rows() > 0; ++c) {
    RVector combo = RVector::Constant(static_cast<Index>(n), Rational(0));
    for (Index r = 0; r < basis.rows(); ++r) combo += basis.row(r).transpose() * Rational(coeff(rng));
    candidates.push_back(to_poly(combo));
  }

  const auto hit = search(v, verdict.radical_iv_generator, candidates, std::max(1u, config.jobs));
  verdict.candidates_tried = hit ? hit->index + 1 : candidates.size();
  if (hit) {
    verdict.status = MathieuStatus::NotMathieu;
    verdict.witness = std::make_pair(hit->a, hit->b);
    verdict.reason = hit->index < structural ? "idempotent witness" : "searched witness";
    return verdict;
  }
  if (split_squarefree(v) && k < 20) {
    // Q[t]/(g) is a product of copies of Q; any a in r(V) outside r(I_V)
    // yields an idempotent (a value class of a) with the same property.
    verdict.status = MathieuStatus::MathieuExact;
    verdict.reason = "split squarefree modulus: idempotent search is complete";
    return verdict;
  }
  verdict.status = MathieuStatus::ConsistentUpToBudget;
  verdict.reason = "no witness within budget";
  return verdict;
}

}  // namespace mslab
