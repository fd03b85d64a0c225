#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mslab/poly.hpp"
#include "mslab/valuation.hpp"

namespace mslab {

/// [qn, n]_alpha! = ((q-1)n + 1 + alpha) ... (n + 1 + alpha)(1 + alpha); q = 0 gives 1.
Rational bracket_factorial(std::size_t q, std::size_t n, const Rational& alpha);

/// L0(t^(q(d+1)+i)) for D = d/dt + alpha/t - t^d: zero for i > 0, else [q(d+1), d+1]_alpha!.
Rational lzero_monomial(std::size_t q, std::size_t i, std::size_t d, const Rational& alpha);

/// Nonzero coefficients phi_k of f^(m(d+1)) with k > s*m*(d+1), where f = t^s + (higher terms).
/// Throws NOT_NORMALIZED unless f(0) = 0 and the lowest coefficient is 1.
std::map<std::size_t, Rational> phi_expansion(const QPoly& f, std::size_t m, std::size_t d);

/// b_i = ((sm+i-1)(d+1)+1+alpha) ... (sm(d+1)+1+alpha) for i = 1..i_max.
std::vector<Rational> b_products(std::size_t s, std::size_t m, std::size_t d, const Rational& alpha,
                                 std::size_t i_max);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// p-adic valuation; throws NOT_PRIME.
Valuation vp(const Rational& x, std::uint64_t p);

struct PrimeHit {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
};

/// Smallest m >= m_min (trying at most `budget` values) with a*m + b prime.
/// Throws NOT_COPRIME when gcd(a, b) != 1.
std::optional<PrimeHit> dirichlet_prime(std::int64_t a, std::int64_t b, std::uint64_t m_min,
                                        std::uint64_t budget);

/// True iff alpha = -(1 + (d+1)k) for some k >= 0.
bool in_exceptional_set(std::size_t d, const Rational& alpha);

/// Machine-checkable refutation of f^(m(d+1)) in Im'D for D = d/dt + alpha/t - t^d.
struct Certificate {
  QPoly f;
  std::size_t d = 0;
  Rational alpha;
  std::size_t s = 0;
  std::size_t m = 0;
  std::uint64_t prime = 0;
  // alpha = r/q in lowest terms; s(d+1) = s0*s_star, q + r = s0*h, prime = s_star*q*m + h.
  Integer q;
  Integer r;
  Integer s0;
  Integer s_star;
  Integer h;
  std::vector<Rational> b_values;        // b_1..b_imax
  std::vector<long> bi_valuations;       // v_p(b_i) > 0
  std::vector<Rational> phi_values;      // phi_{(sm+i)(d+1)}, i = 1..imax
  std::vector<Valuation> phi_valuations; // v_p(phi) >= 0
  Rational bracket;                      // [sm(d+1), d+1]_alpha!
  Rational lzero;                        // L0(f^(m(d+1)))
  std::size_t conclusion_exponent = 0;   // m(d+1)
};

inline constexpr std::uint64_t kDefaultPrimeBudget = 1'000'000;

/// Searches the smallest m whose prime p_m makes every b_i divisible by p while
/// every phi stays p-integral, and records the resulting nonvanishing identity
///   L0(f^(m(d+1))) = [sm(d+1), d+1]_alpha! * (1 + sum_i b_i phi_{(sm+i)(d+1)}).
/// Errors: PRECONDITION_VIOLATED for (d, alpha) = (0, 0) or alpha in -(1+(d+1)N),
/// NOT_NORMALIZED for f without lowest term t^s (s >= 1), BUDGET_EXHAUSTED.
Certificate certificate_nonmembership(const QPoly& f, std::size_t d, const Rational& alpha,
                                      std::uint64_t budget = kDefaultPrimeBudget);

/// Recomputes every field of the certificate independently and re-checks the identity.
bool verify_certificate(const Certificate& cert);

}  // namespace mslab
