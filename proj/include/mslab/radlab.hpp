#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mslab/linalg.hpp"
#include "mslab/operator.hpp"

namespace mslab {

using MembershipOracle = std::function<bool(const QPoly&)>;

struct ModulusFactor {
  QPoly factor;  // monic, irreducible over Q
  std::size_t multiplicity = 1;
};

/// A subspace V of Q[t] containing (g), stored as V/(g) inside Q[t]/(g) in
/// the basis 1, t, ..., t^(deg g - 1).
class CofiniteSubspace {
 public:
  /// Factors are made monic; repeated or reducible factors (checked up to
  /// degree 3) raise BAD_INPUT, as do dependent or wrongly sized vectors.
  CofiniteSubspace(std::vector<ModulusFactor> factors, const std::vector<std::vector<Rational>>& vbar_basis);

  /// The ideal (g) itself.
  static CofiniteSubspace ideal(std::vector<ModulusFactor> factors);

  const std::vector<ModulusFactor>& factors() const { return factors_; }
  const QPoly& modulus() const { return modulus_; }
  std::size_t dimension() const { return static_cast<std::size_t>(modulus_.degree()); }
  /// The spanning vectors as given.
  const std::vector<std::vector<Rational>>& vbar_basis() const { return vbar_basis_; }
  const RowSpan& span() const { return span_; }
  /// Factors of degree > 3 whose irreducibility was trusted, not checked.
  const std::vector<QPoly>& unverified_factors() const { return unverified_; }

  QPoly reduce(const QPoly& f) const { return f % modulus_; }
  RVector coordinates(const QPoly& f) const;
  bool contains(const QPoly& f) const;
  MembershipOracle oracle() const;

 private:
  std::vector<QPoly> unverified_;  // filled while normalizing factors_, so declared first
  std::vector<ModulusFactor> factors_;
  QPoly modulus_;
  std::vector<std::vector<Rational>> vbar_basis_;
  RowSpan span_;
};

/// V_B(sigma) for an atomic measure with rational points and weights, as a
/// cofinite subspace modulo prod (t - r_i).
CofiniteSubspace atomic_hyperplane(const std::vector<Rational>& points, const std::vector<Rational>& weights);

/// f^m in V for every m in [lo, hi]. A finite probe, not a radical decision.
bool radical_probe(const MembershipOracle& in_v, const QPoly& f, std::size_t lo, std::size_t hi);

/// Smallest m <= budget with f^m outside Im'D. Throws ZERO_INPUT for f = 0.
std::optional<std::size_t> escape_exponent(const OperatorSpec& op, const QPoly& f, std::size_t budget);

/// Monic generator of the largest ideal inside V.
QPoly largest_ideal(const CofiniteSubspace& v);

/// Exact decision of f in r(V).
bool radical_member_cofinite(const CofiniteSubspace& v, const QPoly& f);

/// True iff a^m b in V for all large m (exact; see radlab.cpp).
bool eventually_absorbs(const CofiniteSubspace& v, const QPoly& a, const QPoly& b);

/// Smallest N <= budget with a^m b in V for all m in [N, budget]; m starts at 1.
std::optional<std::size_t> definition_witness(const MembershipOracle& in_v, const QPoly& a, const QPoly& b,
                                              std::size_t budget);

struct MathieuConfig {
  long height = 2;                     // coefficient range [-height, height] for enumerated candidates
  std::size_t max_candidates = 2000;   // enumerated candidates beyond the structural ones
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::vector<QPoly> candidates;       // user-supplied candidates, tried after idempotents
};

enum class MathieuStatus { NotMathieu, MathieuExact, ConsistentUpToBudget };
const char* to_string(MathieuStatus status);

struct MathieuVerdict {
  MathieuStatus status = MathieuStatus::ConsistentUpToBudget;
  std::optional<std::pair<QPoly, QPoly>> witness;  // (a, b)
  QPoly i_v_generator;
  QPoly radical_iv_generator;
  std::string reason;
  std::size_t candidates_tried = 0;
  MathieuConfig budget;
};

/// Searches for a in r(V) outside r(I_V); by the radical criterion such an a
/// exists iff V is not Mathieu.
MathieuVerdict mathieu_check(const CofiniteSubspace& v, const MathieuConfig& config = {});

}  // namespace mslab
