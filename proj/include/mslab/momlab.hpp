#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mslab/operator.hpp"

namespace mslab {

/// e^(-t^2) on the real line.
struct HermiteWeight {
  friend bool operator==(const HermiteWeight&, const HermiteWeight&) = default;
};
/// t^alpha e^(-t) on (0, inf), alpha > -1.
struct LaguerreWeight {
  Rational alpha;
  friend bool operator==(const LaguerreWeight&, const LaguerreWeight&) = default;
};
/// (1-t)^alpha (1+t)^beta on (-1, 1), alpha, beta > -1.
struct JacobiWeight {
  Rational alpha;
  Rational beta;
  friend bool operator==(const JacobiWeight&, const JacobiWeight&) = default;
};
/// sum_i weights[i] * delta(points[i]); distinct points, positive weights.
struct AtomicWeight {
  std::vector<Rational> points;
  std::vector<Rational> weights;
  friend bool operator==(const AtomicWeight&, const AtomicWeight&) = default;
};

using WeightSpec = std::variant<HermiteWeight, LaguerreWeight, JacobiWeight, AtomicWeight>;

/// Throws BAD_WEIGHT for out-of-range parameters.
void validate(const WeightSpec& w);

/// Reads "hermite", "laguerre:alpha=1/2", "jacobi:alpha=0,beta=0" or
/// "atomic:points=0,1;weights=1,1".
WeightSpec parse_weight(std::string_view text);
std::string to_string(const WeightSpec& w);

/// Normalized moments nu_n = mu_n / mu_0 for n <= max_degree, computed once.
class MomentTable {
 public:
  MomentTable(WeightSpec weight, std::size_t max_degree);

  const WeightSpec& weight() const { return weight_; }
  std::size_t max_degree() const { return moments_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return moments_.at(n); }

  /// sum_n f_n nu_n.
  Rational integrate(const QPoly& f) const;

 private:
  WeightSpec weight_;
  std::vector<Rational> moments_;
};

Rational normalized_moment(const WeightSpec& w, std::size_t n);

/// f in V_B(sigma), i.e. the normalized integral of f vanishes.
bool vb_member(const WeightSpec& w, const QPoly& f);

/// <f, g> / mu_0; conjugation is trivial over Q.
Rational inner_product(const WeightSpec& w, const QPoly& f, const QPoly& g);

/// Monic orthogonal polynomial of degree n; throws DEGENERATE when the Gram
/// matrix of 1, t, ..., t^n is singular.
QPoly orthopoly(const WeightSpec& w, std::size_t n);

/// True iff op is the operator w^-1 * d/dt * w for the weight w.
bool matched_pair(const WeightSpec& w, const OperatorSpec& op);

struct EquivalenceReport {
  bool one_in_image = false;
  bool asserted = false;        // false when 1 is in the image: no equivalence claimed
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool all_agree() const { return violations.empty(); }
};

/// Compares member(op, f) with vb_member(w, f) on t^n and t^n - nu_n for
/// n <= deg_bound. Throws BAD_PAIR unless (w, op) is matched.
EquivalenceReport equivalence_check(const WeightSpec& w, const OperatorSpec& op, std::size_t deg_bound);

}  // namespace mslab
