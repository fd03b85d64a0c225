#pragma once

#include <optional>

#include "mslab/operator.hpp"

namespace mslab {

/// f = normal_form + D(witness).
struct ReductionResult {
  QPoly normal_form;
  QPoly witness;
  bool admissible = true;
};

/// Top-degree elimination of f modulo the image of D.
///
/// Monomial operators (lambda != 0) use D(t^n) = (c*n + alpha) t^(n-1) - lambda t^(n+d)
/// for n >= 1, so the normal form has degree <= d. For alpha = 0 the normal
/// form may still contain t^d, which lies in the image; `member` removes it.
/// Jacobi operators use D((1-t)^ea (1+t)^eb t^n) where ea, eb are 1 for
/// nonzero alpha, beta; the normal form is a constant when alpha*beta != 0
/// and zero otherwise.
///
/// Throws UNSUPPORTED_REDUCTION for lambda = 0 and DEGENERATE_DIAGONAL when
/// a leading coefficient of the image basis vanishes.
ReductionResult reduce(const OperatorSpec& op, const QPoly& f);

struct Membership {
  bool member = false;
  std::optional<QPoly> witness;  // D(*witness) == f when member
};

/// Exact decision of f in Im'D = Q[t] ∩ D(Q[t]).
Membership member(const OperatorSpec& op, const QPoly& f);

/// Constant term of the normal form of f.
Rational lzero(const MonomialOperator& op, const QPoly& f);

enum class ImageMeet { Zero, SpanTd, All };

struct ImStructure {
  ImageMeet s_cap_im = ImageMeet::Zero;
  bool one_in_image = false;
  std::optional<QPoly> one_witness;
};

/// Intersection of the image with the residue space, and whether 1 is hit.
ImStructure im_structure(const OperatorSpec& op);

const char* to_string(ImageMeet meet);

}  // namespace mslab
