#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "mslab/poly.hpp"
#include "mslab/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mslab::Rational> : GenericNumTraits<mslab::Rational> {
  using Real = mslab::Rational;
  using NonInteger = mslab::Rational;
  using Literal = mslab::Rational;
  using Nested = mslab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace mslab {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

struct Echelon {
  RMatrix reduced;             // reduced row echelon form
  std::vector<Index> pivots;   // pivot column of each nonzero row
};

/// Exact Gauss-Jordan elimination; pivots are taken leftmost-first.
Echelon rref(RMatrix m);

Index rank(const RMatrix& m);

/// A solution of a*y = b with every free variable set to zero, if one exists.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);

/// Basis of {y : a*y = 0} as columns.
RMatrix nullspace(const RMatrix& a);

/// Coefficient vector (p_0, ..., p_{n-1}); throws if deg p >= n.
RVector to_vector(const QPoly& p, Index n);
QPoly to_poly(const RVector& v);

/// Span of a set of row vectors, kept in reduced echelon form for membership tests.
class RowSpan {
 public:
  RowSpan(Index ambient, const std::vector<RVector>& generators);

  Index ambient() const { return ambient_; }
  Index dimension() const { return static_cast<Index>(pivots_.size()); }
  /// Residual of v after eliminating every pivot coordinate; zero iff v is in the span.
  RVector residual(RVector v) const;
  bool contains(const RVector& v) const;
  /// Rows of the echelon basis.
  const RMatrix& basis() const { return basis_; }

 private:
  Index ambient_;
  RMatrix basis_;
  std::vector<Index> pivots_;
};

}  // namespace mslab
