#include "mslab/linalg.hpp"

namespace mslab {

Echelon rref(RMatrix m) {
  Echelon out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = m(row, col).inverse();
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Index rank(const RMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
  if (b.size() != a.rows()) throw MathError(ErrorCode::BadInput, "solve: dimension mismatch");
  RMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RVector y = RVector::Constant(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    y(e.pivots[r]) = e.reduced(static_cast<Index>(r), a.cols());
  }
  return y;
}

RMatrix nullspace(const RMatrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < a.cols(); ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  RMatrix basis = RMatrix::Constant(a.cols(), static_cast<Index>(free.size()), Rational(0));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto col = static_cast<Index>(k);
    basis(free[k], col) = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], col) = -e.reduced(static_cast<Index>(r), free[k]);
    }
  }
  return basis;
}

RVector to_vector(const QPoly& p, Index n) {
  if (p.degree() >= n) throw MathError(ErrorCode::BadInput, "polynomial does not fit coefficient vector");
  RVector v = RVector::Constant(n, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<Index>(i)) = p.coeffs()[i];
  return v;
}

QPoly to_poly(const RVector& v) {
  std::vector<Rational> coeffs(v.data(), v.data() + v.size());
  return QPoly(std::move(coeffs));
}

RowSpan::RowSpan(Index ambient, const std::vector<RVector>& generators) : ambient_(ambient) {
  RMatrix m(static_cast<Index>(generators.size()), ambient);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient) throw MathError(ErrorCode::BadInput, "generator has wrong length");
    m.row(static_cast<Index>(i)) = generators[i].transpose();
  }
  Echelon e = rref(std::move(m));
  pivots_ = std::move(e.pivots);
  basis_ = e.reduced.topRows(static_cast<Index>(pivots_.size()));
}

RVector RowSpan::residual(RVector v) const {
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational factor = v(pivots_[r]);
    if (factor.is_zero()) continue;
    for (Index j = 0; j < ambient_; ++j) {
      const Rational& b = basis_(static_cast<Index>(r), j);
      if (!b.is_zero()) v(j) -= factor * b;
    }
  }
  return v;
}

bool RowSpan::contains(const RVector& v) const {
  const RVector r = residual(v);
  for (Index i = 0; i < r.size(); ++i) {
    if (!r(i).is_zero()) return false;
  }
  return true;
}

}  // namespace mslab
