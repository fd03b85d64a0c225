#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mslab/error.hpp"
#include "mslab/rational.hpp"
#include "mslab/ring_descriptor.hpp"

namespace mslab {

/// Customization point describing how a coefficient type relates to its ring.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static RingDescriptor default_ring() { return RingDescriptor::qq(); }
  static Rational zero(const RingDescriptor&) { return Rational(); }
  static Rational one(const RingDescriptor&) { return Rational(1); }
  static RingDescriptor ring_of(const Rational&) { return RingDescriptor::qq(); }
};

/// Dense univariate polynomial in t. coeffs()[i] is the coefficient of t^i.
/// The zero polynomial has no coefficients and degree kZeroDegree.
template <class C>
class Poly {
 public:
  using Scalar = C;
  static constexpr std::ptrdiff_t kZeroDegree = -1;

  Poly() : ring_(CoeffTraits<C>::default_ring()) {}
  explicit Poly(RingDescriptor ring) : ring_(ring) {}
  Poly(std::vector<C> coeffs, RingDescriptor ring) : ring_(ring), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_ring(CoeffTraits<C>::ring_of(c), ring_);
    trim();
  }
  explicit Poly(std::vector<C> coeffs)
      : Poly(std::move(coeffs), CoeffTraits<C>::default_ring()) {}
  Poly(std::initializer_list<C> coeffs) : Poly(std::vector<C>(coeffs)) {}

  static Poly constant(C value, RingDescriptor ring = CoeffTraits<C>::default_ring()) {
    return Poly(std::vector<C>{std::move(value)}, ring);
  }
  static Poly monomial(C value, std::size_t power,
                       RingDescriptor ring = CoeffTraits<C>::default_ring()) {
    std::vector<C> coeffs(power + 1, CoeffTraits<C>::zero(ring));
    coeffs[power] = std::move(value);
    return Poly(std::move(coeffs), ring);
  }
  /// t^power with unit coefficient.
  static Poly t_power(std::size_t power, RingDescriptor ring = CoeffTraits<C>::default_ring()) {
    return monomial(CoeffTraits<C>::one(ring), power, ring);
  }

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  C coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : CoeffTraits<C>::zero(ring_);
  }
  const C& leading() const {
    if (is_zero()) throw MathError(ErrorCode::ZeroInput, "leading coefficient of zero");
    return coeffs_.back();
  }
  /// Index of the lowest nonzero coefficient.
  std::size_t low_degree() const {
    if (is_zero()) throw MathError(ErrorCode::ZeroInput, "low degree of zero");
    std::size_t i = 0;
    while (coeffs_[i].is_zero()) ++i;
    return i;
  }

  Poly& operator+=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CoeffTraits<C>::zero(ring_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CoeffTraits<C>::zero(ring_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
  Poly& operator*=(const C& scalar) {
    require_same_ring(CoeffTraits<C>::ring_of(scalar), ring_);
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator-(Poly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend Poly operator*(Poly p, const C& scalar) { return p *= scalar; }
  friend Poly operator*(const C& scalar, Poly p) { return p *= scalar; }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    require_same_ring(lhs.ring_, rhs.ring_);
    if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.ring_);
    std::vector<C> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, CoeffTraits<C>::zero(lhs.ring_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        if (rhs.coeffs_[j].is_zero()) continue;
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Poly(std::move(out), lhs.ring_);
  }

  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.ring_ == rhs.ring_ && lhs.coeffs_ == rhs.coeffs_;
  }

  /// Adds value * t^power in place.
  void add_term(const C& value, std::size_t power) {
    require_same_ring(CoeffTraits<C>::ring_of(value), ring_);
    if (value.is_zero()) return;
    if (power >= coeffs_.size()) coeffs_.resize(power + 1, CoeffTraits<C>::zero(ring_));
    coeffs_[power] += value;
    trim();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  RingDescriptor ring_;
  std::vector<C> coeffs_;
};

using QPoly = Poly<Rational>;

/// p^exponent by repeated squaring.
template <class C>
Poly<C> pow(Poly<C> base, unsigned long exponent) {
  Poly<C> result = Poly<C>::t_power(0, base.ring());
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <class C>
Poly<C> derivative(const Poly<C>& p) {
  if (p.degree() < 1) return Poly<C>(p.ring());
  std::vector<C> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p.coeffs()[i] * Rational(static_cast<long>(i)));
  return Poly<C>(std::move(out), p.ring());
}

/// p * t^k.
template <class C>
Poly<C> shift_up(const Poly<C>& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<C> out(k, CoeffTraits<C>::zero(p.ring()));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly<C>(std::move(out), p.ring());
}

/// p / t^k; precondition: t^k divides p.
template <class C>
Poly<C> shift_down(const Poly<C>& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  for (std::size_t i = 0; i < std::min(k, p.size()); ++i) {
    if (!p.coeffs()[i].is_zero()) throw MathError(ErrorCode::BadInput, "t^k does not divide polynomial");
  }
  if (k >= p.size()) return Poly<C>(p.ring());
  return Poly<C>(std::vector<C>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()),
                 p.ring());
}

template <class C>
C evaluate(const Poly<C>& p, const C& at) {
  C acc = CoeffTraits<C>::zero(p.ring());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * at + *it;
  return acc;
}

/// Substitutes scale*t for t: sum p_n scale^n t^n.
template <class C>
Poly<C> substitute_scaled(const Poly<C>& p, const C& scale) {
  std::vector<C> out;
  out.reserve(p.size());
  C power = CoeffTraits<C>::one(p.ring());
  for (const auto& c : p.coeffs()) {
    out.push_back(c * power);
    power = power * scale;
  }
  return Poly<C>(std::move(out), p.ring());
}

// ---- Field-only operations over Q[t] -----------------------------------

struct DivMod {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division f = q*g + r with deg r < deg g.
DivMod euclid_divmod(const QPoly& f, const QPoly& g);

QPoly operator%(const QPoly& f, const QPoly& g);

QPoly monic(const QPoly& p);

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Exact quotient f/g, or nullopt when g does not divide f.
std::optional<QPoly> exact_divide(const QPoly& f, const QPoly& g);

/// a / gcd(a, a'), made monic; generates the radical of (a).
QPoly squarefree_part(const QPoly& a);

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
/// Throws BUDGET_EXHAUSTED when the integer-cleared end coefficients are too
/// large for divisor enumeration.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace mslab
