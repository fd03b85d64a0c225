#pragma once

#include <optional>
#include <string>

#include "mslab/poly.hpp"

namespace mslab {

/// Element of a coefficient ring Q, Q[x] or Q[x]/(x^k), stored as a
/// polynomial in x that is truncated to the ring's length cap.
class RingElement {
 public:
  RingElement() : ring_(RingDescriptor::qq_poly()) {}
  explicit RingElement(RingDescriptor ring) : ring_(ring) {}
  RingElement(RingDescriptor ring, const Rational& constant);
  RingElement(RingDescriptor ring, QPoly value);

  /// The generator x of Q[x] or Q[x]/(x^k).
  static RingElement x(RingDescriptor ring);

  const RingDescriptor& ring() const { return ring_; }
  const QPoly& value() const { return value_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_unit() const;
  /// Largest n with x^n dividing the element; the cap (or -1 when unbounded) for zero.
  std::ptrdiff_t x_valuation() const;

  std::string to_string() const;

  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);
  RingElement& operator*=(const Rational& rhs);

  friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
  friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
  friend RingElement operator*(RingElement lhs, const RingElement& rhs) { return lhs *= rhs; }
  friend RingElement operator*(RingElement lhs, const Rational& rhs) { return lhs *= rhs; }
  friend RingElement operator-(RingElement x) {
    x.value_ = -x.value_;
    return x;
  }
  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  void truncate();

  RingDescriptor ring_;
  QPoly value_;
};

template <>
struct CoeffTraits<RingElement> {
  static RingDescriptor default_ring() { return RingDescriptor::qq_poly(); }
  static RingElement zero(const RingDescriptor& ring) { return RingElement(ring); }
  static RingElement one(const RingDescriptor& ring) { return RingElement(ring, Rational(1)); }
  static RingDescriptor ring_of(const RingElement& c) { return c.ring(); }
};

using RPoly = Poly<RingElement>;

/// Returns c with b = a*c, or nullopt when no such c exists. Over Q[x]/(x^k)
/// the minimal-degree solution is returned. Throws AMBIGUOUS for a = b = 0.
std::optional<RingElement> exact_divide(const RingElement& b, const RingElement& a);

/// Generator of the radical of (a): a/gcd(a, a') made monic. Over Q this is 1.
RingElement squarefree_part(const RingElement& a);

/// Monic gcd in Q[x] (or 1/0 over Q).
RingElement gcd(const RingElement& a, const RingElement& b);

/// Lifts a Q[t] polynomial to one with constant coefficients in the given ring.
RPoly lift(const QPoly& p, RingDescriptor ring);

/// Inverse of lift; throws RING_MISMATCH if some coefficient involves x.
QPoly lower(const RPoly& p);

}  // namespace mslab
