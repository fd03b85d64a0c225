#pragma once

#include <cstddef>
#include <string>

namespace mslab {

/// Coefficient ring of an algebra element: Q, Q[x], or the truncation Q[x]/(x^k).
struct RingDescriptor {
  enum class Kind { QQ, QQ_POLY, QQ_POLY_TRUNC };

  Kind kind = Kind::QQ;
  std::size_t trunc = 0;  // k for QQ_POLY_TRUNC, otherwise 0

  static RingDescriptor qq() { return {Kind::QQ, 0}; }
  static RingDescriptor qq_poly() { return {Kind::QQ_POLY, 0}; }
  static RingDescriptor qq_poly_trunc(std::size_t k);

  bool is_field() const { return kind == Kind::QQ; }
  bool is_domain() const { return kind != Kind::QQ_POLY_TRUNC; }
  bool has_x() const { return kind != Kind::QQ; }

  /// Number of x-coefficients an element may carry; 0 means unbounded.
  std::size_t length_cap() const { return kind == Kind::QQ ? 1 : trunc; }

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

void require_same_ring(const RingDescriptor& lhs, const RingDescriptor& rhs);

}  // namespace mslab
