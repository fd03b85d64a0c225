#include "mslab/ring.hpp"

#include "mslab/format.hpp"

namespace mslab {

RingElement::RingElement(RingDescriptor ring, const Rational& constant)
    : ring_(ring), value_(QPoly::constant(constant)) {}

RingElement::RingElement(RingDescriptor ring, QPoly value) : ring_(ring), value_(std::move(value)) {
  if (ring_.kind == RingDescriptor::Kind::QQ && value_.degree() > 0) {
    throw MathError(ErrorCode::RingMismatch, "element involving x in ring QQ");
  }
  truncate();
}

RingElement RingElement::x(RingDescriptor ring) {
  if (!ring.has_x()) throw MathError(ErrorCode::RingMismatch, "x is not in QQ");
  return RingElement(ring, QPoly::t_power(1));
}

void RingElement::truncate() {
  const std::size_t cap = ring_.length_cap();
  if (cap != 0 && value_.size() > cap) {
    std::vector<Rational> coeffs(value_.coeffs().begin(),
                                 value_.coeffs().begin() + static_cast<std::ptrdiff_t>(cap));
    value_ = QPoly(std::move(coeffs));
  }
}

bool RingElement::is_unit() const {
  switch (ring_.kind) {
    case RingDescriptor::Kind::QQ: return !is_zero();
    case RingDescriptor::Kind::QQ_POLY: return value_.degree() == 0;
    case RingDescriptor::Kind::QQ_POLY_TRUNC: return !value_.coeff(0).is_zero();
  }
  return false;
}

std::ptrdiff_t RingElement::x_valuation() const {
  if (is_zero()) return ring_.length_cap() == 0 ? -1 : static_cast<std::ptrdiff_t>(ring_.length_cap());
  return static_cast<std::ptrdiff_t>(value_.low_degree());
}

std::string RingElement::to_string() const { return format_poly(value_, 'x'); }

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same_ring(ring_, rhs.ring_);
  value_ += rhs.value_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same_ring(ring_, rhs.ring_);
  value_ -= rhs.value_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
  require_same_ring(ring_, rhs.ring_);
  const std::size_t cap = ring_.length_cap();
  if (cap == 0 || value_.size() + rhs.value_.size() <= cap + 1) {
    value_ = value_ * rhs.value_;
    return *this;
  }
  // Truncated product: skip coefficients that would be discarded.
  std::vector<Rational> out(cap);
  for (std::size_t i = 0; i < value_.size() && i < cap; ++i) {
    for (std::size_t j = 0; j < rhs.value_.size() && i + j < cap; ++j) {
      out[i + j] += value_.coeffs()[i] * rhs.value_.coeffs()[j];
    }
  }
  value_ = QPoly(std::move(out));
  return *this;
}

RingElement& RingElement::operator*=(const Rational& rhs) {
  value_ *= rhs;
  return *this;
}

std::optional<RingElement> exact_divide(const RingElement& b, const RingElement& a) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) {
    if (b.is_zero()) throw MathError(ErrorCode::Ambiguous, "0/0 has every element as quotient");
    return std::nullopt;
  }
  const RingDescriptor ring = a.ring();
  if (ring.kind != RingDescriptor::Kind::QQ_POLY_TRUNC) {
    auto q = exact_divide(b.value(), a.value());
    if (!q) return std::nullopt;
    return RingElement(ring, *q);
  }
  // b = a*c in Q[x]/(x^k): write a = x^v a' with a'(0) != 0; then b needs
  // x^v | b and c is determined modulo x^(k-v) by a triangular solve.
  const std::size_t k = ring.trunc;
  const auto v = static_cast<std::size_t>(a.x_valuation());
  for (std::size_t i = 0; i < v; ++i) {
    if (!b.value().coeff(i).is_zero()) return std::nullopt;
  }
  const std::size_t n = k - v;
  const Rational inv0 = a.value().coeff(v).inverse();
  std::vector<Rational> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = b.value().coeff(v + j);
    for (std::size_t i = 1; i <= j; ++i) acc -= a.value().coeff(v + i) * c[j - i];
    c[j] = acc * inv0;
  }
  return RingElement(ring, QPoly(std::move(c)));
}

RingElement squarefree_part(const RingElement& a) {
  if (a.is_zero()) throw MathError(ErrorCode::ZeroInput, "squarefree part of zero");
  switch (a.ring().kind) {
    case RingDescriptor::Kind::QQ: return RingElement(a.ring(), Rational(1));
    case RingDescriptor::Kind::QQ_POLY: return RingElement(a.ring(), squarefree_part(a.value()));
    case RingDescriptor::Kind::QQ_POLY_TRUNC:
      // Radical of (a) in Q[x]/(x^k): (1) for units, (x) otherwise.
      return a.is_unit() ? RingElement(a.ring(), Rational(1)) : RingElement::x(a.ring());
  }
  return a;
}

RingElement gcd(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.ring().kind == RingDescriptor::Kind::QQ_POLY_TRUNC) {
    throw MathError(ErrorCode::BadInput, "gcd is only defined over QQ and QQ[x]");
  }
  return RingElement(a.ring(), gcd(a.value(), b.value()));
}

RPoly lift(const QPoly& p, RingDescriptor ring) {
  std::vector<RingElement> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs.emplace_back(ring, c);
  return RPoly(std::move(coeffs), ring);
}

QPoly lower(const RPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    if (c.value().degree() > 0) throw MathError(ErrorCode::RingMismatch, "coefficient involves x");
    coeffs.push_back(c.value().coeff(0));
  }
  return QPoly(std::move(coeffs));
}

}  // namespace mslab
