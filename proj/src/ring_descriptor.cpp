#include "mslab/ring_descriptor.hpp"

#include "mslab/error.hpp"

namespace mslab {

RingDescriptor RingDescriptor::qq_poly_trunc(std::size_t k) {
  if (k < 1) throw MathError(ErrorCode::BadInput, "QQ_POLY_TRUNC needs k >= 1");
  return {Kind::QQ_POLY_TRUNC, k};
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case Kind::QQ: return "QQ";
    case Kind::QQ_POLY: return "QQ[x]";
    case Kind::QQ_POLY_TRUNC: return "QQ[x]/(x^" + std::to_string(trunc) + ")";
  }
  return "?";
}

void require_same_ring(const RingDescriptor& lhs, const RingDescriptor& rhs) {
  if (!(lhs == rhs)) {
    throw MathError(ErrorCode::RingMismatch, lhs.to_string() + " vs " + rhs.to_string());
  }
}

}  // namespace mslab
