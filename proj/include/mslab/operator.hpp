#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "mslab/poly.hpp"

namespace mslab {

/// D = c*d/dt + alpha/t - lambda*t^d.
struct MonomialOperator {
  Rational c{1};
  Rational alpha{0};
  Rational lambda{1};
  std::size_t d = 0;

  friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;
};

/// D = d/dt - alpha/(1-t) + beta/(1+t).
struct JacobiOperator {
  Rational alpha{0};
  Rational beta{0};

  friend bool operator==(const JacobiOperator&, const JacobiOperator&) = default;
};

using OperatorSpec = std::variant<MonomialOperator, JacobiOperator>;

/// d/dt + alpha/t - t^d, the family with c = lambda = 1.
inline MonomialOperator unit_operator(std::size_t d, const Rational& alpha) {
  return MonomialOperator{Rational(1), alpha, Rational(1), d};
}
inline MonomialOperator hermite_operator() { return MonomialOperator{Rational(1), Rational(0), Rational(2), 1}; }
inline MonomialOperator laguerre_operator(const Rational& alpha) { return unit_operator(0, alpha); }

/// Reads "mono:c=1,alpha=1/2,lambda=1,d=2" or "jacobi:alpha=1,beta=2".
/// Omitted monomial keys default to c=1, alpha=0, lambda=1, d=0.
OperatorSpec parse_operator(std::string_view text);
std::string to_string(const OperatorSpec& op);

/// True iff D(h) is a polynomial, i.e. h respects the t^-1 / (1-+t)^-1 poles.
bool admissible(const OperatorSpec& op, const QPoly& h);

/// D(h); throws BAD_INPUT when h is not admissible.
QPoly apply(const OperatorSpec& op, const QPoly& h);

}  // namespace mslab
