#pragma once

#include <string>
#include <string_view>

#include "mslab/ring.hpp"

namespace mslab {

// Grammar (whitespace-insensitive):
//   poly  := term (('+'|'-') term)*      with an optional leading sign
//   term  := coeff ('*'? mono)? | mono
//   mono  := 't' ('^' uint)? | 'x' ('^' uint)? | 'x' ('^' uint)? '*' 't' ('^' uint)?
//   coeff := int ('/' uint)?
// Canonical output lists descending powers of t (then of x), lowest-terms
// coefficients, '^' exponents and no unary '+'.

std::string format_poly(const QPoly& p, char var = 't');
std::string format_poly(const RPoly& p);

/// Parses a polynomial in t over Q; any 'x' is a PARSE_ERROR.
QPoly parse_qpoly(std::string_view text);

/// Parses a polynomial in t whose coefficients live in `ring`.
RPoly parse_poly(std::string_view text, RingDescriptor ring);

/// Parses a ring element (no 't' allowed).
RingElement parse_ring_element(std::string_view text, RingDescriptor ring);

}  // namespace mslab
