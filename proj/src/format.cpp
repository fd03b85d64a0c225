#include "mslab/format.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace mslab {

namespace {

struct Term {
  Rational coeff;
  std::string mono;  // empty for constants
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    const bool negative = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << mag;
    } else if (mag.is_one()) {
      out << mono;
    } else {
      out << mag << '*' << mono;
    }
  }
  return out.str();
}

std::string power_string(char var, std::size_t n) {
  if (n == 0) return {};
  std::string s(1, var);
  if (n > 1) s += "^" + std::to_string(n);
  return s;
}

// Monomial x^i t^j -> coefficient.
using TermMap = std::map<std::pair<std::size_t, std::size_t>, Rational>;

class Parser {
 public:
  Parser(std::string_view text, bool allow_x, bool allow_t)
      : text_(text), allow_x_(allow_x), allow_t_(allow_t) {}

  TermMap parse() {
    TermMap terms;
    skip();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    Rational sign(1);
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = Rational(-1);
      ++pos_;
    }
    parse_term(sign, terms);
    for (;;) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      ++pos_;
      parse_term(Rational(c == '-' ? -1 : 1), terms);
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t exponent() {
    skip();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    const std::string d = digits();
    if (d.size() > 6) throw ParseError(pos_, "exponent too large");
    return static_cast<std::size_t>(std::stoul(d));
  }

  bool next_is_var() {
    skip();
    return !at_end() && (peek() == 't' || peek() == 'x');
  }

  void parse_term(const Rational& sign, TermMap& terms) {
    skip();
    Rational coeff(1);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den(1);
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError(pos_, "zero denominator");
      }
      coeff = Rational(num, den);
      have_coeff = true;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        if (!next_is_var()) throw ParseError(pos_, "expected monomial after '*'");
      }
    }
    std::size_t xp = 0;
    std::size_t tp = 0;
    if (next_is_var()) {
      if (peek() == 'x') {
        if (!allow_x_) throw ParseError(pos_, "coefficient variable x not allowed in this ring");
        ++pos_;
        xp = exponent();
        skip();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip();
          if (at_end() || peek() != 't') throw ParseError(pos_, "expected 't' after 'x*'");
        }
      }
      skip();
      if (!at_end() && peek() == 't') {
        if (!allow_t_) throw ParseError(pos_, "variable t not allowed here");
        ++pos_;
        tp = exponent();
      }
    } else if (!have_coeff) {
      throw ParseError(pos_, "expected coefficient or monomial");
    }
    terms[{xp, tp}] += sign * coeff;
  }

  std::string_view text_;
  bool allow_x_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_poly(const QPoly& p, char var) {
  std::vector<Term> terms;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!p.coeffs()[i].is_zero()) terms.push_back({p.coeffs()[i], power_string(var, i)});
  }
  return join_terms(terms);
}

std::string format_poly(const RPoly& p) {
  std::vector<Term> terms;
  for (std::size_t j = p.size(); j-- > 0;) {
    const QPoly& c = p.coeffs()[j].value();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c.coeffs()[i].is_zero()) continue;
      std::string mono = power_string('x', i);
      const std::string tpart = power_string('t', j);
      if (!mono.empty() && !tpart.empty()) mono += '*';
      mono += tpart;
      terms.push_back({c.coeffs()[i], std::move(mono)});
    }
  }
  return join_terms(terms);
}

QPoly parse_qpoly(std::string_view text) {
  const TermMap terms = Parser(text, false, true).parse();
  QPoly out;
  for (const auto& [mono, c] : terms) out.add_term(c, mono.second);
  return out;
}

RPoly parse_poly(std::string_view text, RingDescriptor ring) {
  const TermMap terms = Parser(text, ring.has_x(), true).parse();
  RPoly out(ring);
  for (const auto& [mono, c] : terms) {
    out.add_term(RingElement(ring, QPoly::monomial(c, mono.first)), mono.second);
  }
  return out;
}

RingElement parse_ring_element(std::string_view text, RingDescriptor ring) {
  const TermMap terms = Parser(text, ring.has_x(), false).parse();
  QPoly value;
  for (const auto& [mono, c] : terms) value.add_term(c, mono.first);
  return RingElement(ring, std::move(value));
}

}  // namespace mslab
