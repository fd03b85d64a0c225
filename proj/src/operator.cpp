#include "mslab/operator.hpp"

#include <map>
#include <sstream>

#include "mslab/format.hpp"

namespace mslab {

namespace {

std::map<std::string, std::string> parse_keyvals(std::string_view body, std::size_t offset) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(offset + pos, "expected key=value");
    std::string key(item.substr(0, eq));
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    if (!out.emplace(key, std::string(item.substr(eq + 1))).second) {
      throw ParseError(offset + pos, "duplicate key '" + key + "'");
    }
    pos = comma + 1;
  }
  return out;
}

QPoly linear(long c0, long c1) { return QPoly{Rational(c0), Rational(c1)}; }

}  // namespace

OperatorSpec parse_operator(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "mono") {
    MonomialOperator op;
    if (!body.empty()) {
      for (const auto& [key, value] : parse_keyvals(body, colon + 1)) {
        if (key == "c") op.c = Rational::parse(value);
        else if (key == "alpha") op.alpha = Rational::parse(value);
        else if (key == "lambda") op.lambda = Rational::parse(value);
        else if (key == "d") {
          const Rational d = Rational::parse(value);
          if (!d.is_integer() || d.sign() < 0) throw ParseError(colon + 1, "d must be a non-negative integer");
          op.d = d.numerator().get_ui();
        } else {
          throw ParseError(colon + 1, "unknown operator key '" + key + "'");
        }
      }
    }
    return op;
  }
  if (kind == "jacobi") {
    JacobiOperator op;
    if (!body.empty()) {
      for (const auto& [key, value] : parse_keyvals(body, colon + 1)) {
        if (key == "alpha") op.alpha = Rational::parse(value);
        else if (key == "beta") op.beta = Rational::parse(value);
        else throw ParseError(colon + 1, "unknown operator key '" + key + "'");
      }
    }
    return op;
  }
  throw ParseError(0, "operator must start with 'mono:' or 'jacobi:'");
}

std::string to_string(const OperatorSpec& op) {
  std::ostringstream out;
  if (const auto* m = std::get_if<MonomialOperator>(&op)) {
    out << "mono:c=" << m->c << ",alpha=" << m->alpha << ",lambda=" << m->lambda << ",d=" << m->d;
  } else {
    const auto& j = std::get<JacobiOperator>(op);
    out << "jacobi:alpha=" << j.alpha << ",beta=" << j.beta;
  }
  return out.str();
}

bool admissible(const OperatorSpec& op, const QPoly& h) {
  if (h.is_zero()) return true;
  if (const auto* m = std::get_if<MonomialOperator>(&op)) {
    return m->alpha.is_zero() || h.coeffs()[0].is_zero();
  }
  const auto& j = std::get<JacobiOperator>(op);
  if (!j.alpha.is_zero() && !evaluate(h, Rational(1)).is_zero()) return false;
  if (!j.beta.is_zero() && !evaluate(h, Rational(-1)).is_zero()) return false;
  return true;
}

QPoly apply(const OperatorSpec& op, const QPoly& h) {
  if (!admissible(op, h)) throw MathError(ErrorCode::BadInput, "D(h) is not a polynomial");
  if (const auto* m = std::get_if<MonomialOperator>(&op)) {
    QPoly out = derivative(h) * m->c;
    if (!m->alpha.is_zero()) out += shift_down(h, 1) * m->alpha;
    out -= shift_up(h, m->d) * m->lambda;
    return out;
  }
  const auto& j = std::get<JacobiOperator>(op);
  QPoly out = derivative(h);
  if (!j.alpha.is_zero()) out -= euclid_divmod(h, linear(1, -1)).quotient * j.alpha;
  if (!j.beta.is_zero()) out += euclid_divmod(h, linear(1, 1)).quotient * j.beta;
  return out;
}

}  // namespace mslab
