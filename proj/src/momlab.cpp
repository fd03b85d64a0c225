#include "mslab/momlab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mslab/format.hpp"
#include "mslab/opimage.hpp"

namespace mslab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_above_minus_one(const Rational& value, const char* name) {
  if (value <= Rational(-1)) throw MathError(ErrorCode::BadWeight, std::string(name) + " must exceed -1");
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Rational parse_value(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const MathError& e) {
    throw ParseError(0, e.what());
  }
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_value(item));
  return out;
}

std::vector<Rational> compute_moments(const WeightSpec& w, std::size_t max_degree) {
  std::vector<Rational> nu(max_degree + 1);
  std::visit(Overloaded{
                 [&](const HermiteWeight&) {
                   nu[0] = Rational(1);
                   for (std::size_t n = 1; n <= max_degree; ++n) {
                     nu[n] = n % 2 == 1 ? Rational(0)
                                        : Rational(static_cast<long>(n) - 1, 2) * nu[n - 2];
                   }
                 },
                 [&](const LaguerreWeight& lw) {
                   nu[0] = Rational(1);
                   for (std::size_t n = 1; n <= max_degree; ++n) {
                     nu[n] = (Rational(static_cast<long>(n)) + lw.alpha) * nu[n - 1];
                   }
                 },
                 [&](const JacobiWeight& jw) {
                   // t = 1 - 2u with u ~ Beta(alpha + 1, beta + 1):
                   // E[u^k] = prod_{j=1..k} (alpha + j) / (alpha + beta + 1 + j).
                   std::vector<Rational> beta_moment(max_degree + 1);
                   beta_moment[0] = Rational(1);
                   for (std::size_t k = 1; k <= max_degree; ++k) {
                     const Rational j(static_cast<long>(k));
                     beta_moment[k] = beta_moment[k - 1] * (jw.alpha + j) / (jw.alpha + jw.beta + Rational(1) + j);
                   }
                   for (std::size_t n = 0; n <= max_degree; ++n) {
                     Rational acc;
                     Integer binom(1);
                     Rational scale(1);
                     for (std::size_t k = 0; k <= n; ++k) {
                       acc += Rational(binom) * scale * beta_moment[k];
                       binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
                       scale *= Rational(-2);
                     }
                     nu[n] = acc;
                   }
                 },
                 [&](const AtomicWeight& aw) {
                   Rational total;
                   for (const auto& weight : aw.weights) total += weight;
                   std::vector<Rational> power(aw.points.size(), Rational(1));
                   for (std::size_t n = 0; n <= max_degree; ++n) {
                     Rational acc;
                     for (std::size_t i = 0; i < aw.points.size(); ++i) {
                       acc += aw.weights[i] * power[i];
                       power[i] *= aw.points[i];
                     }
                     nu[n] = acc / total;
                   }
                 },
             },
             w);
  return nu;
}

std::size_t degree_or_zero(const QPoly& p) { return p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()); }

}  // namespace

void validate(const WeightSpec& w) {
  std::visit(Overloaded{
                 [](const HermiteWeight&) {},
                 [](const LaguerreWeight& lw) { require_above_minus_one(lw.alpha, "alpha"); },
                 [](const JacobiWeight& jw) {
                   require_above_minus_one(jw.alpha, "alpha");
                   require_above_minus_one(jw.beta, "beta");
                 },
                 [](const AtomicWeight& aw) {
                   if (aw.points.empty()) throw MathError(ErrorCode::BadWeight, "atomic measure needs a point");
                   if (aw.points.size() != aw.weights.size()) {
                     throw MathError(ErrorCode::BadWeight, "points and weights differ in length");
                   }
                   for (const auto& weight : aw.weights) {
                     if (weight.sign() <= 0) throw MathError(ErrorCode::BadWeight, "weights must be positive");
                   }
                   auto sorted = aw.points;
                   std::sort(sorted.begin(), sorted.end());
                   if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                     throw MathError(ErrorCode::BadWeight, "points must be distinct");
                   }
                 },
             },
             w);
}

WeightSpec parse_weight(std::string_view text) {
  const std::string body = trim(text);
  const auto colon = body.find(':');
  const std::string kind = body.substr(0, colon);
  const std::string rest = colon == std::string::npos ? std::string() : body.substr(colon + 1);

  WeightSpec out;
  if (kind == "atomic") {
    AtomicWeight aw;
    bool have_points = false;
    bool have_weights = false;
    for (const auto& part : split(rest, ';')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ParseError(0, "expected key=value in atomic weight");
      const std::string key = trim(std::string_view(part).substr(0, eq));
      const std::string value = part.substr(eq + 1);
      if (key == "points") {
        aw.points = parse_list(value);
        have_points = true;
      } else if (key == "weights") {
        aw.weights = parse_list(value);
        have_weights = true;
      } else {
        throw ParseError(0, "unknown atomic key '" + key + "'");
      }
    }
    if (!have_points) throw ParseError(0, "atomic weight needs points");
    if (!have_weights) aw.weights.assign(aw.points.size(), Rational(1));
    out = aw;
  } else {
    std::map<std::string, Rational> keys;
    if (!rest.empty()) {
      for (const auto& part : split(rest, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw ParseError(0, "expected key=value in weight");
        keys[trim(std::string_view(part).substr(0, eq))] = parse_value(part.substr(eq + 1));
      }
    }
    auto take = [&](const std::string& key) {
      const auto it = keys.find(key);
      Rational value = it == keys.end() ? Rational(0) : it->second;
      if (it != keys.end()) keys.erase(it);
      return value;
    };
    if (kind == "hermite") {
      out = HermiteWeight{};
    } else if (kind == "laguerre") {
      out = LaguerreWeight{take("alpha")};
    } else if (kind == "jacobi") {
      const Rational alpha = take("alpha");
      out = JacobiWeight{alpha, take("beta")};
    } else {
      throw ParseError(0, "unknown weight '" + kind + "'");
    }
    if (!keys.empty()) throw ParseError(0, "unknown weight key '" + keys.begin()->first + "'");
  }
  validate(out);
  return out;
}

std::string to_string(const WeightSpec& w) {
  return std::visit(Overloaded{
                        [](const HermiteWeight&) { return std::string("hermite"); },
                        [](const LaguerreWeight& lw) { return "laguerre:alpha=" + lw.alpha.to_string(); },
                        [](const JacobiWeight& jw) {
                          return "jacobi:alpha=" + jw.alpha.to_string() + ",beta=" + jw.beta.to_string();
                        },
                        [](const AtomicWeight& aw) {
                          std::ostringstream out;
                          out << "atomic:points=";
                          for (std::size_t i = 0; i < aw.points.size(); ++i) out << (i ? "," : "") << aw.points[i];
                          out << ";weights=";
                          for (std::size_t i = 0; i < aw.weights.size(); ++i) out << (i ? "," : "") << aw.weights[i];
                          return out.str();
                        },
                    },
                    w);
}

MomentTable::MomentTable(WeightSpec weight, std::size_t max_degree) : weight_(std::move(weight)) {
  validate(weight_);
  moments_ = compute_moments(weight_, max_degree);
}

Rational MomentTable::integrate(const QPoly& f) const {
  if (static_cast<std::ptrdiff_t>(max_degree()) < f.degree()) {
    throw MathError(ErrorCode::BadInput, "moment table too short");
  }
  Rational acc;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (!f.coeffs()[n].is_zero()) acc += f.coeffs()[n] * moments_[n];
  }
  return acc;
}

Rational normalized_moment(const WeightSpec& w, std::size_t n) { return MomentTable(w, n)[n]; }

bool vb_member(const WeightSpec& w, const QPoly& f) {
  return MomentTable(w, degree_or_zero(f)).integrate(f).is_zero();
}

Rational inner_product(const WeightSpec& w, const QPoly& f, const QPoly& g) {
  const QPoly product = f * g;
  return MomentTable(w, degree_or_zero(product)).integrate(product);
}

QPoly orthopoly(const WeightSpec& w, std::size_t n) {
  const MomentTable table(w, 2 * n);
  std::vector<QPoly> basis;
  std::vector<Rational> norms;
  for (std::size_t k = 0; k <= n; ++k) {
    QPoly p = QPoly::t_power(k);
    for (std::size_t j = 0; j < k; ++j) {
      p -= basis[j] * (table.integrate(QPoly::t_power(k) * basis[j]) / norms[j]);
    }
    const Rational norm = table.integrate(p * p);
    if (norm.is_zero()) throw MathError(ErrorCode::Degenerate, "Gram matrix is singular at degree " + std::to_string(k));
    basis.push_back(std::move(p));
    norms.push_back(norm);
  }
  return basis.back();
}

bool matched_pair(const WeightSpec& w, const OperatorSpec& op) {
  return std::visit(Overloaded{
                        [&](const HermiteWeight&) {
                          const auto* mono = std::get_if<MonomialOperator>(&op);
                          return mono != nullptr && *mono == hermite_operator();
                        },
                        [&](const LaguerreWeight& lw) {
                          const auto* mono = std::get_if<MonomialOperator>(&op);
                          return mono != nullptr && *mono == laguerre_operator(lw.alpha);
                        },
                        [&](const JacobiWeight& jw) {
                          const auto* jac = std::get_if<JacobiOperator>(&op);
                          return jac != nullptr && jac->alpha == jw.alpha && jac->beta == jw.beta;
                        },
                        [](const AtomicWeight&) { return false; },
                    },
                    w);
}

EquivalenceReport equivalence_check(const WeightSpec& w, const OperatorSpec& op, std::size_t deg_bound) {
  validate(w);
  if (!matched_pair(w, op)) throw MathError(ErrorCode::BadPair, to_string(w) + " does not match " + to_string(op));
  if (deg_bound < 1) throw MathError(ErrorCode::BadInput, "degree bound must be >= 1");
  EquivalenceReport report;
  report.one_in_image = im_structure(op).one_in_image;
  if (report.one_in_image) return report;
  report.asserted = true;

  const MomentTable table(w, deg_bound);
  auto compare = [&](const QPoly& f) {
    ++report.checked;
    const bool image_side = member(op, f).member;
    const bool integral_side = table.integrate(f).is_zero();
    if (image_side != integral_side) report.violations.push_back(format_poly(f));
  };
  for (std::size_t n = 0; n <= deg_bound; ++n) {
    const QPoly monomial = QPoly::t_power(n);
    compare(monomial);
    if (n > 0) compare(monomial - QPoly::constant(table[n]));
  }
  return report;
}

}  // namespace mslab
