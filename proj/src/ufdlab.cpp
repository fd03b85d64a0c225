#include "mslab/ufdlab.hpp"

#include <map>

#include "mslab/format.hpp"
#include "mslab/linalg.hpp"

namespace mslab {

namespace {

bool divides(const RingElement& a, const RingElement& c) {
  return c.is_zero() || exact_divide(c, a).has_value();
}

RingElement factorial_of(std::size_t n, const RingDescriptor& ring) {
  return RingElement(ring, Rational(factorial(n)));
}

std::size_t degree_or_zero(const RPoly& p) { return p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()); }

std::map<std::string, std::string> parse_keys(std::string_view text, std::string_view prefix) {
  std::string body(text);
  if (body.rfind(prefix, 0) != 0) throw ParseError(0, "expected '" + std::string(prefix) + "'");
  body.erase(0, prefix.size());
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError(start, "expected key=value");
    out[part.substr(0, eq)] = part.substr(eq + 1);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

UfdContext::UfdContext(RingElement a) : a_(std::move(a)) {
  if (a_.ring() != RingDescriptor::qq_poly()) throw MathError(ErrorCode::BadInput, "UFD context needs Q[x]");
  if (a_.is_zero() || a_.is_unit()) throw MathError(ErrorCode::BadInput, "a must be a nonzero non-unit");
}

RPoly UfdContext::apply(const RPoly& h) const { return derivative(h) - h * a_; }

UfdMembership member_ufd(const UfdContext& ctx, const RPoly& f) {
  require_same_ring(f.ring(), ctx.ring());
  if (f.is_zero()) return {true, RPoly(ctx.ring())};
  // Coefficient i of D(h): (i+1) h_{i+1} - a h_i = f_i. In a domain deg h = deg f.
  const std::size_t n = f.size();
  std::vector<RingElement> h(n + 1, RingElement(ctx.ring()));
  for (std::size_t i = n; i-- > 0;) {
    const RingElement rhs = h[i + 1] * Rational(static_cast<long>(i + 1)) - f.coeffs()[i];
    const auto q = exact_divide(rhs, ctx.a());
    if (!q) return {false, std::nullopt};
    h[i] = *q;
  }
  return {true, RPoly(std::move(h), ctx.ring())};
}

RingElement factorial_map(const RPoly& p) {
  RingElement acc(p.ring());
  for (std::size_t n = 0; n < p.size(); ++n) acc += p.coeffs()[n] * factorial_of(n, p.ring());
  return acc;
}

RPoly substitute_at_a(const UfdContext& ctx, const RPoly& p) { return substitute_scaled(p, ctx.a()); }

bool lemma72_member(const UfdContext& ctx, const RPoly& p) { return divides(ctx.a(), factorial_map(p)); }

bool lemma72_radical(const UfdContext& ctx, const RPoly& p) {
  const RingElement radical = squarefree_part(ctx.a());
  for (const auto& c : p.coeffs()) {
    if (!divides(radical, c)) return false;
  }
  return true;
}

Cor73Result cor73_bound(const UfdContext& ctx, const RPoly& p, const RPoly& g) {
  if (!lemma72_radical(ctx, p)) throw MathError(ErrorCode::NotInRadical, "coefficients of p are not in r(a)");
  if (g.is_zero()) throw MathError(ErrorCode::BadInput, "g must be nonzero");
  Cor73Result out;
  out.d = static_cast<std::size_t>(g.degree());
  // Every coefficient is divisible by r(a), so p^N works once r(a)^N is in aA,
  // which happens by N = deg a.
  const auto cap = static_cast<std::size_t>(std::max<std::ptrdiff_t>(1, ctx.a().value().degree()));
  RPoly power = p;
  for (std::size_t n = 1; n <= cap; ++n, power *= p) {
    bool all = true;
    for (const auto& c : power.coeffs()) all = all && divides(ctx.a(), c);
    if (all) {
      out.n = n;
      break;
    }
  }
  if (out.n == 0) throw MathError(ErrorCode::Degenerate, "no exponent N found up to deg a");
  out.bound = out.n * (out.d + 1);
  const RPoly f = substitute_at_a(ctx, p);
  out.validated = member_ufd(ctx, g * pow(f, out.bound)).member && member_ufd(ctx, g * pow(f, out.bound + 1)).member;
  return out;
}

Lift74 lemma74_lift(const RingElement& a, const std::vector<RingElement>& d_list) {
  const UfdContext ctx(a);
  if (d_list.empty()) throw MathError(ErrorCode::BadInput, "empty list");
  const RingElement radical = squarefree_part(a);
  bool some_outside = false;
  for (const auto& d : d_list) {
    require_same_ring(d.ring(), a.ring());
    if (!divides(radical, d)) throw MathError(ErrorCode::BadInput, "d_i is not in r(a)");
    some_outside = some_outside || !divides(a, d);
  }
  if (!some_outside) throw MathError(ErrorCode::BadInput, "every d_i lies in aA");

  Lift74 out;
  out.b = a;
  for (const auto& d : d_list) out.b = gcd(out.b, d);
  out.u = *exact_divide(a, out.b);
  bool escapes = false;
  for (const auto& d : d_list) {
    out.d_tilde.push_back(*exact_divide(d, out.b));
    escapes = escapes || !divides(radical, out.d_tilde.back());
  }
  for (std::size_t i = 0; i < d_list.size(); ++i) {
    if (!(out.u * d_list[i] == out.d_tilde[i] * a)) throw MathError(ErrorCode::Degenerate, "lift identity failed");
  }
  if (!escapes) throw MathError(ErrorCode::Degenerate, "no lifted element escapes r(a)");
  return out;
}

Valuation va_valuation(const UfdContext& ctx, const RingElement& c, long i) {
  if (c.is_zero()) return Valuation::infinity();
  long n = 0;
  RingElement rest = c;
  while (auto q = exact_divide(rest, ctx.a())) {
    rest = *q;
    ++n;
  }
  return Valuation(n - i);
}

Valuation s_of(const UfdContext& ctx, const RPoly& f) {
  Valuation best = Valuation::infinity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Valuation v = va_valuation(ctx, f.coeffs()[i], static_cast<long>(i));
    if (v < best) best = v;
  }
  return best;
}

const char* to_string(T77Status status) {
  switch (status) {
    case T77Status::SurjectiveVerified: return "SURJECTIVE_VERIFIED";
    case T77Status::Counterexample: return "COUNTEREXAMPLE";
    case T77Status::UndecidedOne: return "UNDECIDED_ONE";
  }
  return "?";
}

RPoly apply_truncated(const RingElement& c, const RPoly& a, const RPoly& h) { return derivative(h) * c - a * h; }

std::optional<RPoly> solve_truncated(const RingElement& c, const RPoly& a, const RPoly& f) {
  const RingDescriptor ring = c.ring();
  require_same_ring(a.ring(), ring);
  require_same_ring(f.ring(), ring);
  if (ring.kind == RingDescriptor::Kind::QQ_POLY) throw MathError(ErrorCode::BadInput, "ring must be finite-dimensional");
  const std::size_t k = ring.length_cap();
  const std::size_t deg_f = degree_or_zero(f);
  const std::size_t deg_a = degree_or_zero(a);

  for (std::size_t h_deg = deg_f; h_deg <= deg_f + k * (deg_a + 1); ++h_deg) {
    const std::size_t rows_t = std::max(h_deg + deg_a, deg_f) + 1;
    const auto rows = static_cast<Index>(rows_t * k);
    const auto cols = static_cast<Index>((h_deg + 1) * k);
    // Columns run over x^e t^j with j descending and e ascending, so leftmost
    // pivots favour high t-degree and free variables sit at low degree.
    RMatrix m = RMatrix::Constant(rows, cols, Rational(0));
    std::vector<std::pair<std::size_t, std::size_t>> column_term;
    for (std::size_t j = h_deg + 1; j-- > 0;) {
      for (std::size_t e = 0; e < k; ++e) {
        const RPoly basis = RPoly::monomial(RingElement(ring, QPoly::t_power(e)), j, ring);
        const RPoly image = apply_truncated(c, a, basis);
        const auto col = static_cast<Index>(column_term.size());
        for (std::size_t i = 0; i < image.size(); ++i) {
          const QPoly& value = image.coeffs()[i].value();
          for (std::size_t x = 0; x < value.size(); ++x) m(static_cast<Index>(i * k + x), col) = value.coeffs()[x];
        }
        column_term.emplace_back(j, e);
      }
    }
    RVector target = RVector::Constant(rows, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const QPoly& value = f.coeffs()[i].value();
      for (std::size_t x = 0; x < value.size(); ++x) target(static_cast<Index>(i * k + x)) = value.coeffs()[x];
    }
    const auto y = solve(m, target);
    if (!y) continue;
    std::vector<QPoly> parts(h_deg + 1);
    for (std::size_t col = 0; col < column_term.size(); ++col) {
      const auto [j, e] = column_term[col];
      parts[j].add_term((*y)(static_cast<Index>(col)), e);
    }
    std::vector<RingElement> coeffs;
    for (auto& part : parts) coeffs.emplace_back(ring, std::move(part));
    RPoly h(std::move(coeffs), ring);
    if (!(apply_truncated(c, a, h) == f)) throw MathError(ErrorCode::Degenerate, "linear solve produced a bad witness");
    return h;
  }
  return std::nullopt;
}

T77Report theorem77_check(RingDescriptor ring, const RingElement& c, const RPoly& a, std::size_t deg_bound) {
  T77Report report;
  const RPoly one = RPoly::t_power(0, ring);
  report.one_witness = solve_truncated(c, a, one);
  if (!report.one_witness) {
    bool all_nilpotent = !c.is_unit();
    for (const auto& coeff : a.coeffs()) all_nilpotent = all_nilpotent && !coeff.is_unit();
    report.status = T77Status::UndecidedOne;
    report.note = all_nilpotent ? "c and every coefficient of a lie in xA, so Im D lies in xA[t] and misses 1"
                                : "no preimage of 1 within the witness-degree budget";
    return report;
  }
  for (std::size_t n = 0; n <= deg_bound; ++n) {
    const auto h = solve_truncated(c, a, RPoly::t_power(n, ring));
    if (h) {
      report.power_witnesses.emplace_back(n, *h);
    } else {
      report.missing_powers.push_back(n);
    }
  }
  report.status = report.missing_powers.empty() ? T77Status::SurjectiveVerified : T77Status::Counterexample;
  report.note = report.missing_powers.empty() ? "1 and every probed t^n lie in Im D"
                                              : "1 lies in Im D but some t^n was not reached";
  return report;
}

UfdContext parse_ufd_context(std::string_view text) {
  const auto keys = parse_keys(text, "ufd:");
  const auto it = keys.find("a");
  if (it == keys.end() || keys.size() != 1) throw ParseError(0, "ufd context needs exactly a=...");
  return UfdContext(parse_ring_element(it->second, RingDescriptor::qq_poly()));
}

TruncContext parse_trunc_context(std::string_view text) {
  auto keys = parse_keys(text, "trunc:");
  for (const auto& [key, value] : keys) {
    if (key != "k" && key != "c" && key != "a") throw ParseError(0, "unknown trunc key '" + key + "'");
  }
  if (!keys.count("k")) throw ParseError(0, "trunc context needs k=...");
  const Rational k = Rational::parse(keys["k"]);
  if (!k.is_integer() || k.sign() <= 0 || !k.numerator().fits_ulong_p()) throw ParseError(0, "k must be a positive integer");
  const RingDescriptor ring = RingDescriptor::qq_poly_trunc(k.numerator().get_ui());
  const RingElement c = keys.count("c") ? parse_ring_element(keys["c"], ring) : RingElement(ring, Rational(1));
  const RPoly a = keys.count("a") ? parse_poly(keys["a"], ring) : RPoly(ring);
  return {ring, c, a};
}

}  // namespace mslab
