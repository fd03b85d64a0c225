// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mslab/certlab.hpp"
#include "mslab/format.hpp"
#include "mslab/momlab.hpp"
#include "mslab/opimage.hpp"
#include "mslab/radlab.hpp"
#include "mslab/ufdlab.hpp"
#include "support/generators.hpp"

namespace mslab {
namespace {

/// Collects failure descriptions for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0 && count_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << (count_ - failed_) << "/" << count_ << " checks";
    for (const auto& f : failures_) out << "; " << f;
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

QPoly P(const char* text) { return parse_qpoly(text); }
Rational Q(const char* text) { return Rational::parse(text); }
QPoly t_power(std::size_t n) { return QPoly::monomial(Rational(1), n); }

void moment_bridge(Check& c) {
  // Hermite: nu_{2q} = nu_{2q-2} (2q-1)/2 with nu_0 = 1, i.e. (2q-1)!!/2^q.
  Rational hermite(1);
  for (std::size_t q = 1; q <= 20; ++q) {
    hermite *= Rational(Integer(2 * q - 1), Integer(2));
    c.expect(lzero(hermite_operator(), t_power(2 * q)) == hermite, "hermite q=" + std::to_string(q));
  }
  for (const char* a : {"1/2", "1", "5/2"}) {
    const Rational alpha = Q(a);
    Rational laguerre(1);
    for (std::size_t q = 1; q <= 20; ++q) {
      laguerre *= alpha + Rational(static_cast<long>(q));
      c.expect(lzero(laguerre_operator(alpha), t_power(q)) == laguerre,
               std::string("laguerre alpha=") + a + " q=" + std::to_string(q));
    }
  }
}

void equivalence(Check& c) {
  std::vector<std::pair<WeightSpec, OperatorSpec>> pairs = {
      {HermiteWeight{}, hermite_operator()},
      {LaguerreWeight{Q("1/2")}, laguerre_operator(Q("1/2"))},
      {LaguerreWeight{Q("1")}, laguerre_operator(Q("1"))},
  };
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{{"1", "1"}, {"1", "2"}, {"1/2", "1/2"}})
    pairs.emplace_back(JacobiWeight{Q(a), Q(b)}, JacobiOperator{Q(a), Q(b)});
  for (const auto& [w, op] : pairs) {
    const EquivalenceReport r = equivalence_check(w, op, 12);
    c.expect(r.asserted && !r.one_in_image, to_string(w) + " not asserted");
    c.expect(r.checked > 0, to_string(w) + " nothing checked");
    c.expect(r.all_agree(), to_string(w) + " disagreements: " + std::to_string(r.violations.size()));
  }
}

void jacobi_grid(Check& c) {
  const std::vector<Rational> values = {Q("-1/2"), Q("0"), Q("1/2"), Q("1"), Q("2")};
  for (const auto& alpha : values) {
    for (const auto& beta : values) {
      const bool expected = alpha.is_zero() || beta.is_zero();
      const bool actual = im_structure(JacobiOperator{alpha, beta}).one_in_image;
      c.expect(actual == expected, "alpha=" + alpha.to_string() + " beta=" + beta.to_string());
    }
  }
}

void escape(Check& c) {
  testing::Gen gen(4);
  const std::vector<std::pair<std::size_t, Rational>> params = {{1, Q("0")}, {0, Q("1")}, {2, Q("1/3")}};
  for (const auto& [d, alpha] : params) {
    for (int trial = 0; trial < 50; ++trial) {
      // Nonzero lowest term normalized to 1.
      QPoly f = gen.nonzero_qpoly(6, 10);
      f = f * QPoly::constant(Rational(1) / f.coeff(f.low_degree()));
      const auto e = escape_exponent(unit_operator(d, alpha), f, 50);
      c.expect(e.has_value() && *e <= 50, "d=" + std::to_string(d) + " f=" + format_poly(f));
    }
  }
}

void certificates(Check& c) {
  testing::Gen gen(5);
  const std::vector<std::pair<std::size_t, Rational>> params = {{1, Q("0")}, {0, Q("1")}, {2, Q("1/3")}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto& [d, alpha] = params[static_cast<std::size_t>(trial) % params.size()];
    const QPoly f = gen.normalized(5);
    const std::string tag = "f=" + format_poly(f) + " d=" + std::to_string(d);
    const std::size_t s = f.low_degree();
    const std::size_t n = d + 1;
    for (std::size_t m = 1; m <= 3; ++m) {
      const std::size_t i_max = (static_cast<std::size_t>(f.degree()) - s) * m;
      const auto phi = phi_expansion(f, m, d);
      const auto b = b_products(s, m, d, alpha, i_max);
      Rational sum(1);
      for (std::size_t i = 1; i <= i_max; ++i) {
        const auto it = phi.find((s * m + i) * n);
        if (it != phi.end()) sum += b[i - 1] * it->second;
      }
      c.expect(lzero(unit_operator(d, alpha), pow(f, m * n)) == bracket_factorial(s * m, n, alpha) * sum,
               tag + " identity m=" + std::to_string(m));
    }
    const Certificate cert = certificate_nonmembership(f, d, alpha);
    c.expect(verify_certificate(cert), tag + " certificate rejected");
    c.expect(!member(unit_operator(d, alpha), pow(f, cert.conclusion_exponent)).member, tag + " power is a member");
  }
}

void exceptional(Check& c) {
  const MonomialOperator d1 = unit_operator(1, Q("-1"));
  for (std::size_t k = 1; k <= 15; ++k) c.expect(member(d1, t_power(2 * k)).member, "t^" + std::to_string(2 * k));
  for (std::size_t m = 0; m <= 15; ++m)
    c.expect(!member(d1, t_power(2 * m + 1)).member, "t^" + std::to_string(2 * m + 1));
  const MonomialOperator d0 = unit_operator(0, Q("-2"));
  for (std::size_t n = 2; n <= 20; ++n) c.expect(member(d0, t_power(n)).member, "alpha=-2 t^" + std::to_string(n));
  c.expect(!member(d0, P("t")).member, "alpha=-2 t");
  c.expect(!member(d0, P("1")).member, "alpha=-2 1");
  const MembershipOracle oracle = [&](const QPoly& f) { return member(d0, f).member; };
  c.expect(radical_probe(oracle, P("t"), 2, 20), "radical probe of t");
}

void mathieu(Check& c) {
  const CofiniteSubspace atomic = atomic_hyperplane({Q("0"), Q("1"), Q("2")}, {Q("1"), Q("1"), Q("1")});
  c.expect(largest_ideal(atomic) == P("t^3 - 3*t^2 + 2*t"), "I_V of atomic space");
  const CofiniteSubspace equal_values({{P("t"), 1}, {P("t - 1"), 1}}, {{Q("1"), Q("0")}});
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    MathieuConfig config;
    config.seed = seed;
    config.jobs = 1 + static_cast<unsigned>(seed % 3);
    const MathieuVerdict exact = mathieu_check(atomic, config);
    c.expect(exact.status == MathieuStatus::MathieuExact, "atomic seed=" + std::to_string(seed));
    const MathieuVerdict neg = mathieu_check(equal_values, config);
    c.expect(neg.status == MathieuStatus::NotMathieu && neg.witness.has_value(),
             "f(0)=f(1) seed=" + std::to_string(seed));
    if (!neg.witness) continue;
    const auto& [a, b] = *neg.witness;
    c.expect(radical_member_cofinite(equal_values, a), "witness a outside the radical");
    c.expect(!eventually_absorbs(equal_values, a, b), "witness pair absorbed");
    c.expect(!definition_witness(equal_values.oracle(), a, b, 20).has_value(), "a^m b in V for some m");
    c.expect(radical_probe(equal_values.oracle(), a, 1, 20), "powers of a leave V");
  }
}

void ufd_suite(Check& c) {
  const RingDescriptor qx = RingDescriptor::qq_poly();
  const std::vector<const char*> as = {"x", "x^2", "x^2 - x"};
  for (const char* a_text : as) {
    const UfdContext ctx(parse_ring_element(a_text, qx));
    for (std::size_t n = 0; n <= 10; ++n) {
      const RPoly f = RPoly::monomial(RingElement(qx, pow(ctx.a().value(), n)), n, qx) -
                      RPoly::constant(RingElement(qx, Rational(factorial(n))), qx);
      const UfdMembership m = member_ufd(ctx, f);
      c.expect(m.member && ctx.apply(*m.witness) == f, std::string("congruence a=") + a_text + " n=" + std::to_string(n));
    }
  }
  testing::Gen gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const UfdContext ctx(parse_ring_element(as[static_cast<std::size_t>(trial) % as.size()], qx));
    const RPoly p = gen.rpoly(qx, 4, 3, 3);
    c.expect(lemma72_member(ctx, p) == member_ufd(ctx, substitute_at_a(ctx, p)).member, "criterion p=" + format_poly(p));
  }
  {
    const UfdContext ctx(parse_ring_element("x^2", qx));
    const Cor73Result r = cor73_bound(ctx, parse_poly("x*t", qx), parse_poly("t", qx));
    c.expect(r.n == 2 && r.d == 1 && r.bound == 4 && r.validated, "cor73 example");
    const UfdContext ctx2(parse_ring_element("x^2 - x", qx));
    const Cor73Result r2 = cor73_bound(ctx2, parse_poly("x^2*t^2 - x*t^2 + x^2 - x", qx), parse_poly("t^2 + 1", qx));
    c.expect(r2.validated, "cor73 radical of x^2 - x");
  }
  for (const auto& [a_text, ds] : std::vector<std::pair<const char*, std::vector<const char*>>>{
           {"x^2", {"x", "x^3"}}, {"x^3", {"x^2", "x"}}, {"x^4 - 2*x^3 + x^2", {"x^2 - x", "x^3 - x^2"}}}) {
    const RingElement a = parse_ring_element(a_text, qx);
    const RingElement radical = squarefree_part(a);
    std::vector<RingElement> d_list;
    for (const char* d : ds) d_list.push_back(parse_ring_element(d, qx));
    const Lift74 lift = lemma74_lift(a, d_list);
    bool escapes = false;
    for (std::size_t i = 0; i < d_list.size(); ++i) {
      c.expect(lift.u * d_list[i] == lift.d_tilde[i] * a, std::string("lift relation a=") + a_text);
      escapes = escapes || !exact_divide(lift.d_tilde[i], radical).has_value();
    }
    c.expect(escapes, std::string("lift escapes r(a) for a=") + a_text);
  }
  const RingDescriptor trunc = RingDescriptor::qq_poly_trunc(2);
  const RingElement one(trunc, Rational(1));
  const RPoly a = parse_poly("x", trunc);
  const T77Report r = theorem77_check(trunc, one, a, 10);
  c.expect(r.status == T77Status::SurjectiveVerified, "t77 status");
  c.expect(r.one_witness && *r.one_witness == parse_poly("t + 1/2*x*t^2", trunc), "t77 witness for 1");
  c.expect(r.one_witness && apply_truncated(one, a, *r.one_witness) == parse_poly("1", trunc), "t77 witness image");
  c.expect(r.missing_powers.empty() && r.power_witnesses.size() == 11, "t77 powers");
  for (const auto& [n, h] : r.power_witnesses)
    c.expect(apply_truncated(one, a, h) == RPoly::t_power(n, trunc), "t77 power " + std::to_string(n));
}

void gram_schmidt(Check& c) {
  const WeightSpec legendre = JacobiWeight{Q("0"), Q("0")};
  std::vector<QPoly> ps;
  for (std::size_t n = 0; n <= 6; ++n) ps.push_back(orthopoly(legendre, n));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    c.expect(ps[i].degree() == static_cast<long>(i), "degree " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      c.expect(inner_product(legendre, ps[i], ps[j]).is_zero(), "<p" + std::to_string(i) + ",p" + std::to_string(j) + ">");
  }
  c.expect(ps[2] == P("t^2 - 1/3"), "p2");
}

}  // namespace
}  // namespace mslab

int main() {
  using Criterion = std::pair<const char*, std::function<void(mslab::Check&)>>;
  const std::vector<Criterion> criteria = {
      {"moment bridge", mslab::moment_bridge},
      {"image equals vanishing-integral space", mslab::equivalence},
      {"Jacobi one-in-image grid", mslab::jacobi_grid},
      {"escape exponents", mslab::escape},
      {"certificate identity", mslab::certificates},
      {"exceptional alpha suite", mslab::exceptional},
      {"Mathieu engine", mslab::mathieu},
      {"coefficient-ring suite", mslab::ufd_suite},
      {"Gram-Schmidt", mslab::gram_schmidt},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    mslab::Check check;
    std::string detail;
    try {
      criteria[i].second(check);
      detail = check.summary();
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
      detail = check.summary();
    }
    const bool ok = check.passed();
    if (!ok) ++failed;
    std::printf("%s %zu %s (%s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
