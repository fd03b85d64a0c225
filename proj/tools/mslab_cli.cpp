// Command-line front end: one subcommand per library operation, JSON on stdout.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mslab/certlab.hpp"
#include "mslab/format.hpp"
#include "mslab/json_io.hpp"
#include "mslab/momlab.hpp"
#include "mslab/opimage.hpp"
#include "mslab/radlab.hpp"
#include "mslab/ufdlab.hpp"

namespace {

using namespace mslab;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "json";
  bool pretty = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool assert_mode = false;
};

// Outcome of a subcommand: its payload and whether the verdict was negative.
struct Outcome {
  Json payload;
  bool negative = false;
};

std::string read_argument(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw ParseError(0, "cannot read " + text.substr(1));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(read_argument(text));
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON");
  }
}

std::size_t to_count(const std::string& name, long value) {
  if (value < 0) throw ParseError(0, name + " must be non-negative");
  return static_cast<std::size_t>(value);
}

void print_pretty(const Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : std::string("-");
    if (v.is_structured() && !v.empty()) {
      std::cout << indent << key << ":\n";
      print_pretty(v, indent + "  ");
    } else if (v.is_string()) {
      std::cout << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << indent << key << ": " << v.dump() << "\n";
    }
  }
}

Json optional_poly(const std::optional<QPoly>& p) { return p ? Json(format_poly(*p)) : Json(nullptr); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra toolkit for operator images, radicals and Mathieu subspaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--pretty", opts.pretty, "Same as --format pretty");
  app.add_option("--seed", opts.seed, "Seed for randomized searches");
  app.add_option("--jobs", opts.jobs, "Worker threads for candidate searches")->check(CLI::Range(1u, 256u));
  app.add_flag("--assert", opts.assert_mode, "Exit with 1 on a negative verdict");

  std::function<Outcome()> action;
  auto command = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

  std::string op_text, poly_text, weight_text, space_text, ctx_text, cert_text, alpha_text = "0", g_text = "1";
  std::string a_text;
  std::vector<std::string> d_texts, candidate_texts;
  long n = 0, d = 0, budget = 50, lo = 1, hi = 15, height = 2, max_candidates = 2000;
  long prime_budget = static_cast<long>(kDefaultPrimeBudget);
  bool details = false;

  {
    auto* sub = command("reduce", "Normal form of a polynomial modulo the operator image");
    sub->add_option("--op", op_text, "Operator")->required();
    sub->add_option("--poly", poly_text, "Polynomial in t")->required();
    sub->callback([&] {
      action = [&] {
        const ReductionResult r = reduce(parse_operator(op_text), parse_qpoly(poly_text));
        return Outcome{{{"normal_form", format_poly(r.normal_form)},
                        {"witness", format_poly(r.witness)},
                        {"admissible", r.admissible}}};
      };
    });
  }
  {
    auto* sub = command("member", "Decide membership in the operator image");
    sub->add_option("--op", op_text, "Operator")->required();
    sub->add_option("--poly", poly_text, "Polynomial in t")->required();
    sub->callback([&] {
      action = [&] {
        const Membership m = member(parse_operator(op_text), parse_qpoly(poly_text));
        return Outcome{{{"member", m.member}, {"witness", optional_poly(m.witness)}}, !m.member};
      };
    });
  }
  {
    auto* sub = command("lzero", "Constant term of the normal form");
    sub->add_option("--op", op_text, "Monomial operator")->required();
    sub->add_option("--poly", poly_text, "Polynomial in t")->required();
    sub->callback([&] {
      action = [&] {
        const OperatorSpec op = parse_operator(op_text);
        const auto* mono = std::get_if<MonomialOperator>(&op);
        if (mono == nullptr) throw ParseError(0, "lzero needs a mono: operator");
        return Outcome{{{"value", lzero(*mono, parse_qpoly(poly_text)).to_string()}}};
      };
    });
  }
  {
    auto* sub = command("escape", "Smallest m with f^m outside the operator image");
    sub->add_option("--op", op_text, "Operator")->required();
    sub->add_option("--poly", poly_text, "Polynomial in t")->required();
    sub->add_option("--budget", budget, "Largest exponent tried");
    sub->callback([&] {
      action = [&] {
        const auto m = escape_exponent(parse_operator(op_text), parse_qpoly(poly_text), to_count("budget", budget));
        return Outcome{{{"escape", m ? Json(*m) : Json(nullptr)}}, !m};
      };
    });
  }
  {
    auto* sub = command("certify", "Non-membership certificate for powers of f");
    sub->add_option("--poly", poly_text, "Normalized polynomial t^s + ...")->required();
    sub->add_option("--d", d, "Degree d of the operator")->required();
    sub->add_option("--alpha", alpha_text, "Rational alpha");
    sub->add_option("--budget", prime_budget, "Prime search budget");
    sub->callback([&] {
      action = [&] {
        const Certificate cert = certificate_nonmembership(parse_qpoly(poly_text), to_count("d", d),
                                                           Rational::parse(alpha_text),
                                                           to_count("budget", prime_budget));
        return Outcome{certificate_to_json(cert)};
      };
    });
  }
  {
    auto* sub = command("verify-cert", "Re-check a certificate");
    sub->add_option("--cert", cert_text, "Certificate JSON or @file")->required();
    sub->callback([&] {
      action = [&] {
        const bool valid = verify_certificate(certificate_from_json(parse_json(cert_text)));
        return Outcome{{{"valid", valid}}, !valid};
      };
    });
  }
  {
    auto* sub = command("moments", "Normalized moments nu_0..nu_n");
    sub->add_option("--weight", weight_text, "Weight")->required();
    sub->add_option("--n", n, "Largest index")->required();
    sub->callback([&] {
      action = [&] {
        const MomentTable table(parse_weight(weight_text), to_count("n", n));
        Json list = Json::array();
        for (std::size_t k = 0; k <= table.max_degree(); ++k) list.push_back(table[k].to_string());
        return Outcome{{{"moments", list}}};
      };
    });
  }
  {
    auto* sub = command("vb-member", "Decide whether the integral of f vanishes");
    sub->add_option("--weight", weight_text, "Weight")->required();
    sub->add_option("--poly", poly_text, "Polynomial in t")->required();
    sub->callback([&] {
      action = [&] {
        const WeightSpec w = parse_weight(weight_text);
        const QPoly f = parse_qpoly(poly_text);
        const bool inside = vb_member(w, f);
        return Outcome{{{"member", inside}, {"integral", MomentTable(w, f.is_zero() ? 0 : f.degree()).integrate(f).to_string()}},
                       !inside};
      };
    });
  }
  {
    auto* sub = command("orthopoly", "Monic orthogonal polynomial of degree n");
    sub->add_option("--weight", weight_text, "Weight")->required();
    sub->add_option("--n", n, "Degree")->required();
    sub->callback([&] {
      action = [&] {
        return Outcome{{{"poly", format_poly(orthopoly(parse_weight(weight_text), to_count("n", n)))}}};
      };
    });
  }
  {
    auto* sub = command("equiv", "Compare image membership with vanishing integrals");
    sub->add_option("--weight", weight_text, "Weight")->required();
    sub->add_option("--op", op_text, "Matching operator")->required();
    sub->add_option("--deg", n, "Degree bound")->default_val(12);
    sub->callback([&] {
      action = [&] {
        const EquivalenceReport r = equivalence_check(parse_weight(weight_text), parse_operator(op_text), to_count("deg", n));
        return Outcome{{{"one_in_image", r.one_in_image},
                        {"asserted", r.asserted},
                        {"checked", r.checked},
                        {"violations", r.violations}},
                       !r.all_agree()};
      };
    });
  }
  {
    auto* sub = command("mathieu", "Mathieu verdict for a cofinite subspace");
    sub->add_option("--space", space_text, "Cofinite subspace JSON or @file")->required();
    sub->add_option("--candidate", candidate_texts, "Extra radical candidates");
    sub->add_option("--height", height, "Coefficient height for enumerated candidates");
    sub->add_option("--max-candidates", max_candidates, "Number of enumerated candidates");
    sub->add_flag("--details", details, "Include ideal generators and search data");
    sub->callback([&] {
      action = [&] {
        MathieuConfig config;
        config.seed = opts.seed;
        config.jobs = opts.jobs;
        config.height = height;
        config.max_candidates = to_count("max-candidates", max_candidates);
        for (const auto& c : candidate_texts) config.candidates.push_back(parse_qpoly(c));
        const MathieuVerdict v = mathieu_check(cofinite_from_json(parse_json(space_text)), config);
        Json out{{"status", to_string(v.status)},
                 {"witness_a", v.witness ? Json(format_poly(v.witness->first)) : Json(nullptr)},
                 {"witness_b", v.witness ? Json(format_poly(v.witness->second)) : Json(nullptr)}};
        if (details) {
          out["i_v_generator"] = format_poly(v.i_v_generator);
          out["radical_iv_generator"] = format_poly(v.radical_iv_generator);
          out["reason"] = v.reason;
          out["candidates_tried"] = v.candidates_tried;
          out["seed"] = config.seed;
          out["height"] = config.height;
          out["max_candidates"] = config.max_candidates;
        }
        return Outcome{out, v.status == MathieuStatus::NotMathieu};
      };
    });
  }
  {
    auto* sub = command("largest-ideal", "Generator of the largest ideal inside a cofinite subspace");
    sub->add_option("--space", space_text, "Cofinite subspace JSON or @file")->required();
    sub->callback([&] {
      action = [&] {
        return Outcome{{{"generator", format_poly(largest_ideal(cofinite_from_json(parse_json(space_text))))}}};
      };
    });
  }
  {
    auto* sub = command("radical-probe", "Check f^m in V over a window of exponents");
    auto* group = sub->add_option_group("space");
    group->add_option("--space", space_text, "Cofinite subspace JSON or @file");
    group->add_option("--op", op_text, "Operator image");
    group->add_option("--weight", weight_text, "Vanishing-integral subspace");
    group->require_option(1);
    sub->add_option("--poly", poly_text, "Polynomial in t")->required();
    sub->add_option("--lo", lo, "First exponent");
    sub->add_option("--hi", hi, "Last exponent");
    sub->callback([&] {
      action = [&] {
        const QPoly f = parse_qpoly(poly_text);
        MembershipOracle oracle;
        std::optional<bool> exact;
        if (!space_text.empty()) {
          const CofiniteSubspace v = cofinite_from_json(parse_json(space_text));
          oracle = v.oracle();
          exact = radical_member_cofinite(v, f);
        } else if (!op_text.empty()) {
          const OperatorSpec op = parse_operator(op_text);
          oracle = [op](const QPoly& p) { return member(op, p).member; };
        } else {
          const WeightSpec w = parse_weight(weight_text);
          oracle = [w](const QPoly& p) { return vb_member(w, p); };
        }
        const bool probe = radical_probe(oracle, f, to_count("lo", lo), to_count("hi", hi));
        Json out{{"probe", probe}, {"lo", lo}, {"hi", hi}};
        if (exact) out["radical"] = *exact;
        return Outcome{out, !(exact ? *exact : probe)};
      };
    });
  }
  {
    auto* sub = command("ufd-member", "Membership in the image of d/dt - a over Q[x]");
    sub->add_option("--ctx", ctx_text, "Context ufd:a=...")->required();
    sub->add_option("--poly", poly_text, "Polynomial in t over Q[x]")->required();
    sub->callback([&] {
      action = [&] {
        const UfdContext ctx = parse_ufd_context(ctx_text);
        const UfdMembership m = member_ufd(ctx, parse_poly(poly_text, ctx.ring()));
        return Outcome{{{"member", m.member}, {"witness", m.witness ? Json(format_poly(*m.witness)) : Json(nullptr)}},
                       !m.member};
      };
    });
  }
  {
    auto* sub = command("ufd-radical", "Factorial-map criteria for p(a t)");
    sub->add_option("--ctx", ctx_text, "Context ufd:a=...")->required();
    sub->add_option("--poly", poly_text, "p as a polynomial in t over Q[x]")->required();
    sub->callback([&] {
      action = [&] {
        const UfdContext ctx = parse_ufd_context(ctx_text);
        const RPoly p = parse_poly(poly_text, ctx.ring());
        const bool radical = lemma72_radical(ctx, p);
        return Outcome{{{"f", format_poly(substitute_at_a(ctx, p))},
                        {"factorial_map", factorial_map(p).to_string()},
                        {"member", lemma72_member(ctx, p)},
                        {"radical", radical}},
                       !radical};
      };
    });
  }
  {
    auto* sub = command("cor73", "Exponent bound for g f^m in the image");
    sub->add_option("--ctx", ctx_text, "Context ufd:a=...")->required();
    sub->add_option("--poly", poly_text, "p as a polynomial in t over Q[x]")->required();
    sub->add_option("--g", g_text, "Multiplier g");
    sub->callback([&] {
      action = [&] {
        const UfdContext ctx = parse_ufd_context(ctx_text);
        const Cor73Result r = cor73_bound(ctx, parse_poly(poly_text, ctx.ring()), parse_poly(g_text, ctx.ring()));
        return Outcome{{{"N", r.n}, {"d", r.d}, {"bound", r.bound}, {"validated", r.validated}}, !r.validated};
      };
    });
  }
  {
    auto* sub = command("lift74", "Lift of radical elements through a");
    sub->add_option("--a", a_text, "Element a of Q[x]")->required();
    sub->add_option("--d", d_texts, "Elements d_i (repeatable)")->required();
    sub->callback([&] {
      action = [&] {
        const RingDescriptor ring = RingDescriptor::qq_poly();
        std::vector<RingElement> ds;
        for (const auto& t : d_texts) ds.push_back(parse_ring_element(t, ring));
        const Lift74 lift = lemma74_lift(parse_ring_element(a_text, ring), ds);
        Json tilde = Json::array();
        for (const auto& e : lift.d_tilde) tilde.push_back(e.to_string());
        return Outcome{{{"b", lift.b.to_string()}, {"u", lift.u.to_string()}, {"d_tilde", tilde}}};
      };
    });
  }
  {
    auto* sub = command("t77", "Surjectivity check for c d/dt - a over Q[x]/(x^k)");
    sub->add_option("--ctx", ctx_text, "Context trunc:k=...,c=...,a=...")->required();
    sub->add_option("--deg", n, "Largest probed power of t")->default_val(10);
    sub->callback([&] {
      action = [&] {
        const TruncContext ctx = parse_trunc_context(ctx_text);
        const T77Report r = theorem77_check(ctx.ring, ctx.c, ctx.a, to_count("deg", n));
        Json powers = Json::array();
        for (const auto& [k, h] : r.power_witnesses) powers.push_back({{"n", k}, {"witness", format_poly(h)}});
        return Outcome{{{"status", to_string(r.status)},
                        {"one_witness", r.one_witness ? Json(format_poly(*r.one_witness)) : Json(nullptr)},
                        {"powers", powers},
                        {"missing", r.missing_powers},
                        {"note", r.note}},
                       r.status != T77Status::SurjectiveVerified};
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Outcome outcome = action();
    if (opts.pretty || opts.format == "pretty") {
      print_pretty(outcome.payload);
    } else {
      std::cout << outcome.payload.dump() << "\n";
    }
    return opts.assert_mode && outcome.negative ? kNegative : kOk;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
