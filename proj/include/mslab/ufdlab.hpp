#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mslab/ring.hpp"
#include "mslab/valuation.hpp"

namespace mslab {

/// A = Q[x] with a nonzero non-unit a, and D = d/dt - a on A[t].
class UfdContext {
 public:
  explicit UfdContext(RingElement a);

  const RingElement& a() const { return a_; }
  RingDescriptor ring() const { return a_.ring(); }
  /// D(h) = h' - a h.
  RPoly apply(const RPoly& h) const;

 private:
  RingElement a_;
};

struct UfdMembership {
  bool member = false;
  std::optional<RPoly> witness;
};

/// Exact membership in Im D by top-down triangular division.
UfdMembership member_ufd(const UfdContext& ctx, const RPoly& f);

/// sum_n p_n n!.
RingElement factorial_map(const RPoly& p);

/// p(a t).
RPoly substitute_at_a(const UfdContext& ctx, const RPoly& p);

/// p(a t) in Im D iff factorial_map(p) in aA.
bool lemma72_member(const UfdContext& ctx, const RPoly& p);

/// p(a t) in the radical of Im D iff every coefficient of p lies in r(a).
bool lemma72_radical(const UfdContext& ctx, const RPoly& p);

struct Cor73Result {
  std::size_t n = 0;      // minimal N with every coefficient of p^N in aA
  std::size_t d = 0;      // deg g
  std::size_t bound = 0;  // N (d + 1)
  bool validated = false; // g f^m in Im D for m = bound and bound + 1
};

/// Throws NOT_IN_RADICAL unless lemma72_radical(ctx, p).
Cor73Result cor73_bound(const UfdContext& ctx, const RPoly& p, const RPoly& g);

struct Lift74 {
  RingElement b;  // gcd(a, d_1, ..., d_n)
  RingElement u;
  std::vector<RingElement> d_tilde;
};

/// u d_i = d~_i a with some d~_i outside r(a). Throws BAD_INPUT when some
/// d_i is outside r(a) or every d_i lies in aA.
Lift74 lemma74_lift(const RingElement& a, const std::vector<RingElement>& d_list);

/// v_a(c) - i, with v_a(0) = +inf.
Valuation va_valuation(const UfdContext& ctx, const RingElement& c, long i);

/// Minimum of v_a over the terms of f.
Valuation s_of(const UfdContext& ctx, const RPoly& f);

enum class T77Status { SurjectiveVerified, Counterexample, UndecidedOne };
const char* to_string(T77Status status);

struct T77Report {
  T77Status status = T77Status::UndecidedOne;
  std::optional<RPoly> one_witness;
  std::vector<std::pair<std::size_t, RPoly>> power_witnesses;  // (n, h) with D(h) = t^n
  std::vector<std::size_t> missing_powers;
  std::string note;
};

/// Preimage of f under D = c d/dt - a(t) over Q[x]/(x^k), searched by exact
/// linear algebra with witness degree deg f, ..., deg f + k (deg a + 1).
std::optional<RPoly> solve_truncated(const RingElement& c, const RPoly& a, const RPoly& f);

/// Checks 1 in Im D and, if so, t^n in Im D for n <= deg_bound.
T77Report theorem77_check(RingDescriptor ring, const RingElement& c, const RPoly& a, std::size_t deg_bound);

/// D(h) = c h' - a h.
RPoly apply_truncated(const RingElement& c, const RPoly& a, const RPoly& h);

/// Reads "ufd:a=x^2"; returns the context.
UfdContext parse_ufd_context(std::string_view text);

struct TruncContext {
  RingDescriptor ring;
  RingElement c;
  RPoly a;
};

/// Reads "trunc:k=2,c=1,a=x"; a may involve t.
TruncContext parse_trunc_context(std::string_view text);

}  // namespace mslab
