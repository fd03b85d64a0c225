#include "mslab/opimage.hpp"

#include <vector>

namespace mslab {

namespace {

ReductionResult reduce_monomial(const MonomialOperator& op, const QPoly& f) {
  if (op.lambda.is_zero()) {
    throw MathError(ErrorCode::UnsupportedReduction, "lambda = 0 has no top-degree elimination; use member");
  }
  std::vector<Rational> work = f.coeffs();
  std::vector<Rational> witness(work.size() > op.d ? work.size() - op.d : 0);
  const Rational inv_lambda = op.lambda.inverse();
  // t^k = lambda^-1 (c n + alpha) t^(n-1) - D(lambda^-1 t^n) with n = k - d.
  for (std::size_t k = work.size(); k-- > op.d + 1;) {
    if (work[k].is_zero()) continue;
    const Rational a = work[k] * inv_lambda;
    const std::size_t n = k - op.d;
    work[k] = Rational(0);
    work[n - 1] += a * (op.c * Rational(static_cast<long>(n)) + op.alpha);
    witness[n] -= a;
  }
  return {QPoly(std::move(work)), QPoly(std::move(witness)), true};
}

// One image basis element: D(prefactor * t^n) = lead * t^k + lower terms.
struct ImageColumn {
  Rational lead;
  std::vector<std::pair<std::size_t, Rational>> lower;  // (degree, coefficient) below k
};

ReductionResult reduce_jacobi(const JacobiOperator& op, const QPoly& f) {
  const bool ea = !op.alpha.is_zero();
  const bool eb = !op.beta.is_zero();
  // Smallest degree that can be eliminated, the witness index for degree k,
  // and the image column for that index.
  const std::size_t min_k = (ea && eb) ? 1 : 0;
  auto index_for = [&](std::size_t k) -> std::size_t {
    if (ea && eb) return k - 1;
    if (!ea && !eb) return k + 1;
    return k;
  };
  auto column = [&](std::size_t n) -> ImageColumn {
    const Rational rn(static_cast<long>(n));
    if (ea && eb) {
      // D((1-t^2) t^n) = -(n+2+a+b) t^(n+1) - (a-b) t^n + n t^(n-1)
      ImageColumn col{-(rn + Rational(2) + op.alpha + op.beta), {{n, op.beta - op.alpha}}};
      if (n >= 1) col.lower.emplace_back(n - 1, rn);
      return col;
    }
    if (eb) {
      // D((1+t) t^n) = (n+1+b) t^n + n t^(n-1)
      ImageColumn col{rn + Rational(1) + op.beta, {}};
      if (n >= 1) col.lower.emplace_back(n - 1, rn);
      return col;
    }
    if (ea) {
      // D((1-t) t^n) = -(n+1+a) t^n + n t^(n-1)
      ImageColumn col{-(rn + Rational(1) + op.alpha), {}};
      if (n >= 1) col.lower.emplace_back(n - 1, rn);
      return col;
    }
    // D(t^n) = n t^(n-1)
    return ImageColumn{rn, {}};
  };

  std::vector<Rational> work = f.coeffs();
  std::vector<Rational> g(work.size() + 1);
  for (std::size_t k = work.size(); k-- > min_k;) {
    if (work[k].is_zero()) continue;
    const std::size_t n = index_for(k);
    const ImageColumn col = column(n);
    if (col.lead.is_zero()) {
      throw MathError(ErrorCode::DegenerateDiagonal,
                      "image basis leading coefficient vanishes at degree " + std::to_string(k));
    }
    const Rational factor = work[k] / col.lead;
    work[k] = Rational(0);
    for (const auto& [deg, coeff] : col.lower) work[deg] -= factor * coeff;
    g[n] += factor;
  }
  QPoly prefactor = QPoly{Rational(1)};
  if (ea) prefactor = prefactor * QPoly{Rational(1), Rational(-1)};
  if (eb) prefactor = prefactor * QPoly{Rational(1), Rational(1)};
  return {QPoly(std::move(work)), prefactor * QPoly(std::move(g)), true};
}

Membership member_monomial_no_lambda(const MonomialOperator& op, const QPoly& f) {
  // D(t^n) = (c n + alpha) t^(n-1): solve degree by degree.
  std::vector<Rational> h(f.size() + 1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coeffs()[j].is_zero()) continue;
    const Rational mult = op.c * Rational(static_cast<long>(j + 1)) + op.alpha;
    if (mult.is_zero()) return {false, std::nullopt};
    h[j + 1] = f.coeffs()[j] / mult;
  }
  return {true, QPoly(std::move(h))};
}

}  // namespace

ReductionResult reduce(const OperatorSpec& op, const QPoly& f) {
  ReductionResult out = std::visit(
      [&](const auto& o) {
        if constexpr (std::is_same_v<std::decay_t<decltype(o)>, MonomialOperator>) {
          return reduce_monomial(o, f);
        } else {
          return reduce_jacobi(o, f);
        }
      },
      op);
  out.admissible = admissible(op, out.witness);
  return out;
}

Membership member(const OperatorSpec& op, const QPoly& f) {
  if (const auto* m = std::get_if<MonomialOperator>(&op)) {
    if (m->lambda.is_zero()) return member_monomial_no_lambda(*m, f);
    ReductionResult r = reduce_monomial(*m, f);
    if (m->alpha.is_zero()) {
      // t^d = D(-1/lambda) lies in the image as well.
      const Rational top = r.normal_form.coeff(m->d);
      if (!top.is_zero()) {
        r.normal_form.add_term(-top, m->d);
        r.witness.add_term(-top / m->lambda, 0);
      }
    }
    if (!r.normal_form.is_zero()) return {false, std::nullopt};
    return {true, std::move(r.witness)};
  }
  ReductionResult r = reduce_jacobi(std::get<JacobiOperator>(op), f);
  if (!r.normal_form.is_zero()) return {false, std::nullopt};
  return {true, std::move(r.witness)};
}

Rational lzero(const MonomialOperator& op, const QPoly& f) {
  return reduce_monomial(op, f).normal_form.coeff(0);
}

ImStructure im_structure(const OperatorSpec& op) {
  ImStructure out;
  Membership one = member(op, QPoly{Rational(1)});
  out.one_in_image = one.member;
  out.one_witness = std::move(one.witness);
  if (const auto* m = std::get_if<MonomialOperator>(&op)) {
    if (!m->alpha.is_zero()) out.s_cap_im = ImageMeet::Zero;
    else out.s_cap_im = m->d >= 1 ? ImageMeet::SpanTd : ImageMeet::All;
  } else {
    out.s_cap_im = out.one_in_image ? ImageMeet::All : ImageMeet::Zero;
  }
  return out;
}

const char* to_string(ImageMeet meet) {
  switch (meet) {
    case ImageMeet::Zero: return "ZERO";
    case ImageMeet::SpanTd: return "SPAN_TD";
    case ImageMeet::All: return "ALL";
  }
  return "?";
}

}  // namespace mslab
