#include <gtest/gtest.h>

#include "mslab/certlab.hpp"
#include "mslab/format.hpp"
#include "mslab/opimage.hpp"
#include "support/generators.hpp"

namespace mslab {
namespace {

QPoly P(const char* text) { return parse_qpoly(text); }
Rational Q(const char* text) { return Rational::parse(text); }

// Trial division, independent of the Miller-Rabin routine.
bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

TEST(BracketFactorial, Examples) {
  EXPECT_EQ(bracket_factorial(2, 2, 0), Rational(3));
  EXPECT_EQ(bracket_factorial(0, 5, Q("7/3")), Rational(1));
  EXPECT_EQ(bracket_factorial(3, 1, 1), Rational(24));
}

TEST(BracketFactorial, DoubleFactorialOracle) {
  Integer odd(1);
  for (std::size_t q = 1; q <= 20; ++q) {
    odd *= static_cast<unsigned long>(2 * q - 1);
    EXPECT_EQ(bracket_factorial(q, 2, 0), Rational(odd));
  }
}

TEST(BracketFactorial, Nonvanishing) {
  const std::vector<Rational> alphas = {0, 1, Q("1/2"), Q("-1/2"), Q("5/2"), -2, Q("-7/3")};
  for (std::size_t d = 0; d <= 3; ++d) {
    for (const auto& alpha : alphas) {
      if (in_exceptional_set(d, alpha)) continue;
      for (std::size_t q = 0; q <= 50; ++q) EXPECT_FALSE(bracket_factorial(q, d + 1, alpha).is_zero());
    }
  }
  EXPECT_TRUE(in_exceptional_set(1, -1));
  EXPECT_TRUE(in_exceptional_set(1, -3));
  EXPECT_FALSE(in_exceptional_set(1, -2));
  EXPECT_TRUE(bracket_factorial(2, 2, -3).is_zero());
}

TEST(LzeroMonomial, Examples) {
  EXPECT_EQ(lzero_monomial(2, 0, 1, 0), Rational(3));
  EXPECT_EQ(lzero_monomial(5, 1, 1, 0), Rational(0));
  EXPECT_EQ(lzero_monomial(3, 0, 0, 1), Rational(24));
}

TEST(PhiExpansion, Examples) {
  EXPECT_EQ(phi_expansion(P("t + t^2"), 1, 1), (std::map<std::size_t, Rational>{{3, 2}, {4, 1}}));
  EXPECT_TRUE(phi_expansion(P("t"), 3, 2).empty());
  EXPECT_EQ(phi_expansion(P("t + t^3"), 1, 1), (std::map<std::size_t, Rational>{{4, 2}, {6, 1}}));
  for (const char* bad : {"1 + t", "2*t", "0", "1/3*t^2 + t^3"}) {
    try {
      phi_expansion(P(bad), 1, 1);
      FAIL() << bad;
    } catch (const MathError& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
    }
  }
}

TEST(BProducts, Examples) {
  EXPECT_EQ(b_products(1, 1, 1, 0, 1), (std::vector<Rational>{3}));
  EXPECT_EQ(b_products(1, 1, 0, 1, 2), (std::vector<Rational>{3, 12}));
  EXPECT_TRUE(b_products(1, 1, 0, 1, 0).empty());
}

TEST(Vp, Examples) {
  EXPECT_EQ(vp(Q("18/5"), 3), Valuation(2));
  EXPECT_EQ(vp(Q("18/5"), 5), Valuation(-1));
  for (std::uint64_t p : {2, 3, 5, 7, 101}) EXPECT_EQ(vp(-1, p), Valuation(0));
  EXPECT_TRUE(vp(0, 7).is_infinite());
  try {
    vp(3, 9);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(Vp, ValuationLaws) {
  testing::Gen gen(201);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[gen.index(4)];
    const Rational x = gen.rational(60), y = gen.rational(60);
    EXPECT_EQ(vp(x * y, p), vp(x, p) + vp(y, p));
    const Valuation low = std::min(vp(x, p), vp(y, p));
    EXPECT_FALSE(vp(x + y, p) < low);
  }
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), slow_prime(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));             // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));    // strong pseudoprime to bases up to 23
}

TEST(DirichletPrime, Examples) {
  auto hit = dirichlet_prime(1, 2, 1, 100);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->m, 1u);
  EXPECT_EQ(hit->p, 3u);
  hit = dirichlet_prime(2, 1, 3, 100);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->m, 3u);
  EXPECT_EQ(hit->p, 7u);
  hit = dirichlet_prime(4, 1, 1, 100);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->p, 5u);
  EXPECT_FALSE(dirichlet_prime(30, 7, 1, 0).has_value());
  try {
    dirichlet_prime(4, 2, 1, 10);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

TEST(Certificate, Examples) {
  Certificate cert = certificate_nonmembership(P("t"), 0, 1);
  EXPECT_EQ(cert.m, 1u);
  EXPECT_EQ(cert.prime, 3u);
  EXPECT_EQ(cert.q, 1);
  EXPECT_EQ(cert.r, 1);
  EXPECT_EQ(cert.s0, 1);
  EXPECT_EQ(cert.s_star, 1);
  EXPECT_EQ(cert.h, 2);
  EXPECT_TRUE(cert.phi_values.empty());
  EXPECT_EQ(cert.lzero, Rational(2));
  EXPECT_EQ(cert.bracket, Rational(2));
  EXPECT_TRUE(verify_certificate(cert));

  cert = certificate_nonmembership(P("t + t^2"), 1, 0);
  EXPECT_EQ(cert.m, 1u);
  EXPECT_EQ(cert.bracket, Rational(1));
  EXPECT_EQ(cert.b_values, (std::vector<Rational>{3}));
  EXPECT_EQ(cert.phi_values, (std::vector<Rational>{1}));
  EXPECT_EQ(cert.lzero, Rational(4));
  EXPECT_EQ(cert.lzero, lzero(unit_operator(1, 0), pow(P("t + t^2"), 2)));
  EXPECT_TRUE(verify_certificate(cert));

  try {
    certificate_nonmembership(P("t^2"), 1, -1);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
  EXPECT_THROW(certificate_nonmembership(P("t"), 0, 0), MathError);
  try {
    certificate_nonmembership(P("1 + t"), 1, 0);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(Certificate, TamperingIsDetected) {
  const Certificate good = certificate_nonmembership(P("t + 2*t^3"), 1, Q("1/2"));
  ASSERT_TRUE(verify_certificate(good));
  Certificate bad = good;
  bad.prime = 9;
  EXPECT_FALSE(verify_certificate(bad));
  bad = good;
  ASSERT_FALSE(bad.b_values.empty());
  bad.b_values[0] += Rational(1);
  EXPECT_FALSE(verify_certificate(bad));
  bad = good;
  bad.lzero += Rational(1);
  EXPECT_FALSE(verify_certificate(bad));
  bad = good;
  bad.m += 1;
  EXPECT_FALSE(verify_certificate(bad));
}

TEST(Certificate, SkipsPrimesDividingDenominators) {
  // alpha = 0, d = 0 is excluded; take d = 1, s = 1: p = 2m + 1. The 1/3 forbids p = 3.
  const Certificate cert = certificate_nonmembership(P("t + 1/3*t^2"), 1, 0);
  EXPECT_NE(cert.prime, 3u);
  EXPECT_TRUE(verify_certificate(cert));
}

TEST(CertlabProperties, IdentityChain) {
  testing::Gen gen(202);
  const std::vector<std::pair<std::size_t, Rational>> params = {{1, 0}, {0, 1}, {2, Q("1/3")}, {1, Q("5/2")}};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& [d, alpha] = params[gen.index(params.size())];
    const QPoly f = gen.normalized(5);
    const auto m = static_cast<std::size_t>(gen.integer(1, 3));
    const std::size_t s = f.low_degree();
    const std::size_t n = d + 1;
    const std::size_t i_max = (static_cast<std::size_t>(f.degree()) - s) * m;
    const auto phi = phi_expansion(f, m, d);
    const auto b = b_products(s, m, d, alpha, i_max);
    Rational sum(1);
    for (std::size_t i = 1; i <= i_max; ++i) {
      const auto it = phi.find((s * m + i) * n);
      if (it != phi.end()) sum += b[i - 1] * it->second;
    }
    EXPECT_EQ(lzero(unit_operator(d, alpha), pow(f, m * n)), bracket_factorial(s * m, n, alpha) * sum);
  }
}

TEST(CertlabProperties, Soundness) {
  testing::Gen gen(203);
  for (int trial = 0; trial < 25; ++trial) {
    const QPoly f = gen.normalized(4, 5);
    const std::size_t d = static_cast<std::size_t>(gen.integer(0, 2));
    const Rational alpha = d == 0 ? Rational(1) : Rational(static_cast<long>(gen.integer(0, 2)));
    const Certificate cert = certificate_nonmembership(f, d, alpha);
    EXPECT_TRUE(verify_certificate(cert));
    for (long v : cert.bi_valuations) EXPECT_GT(v, 0);
    for (const auto& v : cert.phi_valuations) EXPECT_FALSE(v < Valuation(0));
    EXPECT_FALSE(member(unit_operator(d, alpha), pow(f, cert.conclusion_exponent)).member);
  }
}

}  // namespace
}  // namespace mslab
