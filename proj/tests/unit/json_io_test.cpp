#include <gtest/gtest.h>

#include "mslab/format.hpp"
#include "mslab/json_io.hpp"

namespace mslab {
namespace {

TEST(CertificateJson, RoundTrip) {
  const Certificate cert = certificate_nonmembership(parse_qpoly("t + 2*t^3 - 1/5*t^4"), 1, Rational::parse("1/2"));
  const Json j = certificate_to_json(cert);
  const Certificate back = certificate_from_json(Json::parse(j.dump()));
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_EQ(certificate_to_json(back), j);
  EXPECT_EQ(j.at("f"), "-1/5*t^4 + 2*t^3 + t");
}

TEST(CertificateJson, Malformed) {
  Json j = certificate_to_json(certificate_nonmembership(parse_qpoly("t"), 0, 1));
  j.erase("prime");
  EXPECT_THROW(certificate_from_json(j), ParseError);
  EXPECT_THROW(certificate_from_json(Json::array()), ParseError);
  j = certificate_to_json(certificate_nonmembership(parse_qpoly("t"), 0, 1));
  j["b_values"] = "nope";
  EXPECT_THROW(certificate_from_json(j), ParseError);
}

TEST(CofiniteJson, ParsesSpecLayout) {
  const CofiniteSubspace v =
      cofinite_from_json(Json::parse(R"({"modulus":[["t",1],["t - 1",1]],"vbar_basis":[[1,"-1/2"]]})"));
  EXPECT_EQ(v.modulus(), parse_qpoly("t^2 - t"));
  EXPECT_TRUE(v.contains(parse_qpoly("2 - t")));
  EXPECT_EQ(cofinite_to_json(v).dump(), R"({"modulus":[["t",1],["t - 1",1]],"vbar_basis":[[1,"-1/2"]]})");
}

TEST(CofiniteJson, Malformed) {
  EXPECT_THROW(cofinite_from_json(Json::parse(R"({"vbar_basis":[]})")), ParseError);
  EXPECT_THROW(cofinite_from_json(Json::parse(R"({"modulus":[["t",0]]})")), ParseError);
  EXPECT_THROW(cofinite_from_json(Json::parse(R"({"modulus":[["t"]]})")), ParseError);
  EXPECT_THROW(cofinite_from_json(Json::parse(R"({"modulus":[["t",1]],"vbar_basis":[[0.5]]})")), ParseError);
}

}  // namespace
}  // namespace mslab
