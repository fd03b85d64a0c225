#include "mslab/json_io.hpp"

#include "mslab/format.hpp"

namespace mslab {

namespace {

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError(0, "expected a rational number or string");
}

Integer integer_from(const Json& j) {
  const Rational value = rational_from(j);
  if (!value.is_integer()) throw ParseError(0, "expected an integer");
  return value.numerator();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T number(const Json& j, const char* key) {
  const Json& value = field(j, key);
  if (!value.is_number_integer()) throw ParseError(0, std::string("field '") + key + "' must be an integer");
  return value.get<T>();
}

Json valuation_to_json(const Valuation& v) { return v.is_infinite() ? Json("inf") : Json(v.value()); }

Valuation valuation_from(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Valuation::infinity();
  if (j.is_number_integer()) return Valuation(j.get<long>());
  throw ParseError(0, "expected a valuation");
}

template <class T, class F>
std::vector<T> list_from(const Json& j, const char* key, F convert) {
  const Json& value = field(j, key);
  if (!value.is_array()) throw ParseError(0, std::string("field '") + key + "' must be an array");
  std::vector<T> out;
  for (const auto& item : value) out.push_back(convert(item));
  return out;
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["f"] = format_poly(cert.f);
  j["d"] = cert.d;
  j["alpha"] = cert.alpha.to_string();
  j["s"] = cert.s;
  j["m"] = cert.m;
  j["prime"] = cert.prime;
  j["q"] = cert.q.get_str();
  j["r"] = cert.r.get_str();
  j["s0"] = cert.s0.get_str();
  j["s_star"] = cert.s_star.get_str();
  j["h"] = cert.h.get_str();
  j["b_values"] = Json::array();
  for (const auto& b : cert.b_values) j["b_values"].push_back(b.to_string());
  j["bi_valuations"] = cert.bi_valuations;
  j["phi_values"] = Json::array();
  for (const auto& phi : cert.phi_values) j["phi_values"].push_back(phi.to_string());
  j["phi_valuations"] = Json::array();
  for (const auto& v : cert.phi_valuations) j["phi_valuations"].push_back(valuation_to_json(v));
  j["bracket"] = cert.bracket.to_string();
  j["lzero"] = cert.lzero.to_string();
  j["conclusion_exponent"] = cert.conclusion_exponent;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const Json& f = field(j, "f");
  if (!f.is_string()) throw ParseError(0, "field 'f' must be a polynomial string");
  cert.f = parse_qpoly(f.get<std::string>());
  cert.d = number<std::size_t>(j, "d");
  cert.alpha = rational_from(field(j, "alpha"));
  cert.s = number<std::size_t>(j, "s");
  cert.m = number<std::size_t>(j, "m");
  cert.prime = number<std::uint64_t>(j, "prime");
  cert.q = integer_from(field(j, "q"));
  cert.r = integer_from(field(j, "r"));
  cert.s0 = integer_from(field(j, "s0"));
  cert.s_star = integer_from(field(j, "s_star"));
  cert.h = integer_from(field(j, "h"));
  cert.b_values = list_from<Rational>(j, "b_values", rational_from);
  cert.bi_valuations = list_from<long>(j, "bi_valuations", [](const Json& v) {
    if (!v.is_number_integer()) throw ParseError(0, "valuations must be integers");
    return v.get<long>();
  });
  cert.phi_values = list_from<Rational>(j, "phi_values", rational_from);
  cert.phi_valuations = list_from<Valuation>(j, "phi_valuations", valuation_from);
  cert.bracket = rational_from(field(j, "bracket"));
  cert.lzero = rational_from(field(j, "lzero"));
  cert.conclusion_exponent = number<std::size_t>(j, "conclusion_exponent");
  return cert;
}

CofiniteSubspace cofinite_from_json(const Json& j) {
  std::vector<ModulusFactor> factors;
  const Json& modulus = field(j, "modulus");
  if (!modulus.is_array()) throw ParseError(0, "'modulus' must be an array");
  for (const auto& entry : modulus) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_number_integer() ||
        entry[1].get<long>() < 1) {
      throw ParseError(0, "modulus entries are [\"factor\", multiplicity]");
    }
    factors.push_back({parse_qpoly(entry[0].get<std::string>()), entry[1].get<std::size_t>()});
  }
  std::vector<std::vector<Rational>> basis;
  if (j.contains("vbar_basis")) {
    const Json& vectors = j.at("vbar_basis");
    if (!vectors.is_array()) throw ParseError(0, "'vbar_basis' must be an array");
    for (const auto& v : vectors) {
      if (!v.is_array()) throw ParseError(0, "'vbar_basis' entries must be arrays");
      std::vector<Rational> row;
      for (const auto& x : v) row.push_back(rational_from(x));
      basis.push_back(std::move(row));
    }
  }
  return CofiniteSubspace(std::move(factors), basis);
}

Json cofinite_to_json(const CofiniteSubspace& v) {
  Json j;
  j["modulus"] = Json::array();
  for (const auto& f : v.factors()) j["modulus"].push_back(Json::array({format_poly(f.factor), f.multiplicity}));
  j["vbar_basis"] = Json::array();
  for (const auto& row : v.vbar_basis()) {
    Json out = Json::array();
    for (const auto& x : row) {
      if (x.is_integer() && x.numerator().fits_slong_p()) {
        out.push_back(x.numerator().get_si());
      } else {
        out.push_back(x.to_string());
      }
    }
    j["vbar_basis"].push_back(std::move(out));
  }
  return j;
}

}  // namespace mslab
