#include "klr/json_io.hpp"

#include <stdexcept>

namespace klr {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.coefficients()) j[std::to_string(e)] = to_json(c);
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (j.is_number_integer()) return LaurentPoly(j.get<long>());
  if (!j.is_object()) throw std::invalid_argument("expected a polynomial object, got " + j.dump());
  std::map<int, Integer> coeffs;
  for (const auto& [k, v] : j.items()) coeffs[std::stoi(k)] = integer_from_json(v);
  return LaurentPoly(coeffs);
}

Json to_json(const LaurentSeries& s) {
  Json j;
  j["coeffs"] = to_json(s.known_part());
  j["lower"] = s.lower_bound();
  j["trunc"] = s.is_exact() ? Json(nullptr) : Json(s.truncation_degree());
  return j;
}

LaurentSeries series_from_json(const Json& j) {
  // A bare polynomial is read as an exact series.
  if (!j.is_object() || !j.contains("coeffs")) return LaurentSeries(poly_from_json(j));
  const LaurentPoly p = poly_from_json(j.at("coeffs"));
  if (!j.contains("trunc") || j.at("trunc").is_null()) return LaurentSeries(p);
  const int lower = j.value("lower", p.is_zero() ? 0 : p.min_degree());
  return LaurentSeries(p.coefficients(), lower, j.at("trunc").get<int>());
}

Json to_json(const RootVector& v) { return Json(v.coords()); }

RootVector root_from_json(const Json& j) { return RootVector(j.get<std::vector<int>>()); }

Json to_json(const Character& c) {
  Json j;
  j["theta"] = to_json(c.theta());
  Json blocks = Json::array();
  for (const auto& b : c.blocks()) blocks.push_back(to_json(b));
  j["blocks"] = blocks;
  Json entries = Json::object();
  for (const auto& [w, s] : c.entries()) entries[word_to_string(w)] = to_json(s);
  j["entries"] = entries;
  return j;
}

Character character_from_json(const Json& j) {
  std::vector<RootVector> blocks;
  if (j.contains("blocks"))
    for (const auto& b : j.at("blocks")) blocks.push_back(root_from_json(b));
  else
    blocks.push_back(root_from_json(j.at("theta")));
  Character c(std::move(blocks));
  for (const auto& [k, v] : j.at("entries").items()) c.add(word_from_string(k), series_from_json(v));
  return c;
}

Json to_json(const ConvexPreorder& order) {
  Json j;
  j["type"] = order.cartan().label();
  j["functionals"] = order.functionals();
  return j;
}

ConvexPreorder order_from_json(const Json& j) {
  auto cd = std::make_shared<const CartanData>(CartanData::build(j.at("type").get<std::string>()));
  if (!j.contains("functionals")) return ConvexPreorder::slope(cd, {});
  return ConvexPreorder(cd, j.at("functionals").get<std::vector<std::vector<long>>>());
}

Json to_json(const KostantPartition& xi) {
  Json parts = Json::array();
  for (const auto& [beta, x] : xi.parts) parts.push_back(Json::array({to_json(beta), x}));
  return parts;
}

Json to_json(const RootPartition& pi) {
  Json j;
  j["label"] = pi.to_string();
  j["kostant"] = to_json(pi.kostant);
  j["mu"] = pi.mu;
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["name"] = r.name;
  j["window"] = r.window;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  j["failures"] = r.failure_count;
  j["witnesses"] = r.failures;
  return j;
}

namespace {

const char* kind_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Simple:
      return "simple";
    case Provenance::RealPair:
      return "real_pair";
    case Provenance::Tower:
      return "tower";
  }
  return "?";
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "simple") {
    p.kind = Provenance::Simple;
  } else if (kind == "real_pair") {
    p.kind = Provenance::RealPair;
    p.beta = root_from_json(j.at("beta"));
    p.gamma = root_from_json(j.at("gamma"));
  } else if (kind == "tower") {
    p.kind = Provenance::Tower;
    p.beta = root_from_json(j.at("beta"));
    p.i = j.at("i").get<int>();
    p.plus = j.at("plus").get<bool>();
  } else {
    throw std::invalid_argument("unknown provenance kind " + kind);
  }
  return p;
}

Json provenance_to_json(const Provenance& p) {
  Json j;
  j["kind"] = kind_name(p.kind);
  if (p.kind == Provenance::RealPair) {
    j["beta"] = to_json(p.beta);
    j["gamma"] = to_json(p.gamma);
  } else if (p.kind == Provenance::Tower) {
    j["beta"] = to_json(p.beta);
    j["i"] = p.i;
    j["plus"] = p.plus;
  }
  return j;
}

}  // namespace

Json to_json(const StandardCharTable& t) {
  Json j;
  j["type"] = t.cartan->label();
  j["cutoff"] = t.cutoff;
  Json cusp = Json::array();
  for (const auto& [alpha, ch] : t.cuspidal) {
    Json e;
    e["root"] = to_json(alpha);
    e["simple"] = to_json(ch);
    if (const auto it = t.provenance.find(alpha); it != t.provenance.end()) e["provenance"] = provenance_to_json(it->second);
    cusp.push_back(e);
  }
  j["cuspidal"] = cusp;
  Json ds = Json::array();
  for (const auto& c : t.delta_standard) ds.push_back(to_json(c));
  j["delta_standard"] = ds;
  Json mn = Json::array();
  for (const auto& c : t.minuscule) mn.push_back(to_json(c));
  j["minuscule"] = mn;
  Json im = Json::array();
  for (const auto& [mu, data] : t.imaginary)
    im.push_back({{"mu", mu},
                  {"simple", to_json(data.simple)},
                  {"standard", {{"numerator", to_json(data.standard.numerator)}, {"power", data.standard.power}}}});
  j["imaginary"] = im;
  return j;
}

StandardCharTable table_from_json(const Json& j, const ConvexPreorder& order) {
  StandardCharTable t;
  t.cartan = order.cartan_ptr();
  if (j.contains("type") && j.at("type").get<std::string>() != t.cartan->label())
    throw std::invalid_argument("table type " + j.at("type").get<std::string>() + " does not match the order");
  t.cutoff = j.value("cutoff", 0);
  t.gamma = gamma_data(order, 2 * t.cartan->delta_height() + 2);
  for (const auto& e : j.value("cuspidal", Json::array())) {
    const RootVector alpha = root_from_json(e.at("root"));
    t.cuspidal[alpha] = character_from_json(e.at("simple"));
    if (e.contains("provenance")) t.provenance[alpha] = provenance_from_json(e.at("provenance"));
  }
  for (const auto& c : j.value("delta_standard", Json::array())) t.delta_standard.push_back(character_from_json(c));
  for (const auto& c : j.value("minuscule", Json::array())) t.minuscule.push_back(character_from_json(c));
  for (const auto& e : j.value("imaginary", Json::array())) {
    ImaginaryData d;
    d.simple = character_from_json(e.at("simple"));
    d.standard.numerator = character_from_json(e.at("standard").at("numerator"));
    d.standard.power = e.at("standard").at("power").get<int>();
    t.imaginary[e.at("mu").get<Multipartition>()] = std::move(d);
  }
  return t;
}

}  // namespace klr
