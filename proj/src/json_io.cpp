#include "nzeta/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nzeta::json_io {

Json rational(const Rational& q) { return q.get_str(); }

Json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json exponent(const Exponent& e) {
  Json a = Json::array();
  for (int x : e) a.push_back(x);
  return a;
}

Json weight(const WeightVector& w) {
  Json a = Json::array();
  for (long x : w.entries()) a.push_back(x);
  return a;
}

Json cone(const Cone& c) {
  Json a = Json::array();
  for (const auto& g : c.generators) a.push_back(weight(g));
  return a;
}

Json zeta(const ZetaFactored& z) {
  Json a = Json::array();
  for (auto [d, e] : z.factors()) a.push_back(Json::array({d, e}));
  return a;
}

Json fan(const Fan& f) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : f.vertices) j["vertices"].push_back(weight(v));
  j["maximal_cones"] = f.maximal_cones;
  return j;
}

Json hypotheses(const std::vector<HypothesisCheck>& hs) {
  Json j = Json::object();
  for (const auto& h : hs) {
    if (h.detail.empty())
      j[h.name] = h.ok;
    else
      j[h.name] = Json{{"ok", h.ok}, {"detail", h.detail}};
  }
  return j;
}

Json error(const Error& e) { return Json{{"kind", kind_name(e.kind())}, {"message", e.what()}}; }

Rational parse_rational_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected a rational as \"p/q\" string or integer");
}

static WeightVector parse_weight(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an integer vector");
  std::vector<long> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::Parse, "expected integer entries");
    v.push_back(x.get<long>());
  }
  return WeightVector(v);
}

Cone parse_cone(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "cone must be a list of generators");
  std::vector<WeightVector> g;
  for (const auto& x : j) g.push_back(parse_weight(x));
  return Cone(g);
}

Fan parse_fan(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("maximal_cones"))
    throw Error(ErrorKind::Parse, "fan needs \"vertices\" and \"maximal_cones\"");
  Fan f;
  for (const auto& v : j["vertices"]) f.vertices.push_back(parse_weight(v));
  for (const auto& c : j["maximal_cones"]) {
    std::vector<int> idx;
    for (const auto& i : c) {
      int k = i.get<int>();
      if (k < 0 || k >= static_cast<int>(f.vertices.size())) throw Error(ErrorKind::Parse, "cone index out of range");
      idx.push_back(k);
    }
    f.maximal_cones.push_back(idx);
  }
  return f;
}

std::vector<LocalPointData> parse_local_data(const Json& j, int n) {
  const Json& list = j.is_object() && j.contains("points") ? j["points"] : j;
  if (!list.is_array()) throw Error(ErrorKind::Parse, "local data must be a list of point records");
  std::vector<LocalPointData> out;
  for (const auto& r : list) {
    LocalPointData ld;
    if (r.contains("chart")) ld.chart = parse_cone(r["chart"]);
    if (!r.contains("point")) throw Error(ErrorKind::Parse, "local data record needs \"point\"");
    for (const auto& x : r["point"]) ld.point.push_back(parse_rational_json(x));
    if (static_cast<int>(ld.point.size()) != n - 1)
      throw Error(ErrorKind::Parse, "point needs " + std::to_string(n - 1) + " coordinates");
    if (r.contains("mu")) ld.mu = r["mu"].get<long>();
    if (r.contains("change")) ld.change = parse_change(r["change"].get<std::vector<std::string>>(), n);
    out.push_back(std::move(ld));
  }
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace nzeta::json_io
