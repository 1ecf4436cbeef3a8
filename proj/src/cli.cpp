#include "nzeta/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nzeta/json_io.hpp"
#include "nzeta/milnor.hpp"
#include "nzeta/newton.hpp"
#include "nzeta/nondegeneracy.hpp"
#include "nzeta/pipelines.hpp"

namespace nzeta::cli {

using json_io::Json;

namespace {

struct Config {
  std::string command;
  int n = 0;
  std::vector<std::string> polys;
  std::string output;
  std::uint64_t seed = 1;
  int trials = 5;
  bool safe = false;
  bool assume_nd = false;
  bool cross_check = false;
  bool linear = false;
  std::string local_data, local_data1, fan_file;
  std::string w, cone, mu_star;
  int k = 0, m = 0, trunc = 0, budget = 0;
  long mu = -1;
};

std::string read_poly_arg(const std::string& s) {
  std::ifstream in(s);
  if (!in) return s;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string t = ss.str();
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  return t;
}

std::vector<long> parse_longs(const std::string& s, char sep = ',') {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "expected integers in \"" + s + "\"");
    }
  }
  return v;
}

Cone parse_cone_arg(const std::string& s) {
  std::vector<WeightVector> g;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) g.push_back(WeightVector(parse_longs(item)));
  return Cone(g);
}

// canonical argument list reproducing the run
Json canonical_args(const Config& c, const std::vector<Polynomial>& ps) {
  Json a = Json::array({c.command, "-n", std::to_string(c.n)});
  auto opt = [&](const char* name, const std::string& v) {
    if (!v.empty()) {
      a.push_back(name);
      a.push_back(v);
    }
  };
  auto num = [&](const char* name, long v) {
    if (v > 0) {
      a.push_back(name);
      a.push_back(std::to_string(v));
    }
  };
  opt("--w", c.w);
  num("--k", c.k);
  num("--m", c.m);
  opt("--cone", c.cone);
  num("--trunc", c.trunc);
  if (c.mu >= 0) opt("--mu", std::to_string(c.mu));
  opt("--mu-star", c.mu_star);
  num("--budget", c.budget);
  opt("--seed", std::to_string(c.seed));
  opt("--trials", std::to_string(c.trials));
  if (c.safe) a.push_back("--safe");
  if (c.assume_nd) a.push_back("--assume-nd");
  if (c.cross_check) a.push_back("--cross-check");
  if (c.linear) a.push_back("--linear");
  opt("--local-data", c.local_data);
  opt("--local-data1", c.local_data1);
  opt("--fan", c.fan_file);
  a.push_back("--");
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json face_json(const Face& f) {
  Json pts = Json::array();
  for (const auto& p : f.points) pts.push_back(json_io::exponent(p));
  return pts;
}

Json zeta_block(const ZetaFactored& z) {
  return Json{{"factors", json_io::zeta(z)}, {"display", z.to_string()}, {"degree", z.degree()}};
}

Json milnor_json(const MilnorReport& r) {
  Json trace = Json::array();
  for (auto [m, v] : r.trace) trace.push_back(Json::array({m, v}));
  return Json{{"mu", r.mu}, {"certificate", r.certificate}, {"m", r.m}, {"trace", trace}};
}

Json points_json(const std::vector<PointEvidence>& pts) {
  Json a = Json::array();
  for (const auto& pe : pts) {
    Json p = Json::array();
    for (const auto& x : pe.check.record.coordinates) p.push_back(json_io::rational(x));
    a.push_back(Json{{"chart", json_io::cone(pe.check.record.chart)},
                     {"point", p},
                     {"mu", pe.check.record.mu},
                     {"method", pe.check.method},
                     {"local_equation", pe.check.local.to_string('x', 2)},
                     {"principal_part", pe.check.principal.to_string('x', 2)},
                     {"extra_coefficient", json_io::rational(pe.extra_coefficient)},
                     {"local_zeta", zeta_block(pe.local_zeta)}});
  }
  return a;
}

Json shift_json(const ShiftResult& r) {
  Json j;
  j["mu"] = r.mu;
  j["mu_tot"] = r.mu_tot;
  j["milnor_orlik"] = r.base;
  j["shifted"] = shifted_polynomial(r.input).to_string();
  j["d"] = r.input.d;
  j["d_exponents"] = r.input.d_exponents;
  j["hypotheses"] = json_io::hypotheses(r.hypotheses);
  j["chart"] = json_io::cone(r.chart);
  j["fan"] = json_io::fan(r.fan);
  j["points"] = points_json(r.points);
  if (r.zeta) {
    j["zeta"] = zeta_block(r.zeta->zeta);
    j["zeta_prime"] = zeta_block(r.zeta->zeta_prime);
    j["zeta_fs"] = zeta_block(r.zeta->zeta_fs);
    j["mu_from_zeta"] = *r.mu_from_zeta;
  }
  if (r.mu_linear) j["mu_linear"] = milnor_json(*r.mu_linear);
  return j;
}


int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage:
    case ErrorKind::Parse:
    case ErrorKind::Domain: return 1;
    default: return 2;
  }
}

struct Outcome {
  Json body = Json::object();
  Json citations = Json::array();
  int code = 0;
};

Outcome execute(const Config& c, const std::vector<Polynomial>& ps) {
  Outcome o;
  const Polynomial& f = ps.at(0);
  const int n = c.n;
  auto local = [&](const std::string& path) {
    return path.empty() ? std::vector<LocalPointData>{} : json_io::parse_local_data(json_io::read_file(path), n);
  };
  std::optional<Fan> fan;
  if (!c.fan_file.empty()) fan = json_io::parse_fan(json_io::read_file(c.fan_file));
  auto need_w = [&]() {
    if (c.w.empty()) throw Error(ErrorKind::Usage, "--w is required");
    return WeightVector(parse_longs(c.w));
  };
  MilnorOptions mo;
  mo.mode = c.safe ? MilnorMode::Safe : MilnorMode::Stabilize;
  if (c.budget > 0) mo.max_m = c.budget;

  const std::string& cmd = c.command;
  Json& j = o.body;
  if (cmd == "newton") {
    auto nc = newton_complex(f);
    j["convenient"] = nc.convenient;
    j["vertices"] = Json::array();
    for (const auto& v : nc.vertices) j["vertices"].push_back(json_io::exponent(v));
    j["facets"] = Json::array();
    for (const auto& fc : nc.facets)
      j["facets"].push_back(Json{{"normal", json_io::weight(fc.normal)},
                                 {"d", fc.d},
                                 {"compact", nc.faces[fc.face].compact},
                                 {"points", face_json(nc.faces[fc.face])}});
    j["compact_faces"] = Json::array();
    for (int fi : nc.compact_faces())
      j["compact_faces"].push_back(Json{{"dim", nc.faces[fi].dim}, {"points", face_json(nc.faces[fi])}});
    o.citations = {"newton-polyhedron"};
  } else if (cmd == "dual") {
    auto dd = dual_newton_diagram(f);
    j["positive_vertices"] = Json::array();
    for (const auto& v : dd.positive_vertices) j["positive_vertices"].push_back(json_io::weight(v));
    j["maximal_cones"] = Json::array();
    for (int ci : dd.maximal_cones()) {
      Cone cc(dd.cones[ci].generators);
      j["maximal_cones"].push_back(Json{{"generators", json_io::cone(cc)},
                                        {"vertex", json_io::exponent(dd.complex.faces[dd.cones[ci].face].points[0])}});
    }
    o.citations = {"dual-newton-diagram"};
  } else if (cmd == "nd") {
    auto pr = nd_profile(f);
    j["decided"] = pr.decided;
    j["nondegenerate"] = pr.nondegenerate;
    j["convenient"] = pr.convenient;
    j["weakly_almost"] = pr.weakly_almost;
    j["degenerate_facets"] = Json::array();
    for (int fi : pr.degenerate_facets) j["degenerate_facets"].push_back(json_io::weight(pr.complex.facets[fi].normal));
    j["faces"] = Json::array();
    for (const auto& v : pr.verdicts) {
      Json fv{{"dim", v.face.dim},
              {"points", face_json(v.face)},
              {"nondegenerate", v.nondegenerate},
              {"decided", v.decided},
              {"method", method_name(v.method)}};
      if (v.witness) fv["witness"] = *v.witness;
      j["faces"].push_back(fv);
    }
    j["notes"] = pr.notes;
    o.citations = {"newton-nondegeneracy", "weakly-almost-nondegeneracy"};
  } else if (cmd == "newton-number") {
    j["newton_number"] = json_io::integer(newton_number(f));
    o.citations = {"newton-number"};
  } else if (cmd == "zeta-varchenko") {
    auto rep = varchenko(f, c.assume_nd);
    j["zeta"] = zeta_block(rep.zeta);
    j["factors"] = json_io::zeta(rep.zeta);
    Json per = Json::array();
    for (const auto& [I, z] : rep.per_I) {
      Json idx = Json::array();
      for (int i : I) idx.push_back(i + 1);
      per.push_back(Json{{"I", idx}, {"factors", json_io::zeta(z)}});
    }
    j["per_I"] = per;
    try {
      j["milnor_from_zeta"] = milnor_from_zeta(rep.zeta, n);
    } catch (const Error&) {
      j["milnor_from_zeta"] = nullptr;
    }
    o.citations = {"varchenko-formula", "zeta-degree-milnor-relation"};
  } else if (cmd == "zeta-oka") {
    OkaResult z;
    if (c.k > 0) {
      ShiftOptions so;
      so.local = local(c.local_data);
      so.fan = fan;
      auto r = shift_milnor(make_shift_input(f, need_w(), c.k - 1, c.m > 0 ? c.m : 1), so);
      z = *r.zeta;
      j["polynomial"] = shifted_polynomial(r.input).to_string();
      j["points"] = points_json(r.points);
    } else {
      auto r = oka_zeta_auto(f, local(c.local_data), fan);
      z = r.zeta;
      j["polynomial"] = f.to_string();
      Json faces = Json::array();
      for (std::size_t i = 0; i < r.data.size(); ++i) {
        Json pts = Json::array();
        for (std::size_t q = 0; q < r.data[i].points.size(); ++q) {
          Json p = Json::array();
          for (const auto& x : r.data[i].points[q].coordinates) p.push_back(json_io::rational(x));
          pts.push_back(Json{{"point", p}, {"mu", r.data[i].points[q].mu}, {"local_zeta", zeta_block(r.data[i].local_zetas[q])}});
        }
        faces.push_back(Json{{"w", json_io::weight(r.data[i].w)}, {"d", r.data[i].d}, {"chart", json_io::cone(r.charts[i])}, {"points", pts}});
      }
      j["degenerate_faces"] = faces;
    }
    j["zeta"] = zeta_block(z.zeta);
    j["zeta_prime"] = zeta_block(z.zeta_prime);
    j["zeta_fs"] = zeta_block(z.zeta_fs);
    j["factors"] = json_io::zeta(z.zeta);
    j["milnor_from_zeta"] = milnor_from_zeta(z.zeta, n);
    auto [md, me] = zeta_multiplicity_factor(z.zeta);
    j["zeta_multiplicity"] = md;
    j["zeta_multiplicity_factor"] = Json::array({md, me});
    o.citations = {"oka-zeta-formula", "varchenko-formula", "zeta-degree-milnor-relation"};
  } else if (cmd == "milnor") {
    auto r = milnor_number(f, mo);
    j = milnor_json(r);
    o.citations = {"jacobian-span-rank", r.certificate == "safe" ? "safe-truncation-bound" : "truncation-stabilization"};
  } else if (cmd == "mu-star") {
    auto s = mu_star(f, c.trials, c.seed, true, mo);
    j["mu_star"] = s.values;
    j["certification"] = s.certification;
    o.citations = {"mu-star-sequence", "generic-plane-sections"};
  } else if (cmd == "in-w") {
    if (c.trunc < 1) throw Error(ErrorKind::Usage, "--trunc is required");
    if (!c.mu_star.empty()) {
      auto ms = parse_longs(c.mu_star);
      j["in_W_star"] = in_W_star(f, n, c.trunc, ms, c.trials, c.seed);
      long mx = *std::max_element(ms.begin(), ms.end());
      j["certified_truncation"] = c.trunc >= mx;
      o.citations = {"w-star-generic-flag"};
    } else {
      if (c.mu < 0) throw Error(ErrorKind::Usage, "--mu or --mu-star is required");
      long N = truncated_space(n, c.trunc).N();
      long rk = jacobian_rank(f, c.trunc);
      j["in_W"] = rk == N - c.mu;
      j["N"] = N;
      j["rank"] = rk;
      j["certified_truncation"] = c.trunc >= c.mu;
      o.citations = {"w-stratum-rank-condition"};
    }
  } else if (cmd == "shift") {
    if (c.k < 1) throw Error(ErrorKind::Usage, "--k is required (1-based)");
    ShiftOptions so;
    so.local = local(c.local_data);
    so.fan = fan;
    so.cross_check_linear = c.cross_check;
    so.milnor = mo;
    j = shift_json(shift_milnor(make_shift_input(f, need_w(), c.k - 1, c.m > 0 ? c.m : 1), so));
    o.citations = {"shift-formula", "milnor-orlik", "oka-zeta-formula", "zeta-degree-milnor-relation"};
  } else if (cmd == "zariski-report") {
    if (ps.size() != 2) throw Error(ErrorKind::Usage, "zariski-report needs two polynomials");
    ZariskiOptions zo;
    zo.local0 = local(c.local_data);
    zo.local1 = local(c.local_data1);
    zo.linear_mu_star = c.linear;
    zo.trials = c.trials;
    zo.seed = c.seed;
    auto rep = zariski_surface_report(ps[0], ps[1], c.k > 0 ? c.k - 1 : 0, c.m > 0 ? c.m : 1, zo);
    auto curve = [&](const CurveAnalysis& ca) {
      Json cj;
      cj["f"] = ca.f.to_string();
      cj["g"] = ca.g.to_string();
      cj["degree"] = ca.d;
      cj["hypotheses"] = json_io::hypotheses(ca.hypotheses);
      if (ca.shift) {
        cj["mu"] = ca.shift->mu;
        cj["mu_tot"] = ca.shift->mu_tot;
        cj["zeta"] = zeta_block(ca.shift->zeta->zeta);
      }
      if (ca.mu_star) cj["mu_star"] = ca.mu_star->values();
      if (ca.mu_star_linear) cj["mu_star_linear"] = *ca.mu_star_linear;
      if (!ca.failure.empty()) cj["failure"] = ca.failure;
      return cj;
    };
    j["curve0"] = curve(rep.curve0);
    j["curve1"] = curve(rep.curve1);
    // flat summary: hypotheses of both curves, zetas and mu* side by side
    Json hyp = Json::object();
    for (const auto& [tag, ca] : {std::pair{"f0", &rep.curve0}, std::pair{"f1", &rep.curve1}})
      for (const auto& h : ca->hypotheses) hyp[std::string(tag) + ":" + h.name] = h.ok;
    j["hypotheses"] = hyp;
    j["zeta"] = Json::array({j["curve0"].value("zeta", Json()), j["curve1"].value("zeta", Json())});
    j["mu_star"] = Json::array({j["curve0"].value("mu_star", Json()), j["curve1"].value("mu_star", Json())});
    j["verdict"] = rep.verdict;
    j["note"] = rep.note;
    for (const auto& s : rep.citations) o.citations.push_back(s);
    if (rep.verdict == "hypotheses-failed") o.code = 2;
  } else if (cmd == "fan-validate") {
    if (!fan) fan = regular_refinement(f);
    auto r = validate_fan(*fan, f, c.seed);
    j["fan"] = json_io::fan(*fan);
    j["regular"] = r.regular;
    j["covers"] = r.covers;
    j["admissible"] = r.admissible;
    j["small"] = r.small;
    j["problems"] = r.problems;
    if (r.witness) j["witness"] = json_io::weight(*r.witness);
    o.citations = {"regular-admissible-fan"};
  } else if (cmd == "chart-pullback") {
    if (c.cone.empty()) throw Error(ErrorKind::Usage, "--cone is required, e.g. \"2,2,1;1,1,1;1,0,0\"");
    Cone sigma = parse_cone_arg(c.cone);
    ChartPullback pb = c.k > 0 ? chart_pullback_shifted(f, sigma, c.k - 1, c.m > 0 ? c.m : 1) : chart_pullback(f, sigma);
    j["cone"] = json_io::cone(pb.cone);
    j["regular"] = is_regular(sigma);
    j["multiplicities"] = pb.multiplicities;
    j["cofactor"] = pb.cofactor.to_string('y', 1);
    o.citations = {"toric-chart-pullback"};
  } else {
    throw Error(ErrorKind::Usage, "unknown command " + cmd);
  }
  return o;
}

void emit(const Config& c, const Json& doc, std::ostream& out) {
  std::string text = doc.dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output);
    if (!f) throw Error(ErrorKind::Usage, "cannot write " + c.output);
    f << text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Newton polyhedra, Milnor numbers and monodromy zeta-functions"};
  app.require_subcommand(1);
  struct Spec {
    const char* name;
    const char* help;
    int polys;
  };
  const Spec specs[] = {
      {"newton", "Newton polyhedron: vertices, facets, compact faces", 1},
      {"dual", "dual Newton diagram", 1},
      {"nd", "face-by-face Newton non-degeneracy profile", 1},
      {"newton-number", "Kouchnirenko Newton number", 1},
      {"zeta-varchenko", "Varchenko zeta-function", 1},
      {"zeta-oka", "Oka zeta-function (weakly almost non-degenerate input)", 1},
      {"milnor", "Milnor number by truncated Jacobian rank", 1},
      {"mu-star", "Teissier mu*-sequence by sampled plane sections", 1},
      {"in-w", "W(n,m,mu) or W*(n,m,mu*) membership", 1},
      {"shift", "Milnor number of f + z_k^(d_k+m) via the shift formula", 1},
      {"zariski-report", "mu*-Zariski pair report for two curves", 2},
      {"fan-validate", "validate a fan (regular, complete, admissible, small)", 1},
      {"chart-pullback", "toric chart pullback of f", 1},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-n", c.n, "number of variables")->required()->check(CLI::Range(1, 8));
    sub->add_option("poly", c.polys, "polynomial text or file")->required()->expected(s.polys);
    sub->add_option("-o,--output", c.output, "write JSON here instead of stdout");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--trials", c.trials, "sampled trials");
    sub->add_option("--budget", c.budget, "maximal truncation degree");
    sub->add_flag("--safe", c.safe, "certify Milnor numbers at m >= mu");
    sub->add_flag("--assume-nd", c.assume_nd, "skip the non-degeneracy check");
    sub->add_flag("--cross-check", c.cross_check, "recompute by the linear method");
    sub->add_flag("--linear", c.linear, "also compute mu* by the linear method");
    sub->add_option("--local-data", c.local_data, "local data JSON");
    sub->add_option("--local-data1", c.local_data1, "local data JSON for the second curve");
    sub->add_option("--fan", c.fan_file, "fan JSON");
    sub->add_option("--w", c.w, "weight vector, e.g. 2,2,1");
    sub->add_option("--k", c.k, "shifted variable (1-based)");
    sub->add_option("--m", c.m, "shift amount");
    sub->add_option("--cone", c.cone, "cone generators, e.g. 2,2,1;1,1,1;1,0,0");
    sub->add_option("--trunc", c.trunc, "truncation degree");
    sub->add_option("--mu", c.mu, "Milnor number");
    sub->add_option("--mu-star", c.mu_star, "mu*-sequence, e.g. 8,2,1");
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Json doc{{"error", Json{{"kind", "usage"}, {"message", e.what()}}}, {"citations", Json::array()}};
    out << doc.dump(2) << "\n";
    err << e.what() << "\n";
    return 1;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  Json doc;
  doc["command"] = c.command;
  std::vector<Polynomial> ps;
  int code = 0;
  try {
    for (const auto& p : c.polys) ps.push_back(parse_polynomial(read_poly_arg(p), c.n));
    doc["input"] = Json{{"n", c.n}, {"polynomials", Json::array()}, {"args", canonical_args(c, ps)}};
    for (const auto& p : ps) doc["input"]["polynomials"].push_back(p.to_string());
    Outcome o = execute(c, ps);
    for (auto& [k, v] : o.body.items()) doc[k] = v;
    doc["citations"] = o.citations;
    code = o.code;
  } catch (const Error& e) {
    if (!doc.contains("input")) doc["input"] = Json{{"n", c.n}, {"raw", c.polys}};
    doc["error"] = json_io::error(e);
    doc["citations"] = Json::array();
    err << kind_name(e.kind()) << ": " << e.what() << "\n";
    code = exit_code(e.kind());
  }
  try {
    emit(c, doc, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace nzeta::cli
