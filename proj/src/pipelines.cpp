#include "nzeta/pipelines.hpp"

#include <omp.h>

#include <algorithm>

#include "nzeta/error.hpp"
#include "nzeta/newton.hpp"

namespace nzeta {

Rational milnor_orlik(const WeightVector& w, long d, std::vector<std::string>* warnings) {
  Rational r = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) throw Error(ErrorKind::Domain, "Milnor-Orlik: zero weight");
    if (warnings && d % w[i] != 0) warnings->push_back("w_" + std::to_string(i + 1) + " does not divide d");
    Rational q(d, w[i]);
    q.canonicalize();
    r *= q - 1;
  }
  return r;
}

ShiftInput make_shift_input(const Polynomial& f, const WeightVector& w, int k, int m) {
  const int n = f.nvars();
  if (static_cast<int>(w.size()) != n) throw Error(ErrorKind::Usage, "weight vector has wrong length");
  if (!w.is_positive() || !w.is_primitive()) throw Error(ErrorKind::Usage, "weight must be positive and primitive");
  if (k < 0 || k >= n) throw Error(ErrorKind::Usage, "shift index out of range");
  if (m < 1) throw Error(ErrorKind::Usage, "shift amount m must be >= 1");
  if (f.is_zero() || !is_weighted_homogeneous(f, w))
    throw Error(ErrorKind::Hypothesis, "weighted-homogeneous: f is not weighted homogeneous for w=" + w.to_string());
  ShiftInput in;
  in.f = f;
  in.w = w;
  in.k = k;
  in.m = m;
  in.d = weighted_min(f, w).d;
  for (int i = 0; i < n; ++i) in.d_exponents.push_back(in.d % w[i] == 0 ? in.d / w[i] : 0);
  return in;
}

Polynomial shifted_polynomial(const ShiftInput& in) {
  Exponent e(in.f.nvars());
  e[in.k] = static_cast<int>(in.d_exponents[in.k] + in.m);
  return in.f + Polynomial::monomial(in.f.nvars(), e);
}

MuStarTriple mu_star_triple(long d, long m, long mu_tot) {
  if (d < 2 || m < 1 || mu_tot < 0) throw Error(ErrorKind::Usage, "mu*-triple needs d >= 2, m >= 1, mu_tot >= 0");
  MuStarTriple t;
  t.mu = (d - 1) * (d - 1) * (d - 1) + m * mu_tot;
  t.mu2 = (d - 1) * (d - 1);
  t.mu1 = d - 1;
  return t;
}

namespace {

Cone chart_for(const Fan& fan, const WeightVector& w) {
  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    Cone c = fan.cone(static_cast<int>(i));
    auto it = std::find(c.generators.begin(), c.generators.end(), w);
    if (it == c.generators.end()) continue;
    std::rotate(c.generators.begin(), it, it + 1);
    return c;
  }
  throw Error(ErrorKind::Hypothesis, "admissible-regular-fan: no maximal cone has w=" + w.to_string() + " as a ray");
}

Polynomial lift_tail(const Polynomial& h, int n) {
  std::vector<Polynomial> im;
  for (int i = 1; i < n; ++i) im.push_back(Polynomial::variable(n, i));
  return h.compose(im);
}

struct Analysis {
  ShiftResult r;
  bool ok = true;
  void check(const std::string& name, bool v, const std::string& detail = "") {
    r.hypotheses.push_back({name, v, detail});
    ok = ok && v;
  }
};

Analysis analyze(const ShiftInput& in, const ShiftOptions& opt) {
  Analysis a;
  ShiftResult& r = a.r;
  r.input = in;
  const Polynomial& f = in.f;
  const int n = f.nvars();
  a.check("weighted-homogeneous", true, "d=" + std::to_string(in.d));
  bool divides = std::none_of(in.d_exponents.begin(), in.d_exponents.end(), [](long x) { return x == 0; });
  a.check("weights-divide-degree", divides);
  bool pure = divides;
  if (divides)
    for (int i = 0; i < n; ++i) {
      Exponent e(n);
      e[i] = static_cast<int>(in.d_exponents[i]);
      if (f.coeff(e) == 0) pure = false;
    }
  a.check("convenient", pure && is_convenient(f), "pure powers z_i^{d_i} present");
  if (!a.ok) return a;

  std::string bad;
  for (const auto& I : coordinate_subsets(n)) {
    if (static_cast<int>(I.size()) == n) continue;
    Polynomial g = project_to(f, I);
    auto pr = nd_profile(g);
    if (!pr.nondegenerate) {
      bad += " {";
      for (std::size_t j = 0; j < I.size(); ++j) bad += (j ? "," : "") + std::to_string(I[j] + 1);
      bad += "}";
    }
  }
  a.check("proper-restrictions-nondegenerate", bad.empty(), bad.empty() ? "" : "degenerate f^I for I =" + bad);

  NDProfile prof = nd_profile(f);
  bool only_top = true;
  for (int fi : prof.degenerate_facets)
    if (!(prof.complex.facets[fi].normal == in.w)) only_top = false;
  a.check("weakly-almost-nondegenerate", prof.decided && prof.weakly_almost && only_top,
          prof.notes.empty() ? "" : prof.notes.front());
  if (!a.ok) return a;

  // chart and fan
  try {
    r.fan = opt.fan ? *opt.fan : regular_refinement(f);
    FanReport fr = validate_fan(r.fan, f);
    std::string why;
    for (const auto& p : fr.problems) why += (why.empty() ? "" : "; ") + p;
    a.check("admissible-regular-fan", fr.regular && fr.covers && fr.admissible, why);
    if (!fr.small) r.hypotheses.push_back({"small-fan", false, "informational: fan is not small"});
    Cone c = chart_for(r.fan, in.w);
    for (const auto& ld : opt.local)
      if (ld.chart) c = *ld.chart;
    if (!(c.generators[0] == in.w) || !is_regular(c))
      throw Error(ErrorKind::Hypothesis, "chart must be regular with first ray w");
    r.chart = c;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Hypothesis && e.kind() != ErrorKind::Budget) throw;
    a.check("admissible-regular-fan", false, e.what());
    return a;
  }
  if (!a.ok) return a;

  // singular points of E(w) and pre-non-degeneracy
  std::vector<LocalChange> changes;
  for (const auto& ld : opt.local)
    if (ld.change) changes.push_back({ld.point, *ld.change});
  std::vector<PointCheck> checks;
  bool user_asserted = false;
  try {
    auto rep = verify_pre_nondegenerate(f, in.w, r.chart, changes);
    checks = rep.points;
    a.check("finite-singular-set", true, std::to_string(checks.size()) + " point(s)");
    std::string why;
    for (const auto& pc : checks)
      if (!(pc.convenient && pc.nondegenerate)) why += (why.empty() ? "" : "; ") + pc.note;
    a.check("pre-nondegenerate", rep.verdict, why);
    for (const auto& ld : opt.local)
      if (ld.mu) {
        auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const PointCheck& pc) { return pc.record.coordinates == ld.point; });
        if (it == checks.end())
          a.check("local-data-consistent", false, "supplied point is not a singular point of E(w)");
        else if (it->record.mu != *ld.mu)
          a.check("local-data-consistent", false, "supplied mu disagrees with the computed local Milnor number");
      }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AlgebraicPoint && !opt.local.empty()) {
      // irrational points: take the supplied records as given
      user_asserted = true;
      for (const auto& ld : opt.local) {
        if (!ld.mu) throw Error(ErrorKind::Usage, "local data for an algebraic point needs mu");
        PointCheck pc;
        pc.record.chart = r.chart;
        pc.record.coordinates = ld.point;
        pc.record.mu = *ld.mu;
        pc.method = "user-asserted";
        pc.convenient = pc.nondegenerate = true;
        checks.push_back(pc);
      }
      a.check("finite-singular-set", true, "user-asserted points");
      a.check("pre-nondegenerate", true, "user-asserted");
    } else if (e.kind() == ErrorKind::Hypothesis) {
      a.check("finite-singular-set", false, e.what());
      return a;
    } else {
      throw;
    }
  }
  if (!a.ok) return a;

  r.base = 1;
  for (long di : in.d_exponents) r.base *= di - 1;
  r.mu_tot = 0;
  for (const auto& pc : checks) r.mu_tot += pc.record.mu;
  r.mu = r.base + static_cast<long>(in.m) * in.w[in.k] * r.mu_tot;

  // extra chart monomial of z_k^{d_k+m}
  Polynomial base_cof = chart_pullback(f, r.chart).cofactor;
  Polynomial extra;
  try {
    extra = chart_pullback_shifted(f, r.chart, in.k, in.m).cofactor - base_cof;
  } catch (const Error& e) {
    a.check("chart-compatible-shift", false, e.what());
    return a;
  }
  const auto& [ee, ec] = *extra.terms().begin();
  for (auto& pc : checks) {
    PointEvidence pe;
    pe.check = pc;
    Rational c = ec;
    for (int i = 1; i < n; ++i) {
      Rational p = pc.record.coordinates[i - 1];
      int e = ee[i];
      for (int t = 0; t < (e < 0 ? -e : e); ++t) c = e < 0 ? Rational(c / p) : Rational(c * p);
    }
    pe.extra_coefficient = c;
    if (opt.compute_zeta) {
      Polynomial h = pc.local;
      if (user_asserted) {
        // corank <= 1 assumed: A_mu normal form, coefficients irrelevant to the boundary
        h = Polynomial(n - 1);
        for (int i = 0; i + 1 < n - 1; ++i) {
          Exponent e(n - 1);
          e[i] = 2;
          h.add_term(e, 1);
        }
        Exponent e(n - 1);
        e[n - 2] = static_cast<int>(pc.record.mu) + 1;
        h.add_term(e, 1);
        c = 1;
      }
      Exponent x1e(n);
      x1e[0] = ee[0];
      Exponent x1d(n);
      x1d[0] = static_cast<int>(in.d);
      Polynomial local = Polynomial::monomial(n, x1d) * (lift_tail(h, n) + Polynomial::monomial(n, x1e, c));
      pe.local_zeta = varchenko_zeta(local);
    }
    r.points.push_back(pe);
  }

  Polynomial g = shifted_polynomial(in);
  if (opt.compute_zeta) {
    std::vector<DegenerateFaceData> data;
    if (!r.points.empty()) {
      DegenerateFaceData dd;
      dd.w = in.w;
      dd.d = in.d;
      for (const auto& pe : r.points) {
        dd.points.push_back(pe.check.record);
        dd.local_zetas.push_back(pe.local_zeta);
      }
      data.push_back(dd);
    }
    r.zeta = oka_zeta(g, data);
    r.mu_from_zeta = milnor_from_zeta(r.zeta->zeta, n);
    if (*r.mu_from_zeta != r.mu)
      throw Error(ErrorKind::Domain, "internal inconsistency: zeta degree gives " + std::to_string(*r.mu_from_zeta) +
                                         ", shift formula gives " + std::to_string(r.mu));
  }
  if (opt.cross_check_linear) {
    r.mu_linear = milnor_number(g, opt.milnor);
    if (r.mu_linear->mu != r.mu)
      throw Error(ErrorKind::Domain, "internal inconsistency: linear Milnor number " +
                                         std::to_string(r.mu_linear->mu) + " vs shift formula " + std::to_string(r.mu));
  }
  return a;
}

std::string failed_names(const std::vector<HypothesisCheck>& hs) {
  std::string s;
  for (const auto& h : hs)
    if (!h.ok && h.name != "small-fan") s += (s.empty() ? "" : "; ") + h.name + (h.detail.empty() ? "" : " (" + h.detail + ")");
  return s;
}

}  // namespace

std::vector<HypothesisCheck> shift_hypotheses(const ShiftInput& in, const ShiftOptions& opt) {
  ShiftOptions o = opt;
  o.compute_zeta = false;
  o.cross_check_linear = false;
  return analyze(in, o).r.hypotheses;
}

ShiftResult shift_milnor(const ShiftInput& in, const ShiftOptions& opt) {
  Analysis a = analyze(in, opt);
  if (!a.ok) throw Error(ErrorKind::Hypothesis, "hypothesis failed: " + failed_names(a.r.hypotheses));
  return a.r;
}

OkaAutoResult oka_zeta_auto(const Polynomial& f, const std::vector<LocalPointData>& local,
                            const std::optional<Fan>& fan) {
  const int n = f.nvars();
  OkaAutoResult out;
  NDProfile prof = nd_profile(f);
  if (!prof.decided) throw Error(ErrorKind::Undecided, "non-degeneracy undecided");
  if (!prof.weakly_almost) throw Error(ErrorKind::Hypothesis, "f is not weakly almost Newton non-degenerate");
  if (!prof.degenerate_facets.empty()) out.fan = fan ? *fan : regular_refinement(f);
  for (int fi : prof.degenerate_facets) {
    const WeightVector& w = prof.complex.facets[fi].normal;
    Cone sigma = chart_for(out.fan, w);
    for (const auto& ld : local)
      if (ld.chart && ld.chart->generators[0] == w) sigma = *ld.chart;
    out.charts.push_back(sigma);
    DegenerateFaceData dd;
    dd.w = w;
    dd.d = prof.complex.facets[fi].d;
    Polynomial cof = chart_pullback(f, sigma).cofactor;
    for (auto& rec : sing_points(f, w, sigma)) {
      std::vector<Polynomial> im = {Polynomial::variable(n, 0)};
      const LocalPointData* ld = nullptr;
      for (const auto& l : local)
        if (l.point == rec.coordinates && (!l.chart || l.chart->generators == sigma.generators)) ld = &l;
      for (int i = 1; i < n; ++i) {
        Polynomial yi = Polynomial::constant(n, rec.coordinates[i - 1]);
        yi += ld && ld->change ? lift_tail((*ld->change)[i - 1], n) : Polynomial::variable(n, i);
        im.push_back(yi);
      }
      Exponent x1d(n);
      x1d[0] = static_cast<int>(dd.d);
      Polynomial loc = Polynomial::monomial(n, x1d) * cof.compose(im);
      try {
        dd.local_zetas.push_back(varchenko_zeta(loc));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Hypothesis) throw;
        std::string pt;
        for (const auto& c : rec.coordinates) pt += (pt.empty() ? "" : ",") + c.get_str();
        throw Error(ErrorKind::Hypothesis, "local equation at (" + pt + ") in chart " + sigma.to_string() +
                                               " is Newton degenerate; supply a coordinate change (--local-data)");
      }
      dd.points.push_back(rec);
    }
    out.data.push_back(dd);
  }
  out.zeta = oka_zeta(f, out.data);
  return out;
}

namespace {

CurveAnalysis analyze_curve(const Polynomial& f, int k, int m, const std::vector<LocalPointData>& local,
                            const ZariskiOptions& opt) {
  CurveAnalysis ca;
  ca.f = f;
  const int n = f.nvars();
  WeightVector ones(std::vector<long>(n, 1));
  try {
    bool homog = !f.is_zero() && is_weighted_homogeneous(f, ones);
    ca.hypotheses.push_back({"homogeneous", homog, ""});
    if (!homog) {
      ca.failure = "not homogeneous";
      return ca;
    }
    ca.d = f.total_degree();
    bool red = is_reduced_homogeneous(f, opt.seed);
    ca.hypotheses.push_back({"reduced", red, ""});
    ShiftInput in = make_shift_input(f, ones, k, m);
    ca.g = shifted_polynomial(in);
    ShiftOptions so;
    so.local = local;
    Analysis a = analyze(in, so);
    for (const auto& h : a.r.hypotheses) ca.hypotheses.push_back(h);
    if (!a.ok || !red) {
      ca.failure = failed_names(ca.hypotheses);
      return ca;
    }
    ca.shift = a.r;
    if (n == 3) ca.mu_star = mu_star_triple(ca.d, m, a.r.mu_tot);
    if (opt.linear_mu_star) ca.mu_star_linear = mu_star(ca.g, opt.trials, opt.seed).values;
  } catch (const Error& e) {
    ca.failure = e.what();
  }
  return ca;
}

}  // namespace

ZariskiReport zariski_surface_report(const Polynomial& f0, const Polynomial& f1, int k, int m,
                                     const ZariskiOptions& opt) {
  if (f0.nvars() != f1.nvars()) throw Error(ErrorKind::Usage, "curves live in different dimensions");
  ZariskiReport rep;
  rep.f0 = f0;
  rep.f1 = f1;
  rep.k = k;
  rep.m = m;
#pragma omp parallel sections
  {
#pragma omp section
    rep.curve0 = analyze_curve(f0, k, m, opt.local0, opt);
#pragma omp section
    rep.curve1 = analyze_curve(f1, k, m, opt.local1, opt);
  }
  bool same_degree = rep.curve0.d == rep.curve1.d;
  rep.curve0.hypotheses.push_back({"same-degree", same_degree, ""});
  rep.curve1.hypotheses.push_back({"same-degree", same_degree, ""});
  rep.citations = {"shift-formula", "oka-zeta-formula", "varchenko-formula", "zeta-degree-milnor-relation",
                   "mu-star-triple", "mu-star-zariski-pair-theorem"};
  rep.note =
      "Equal zeta-functions and mu*-sequences are computed; separation of g0 and g1 into different path "
      "components of the mu*-constant stratum is the cited theorem's conclusion and is not computed here.";
  if (!rep.curve0.failure.empty() || !rep.curve1.failure.empty() || !same_degree) {
    rep.verdict = "hypotheses-failed";
    return rep;
  }
  bool same_zeta = rep.curve0.shift->zeta->zeta == rep.curve1.shift->zeta->zeta;
  bool same_mu = rep.curve0.mu_star->values() == rep.curve1.mu_star->values();
  if (rep.curve0.mu_star_linear && rep.curve1.mu_star_linear)
    same_mu = same_mu && *rep.curve0.mu_star_linear == *rep.curve1.mu_star_linear;
  rep.verdict = same_zeta && same_mu ? "mu-star-zariski-candidate" : "mismatch";
  return rep;
}

}  // namespace nzeta
