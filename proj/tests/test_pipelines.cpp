#include <doctest.h>

#include "curve_builder.hpp"
#include "nzeta/error.hpp"
#include "nzeta/pipelines.hpp"

using namespace nzeta;

static const char* kEx33 = "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3";
static const WeightVector kW({2, 2, 1});
static const Cone kSigma({WeightVector({2, 2, 1}), WeightVector({1, 1, 1}), WeightVector({1, 0, 0})});

static ZetaFactored Z(std::vector<std::pair<long, long>> p) { return ZetaFactored::from_pairs(p); }

TEST_CASE("Milnor-Orlik") {
  CHECK(milnor_orlik(kW, 6) == 20);
  CHECK(milnor_orlik(WeightVector({1, 1, 1}), 4) == 27);
  CHECK(milnor_orlik(WeightVector({1, 2}), 4) == 3);
  CHECK(milnor_number(parse_polynomial("z1^4+z2^2", 2)).mu == 3);
  std::vector<std::string> warn;
  CHECK(milnor_orlik(WeightVector({2, 3}), 5, &warn) == Rational(3, 2) * Rational(2, 3));
  CHECK(warn.size() == 2);
  CHECK_THROWS_AS(milnor_orlik(WeightVector({0, 1}), 3), Error);
}

TEST_CASE("shift formula on the example, three ways") {
  auto f = parse_polynomial(kEx33, 3);
  for (int m = 1; m <= 4; ++m) {
    ShiftOptions o;
    o.cross_check_linear = true;
    auto r = shift_milnor(make_shift_input(f, kW, 1, m), o);
    CHECK(r.mu == 20 + 4 * m);
    CHECK(r.mu_tot == 2);
    CHECK(r.base == 20);
    CHECK(*r.mu_from_zeta == r.mu);
    CHECK(r.mu_linear->mu == r.mu);
    CHECK(r.zeta->zeta_fs == Z({{3, 1}, {6, -4}}));
    CHECK(r.zeta->zeta_prime == Z({{3, 1}, {6, -2}}));
    CHECK(r.zeta->zeta.degree() == -21 - 4 * m);
  }
}

TEST_CASE("shift formula zetas for both gcd cases") {
  auto f = parse_polynomial(kEx33, 3);
  for (int m : {1, 2, 3, 6}) {
    auto r = shift_milnor(make_shift_input(f, kW, 1, m));
    ZetaFactored want = m % 3 ? Z({{6 * m + 18, -1}, {2 * m + 6, 1}, {3, 1}, {6, -2}})
                              : Z({{2 * m + 6, -2}, {3, 1}, {6, -2}});
    CHECK(r.zeta->zeta == want);
    CHECK(zeta_multiplicity_factor(r.zeta->zeta) == std::pair<long, long>{3, 1});
  }
}

TEST_CASE("shift with the user chart, point and coordinate change") {
  auto f = parse_polynomial(kEx33, 3);
  LocalPointData ld;
  ld.chart = kSigma;
  ld.point = {Rational(-1, 2), Rational(-1, 4)};
  ld.mu = 2;
  ld.change = parse_change({"x2+2*x3", "x3"}, 3);
  ShiftOptions o;
  o.local = {ld};
  auto r = shift_milnor(make_shift_input(f, kW, 1, 1), o);
  CHECK(r.mu == 24);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].check.method == "user change");
  CHECK(r.points[0].check.principal == parse_polynomial("1/4*x2^2+64*x3^3", 2, 'x', 2));
  CHECK(r.points[0].extra_coefficient == Rational(-1, 2));
  CHECK(r.points[0].local_zeta == Z({{24, -1}, {8, 1}}));

  ld.mu = 3;
  o.local = {ld};
  CHECK_THROWS_AS(shift_milnor(make_shift_input(f, kW, 1, 1), o), Error);
}

TEST_CASE("shift is affine in m with slope w_k mu_tot") {
  auto f = parse_polynomial(kEx33, 3);
  for (int k = 0; k < 3; ++k) {
    long prev = -1;
    for (int m = 1; m <= 3; ++m) {
      ShiftOptions o;
      o.compute_zeta = true;
      auto r = shift_milnor(make_shift_input(f, kW, k, m), o);
      if (prev >= 0) CHECK(r.mu - prev == kW[k] * r.mu_tot);
      prev = r.mu;
    }
  }
}

TEST_CASE("isolated input: the shift adds nothing") {
  auto f = parse_polynomial("z1^3+z2^3+z3^3", 3);
  auto r = shift_milnor(make_shift_input(f, WeightVector({1, 1, 1}), 0, 2));
  CHECK(r.mu_tot == 0);
  CHECK(r.mu == 8);
  CHECK(milnor_number(shifted_polynomial(r.input)).mu == 8);
}

TEST_CASE("nodal cubic cone") {
  auto f = curves::good_curve(3, {{2, 3}});
  auto r = shift_milnor(make_shift_input(f, WeightVector({1, 1, 1}), 0, 1));
  CHECK(r.mu_tot == 1);
  CHECK(r.mu == 9);
  CHECK(milnor_number(shifted_polynomial(r.input)).mu == 9);
  CHECK(mu_star_triple(3, 1, 1).values() == std::vector<long>{9, 4, 2});
}

TEST_CASE("hypothesis failures are named") {
  auto bad = parse_polynomial("z1^2+2*z1*z2+z2^2+z3^2", 3);
  try {
    shift_milnor(make_shift_input(bad, WeightVector({1, 1, 1}), 0, 1));
    FAIL("expected hypothesis failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Hypothesis);
    CHECK(std::string(e.what()).find("proper-restrictions-nondegenerate") != std::string::npos);
  }
  CHECK_THROWS_AS(make_shift_input(parse_polynomial("z1^2+z2^3", 2), WeightVector({1, 1}), 0, 1), Error);
  CHECK_THROWS_AS(make_shift_input(parse_polynomial(kEx33, 3), kW, 1, 0), Error);
}

TEST_CASE("mu*-triple") {
  CHECK(mu_star_triple(6, 1, 12).values() == std::vector<long>{137, 25, 5});
  CHECK(mu_star_triple(2, 1, 0).values() == std::vector<long>{1, 1, 1});
  CHECK_THROWS_AS(mu_star_triple(1, 1, 0), Error);
}

TEST_CASE("Zariski report") {
  auto f0 = curves::good_curve(3, {{2, 3}});
  auto f1 = curves::good_curve(3, {{-1, 2}}, 50);
  auto same = zariski_surface_report(f0, f0, 0, 1);
  CHECK(same.verdict == "mu-star-zariski-candidate");
  auto pair = zariski_surface_report(f0, f1, 0, 1);
  CHECK(pair.verdict == "mu-star-zariski-candidate");
  CHECK(pair.curve0.shift->zeta->zeta == pair.curve1.shift->zeta->zeta);
  auto swapped = zariski_surface_report(f1, f0, 0, 1);
  CHECK(swapped.verdict == pair.verdict);
  CHECK(swapped.curve0.f == pair.curve1.f);
  CHECK(swapped.curve0.shift->mu == pair.curve1.shift->mu);

  auto two = curves::good_curve(3, {{2, 3}, {-1, 2}});
  auto mm = zariski_surface_report(f0, two, 0, 1);
  CHECK(mm.verdict == "mismatch");
  CHECK(mm.curve1.mu_star->mu - mm.curve0.mu_star->mu == 1);

  auto deg = zariski_surface_report(f0, parse_polynomial("z1^4+z2^4+z3^4", 3), 0, 1);
  CHECK(deg.verdict == "hypotheses-failed");
}

TEST_CASE("general Oka path agrees with the shift pipeline") {
  auto f = parse_polynomial(kEx33, 3);
  LocalPointData ld;
  ld.chart = kSigma;
  ld.point = {Rational(-1, 2), Rational(-1, 4)};
  ld.mu = 2;
  ld.change = parse_change({"x2+2*x3", "x3"}, 3);
  for (int m : {1, 3}) {
    auto in = make_shift_input(f, kW, 1, m);
    auto g = shifted_polynomial(in);
    auto viaShift = shift_milnor(in);
    auto viaAuto = oka_zeta_auto(g, {ld});
    CHECK(viaAuto.zeta.zeta == viaShift.zeta->zeta);
    CHECK(viaAuto.zeta.zeta_prime == viaShift.zeta->zeta_prime);
    // in the chart C(w,v,e1) the raw local equation is degenerate without the shear
    LocalPointData raw = ld;
    raw.change.reset();
    CHECK_THROWS_AS(oka_zeta_auto(g, {raw}), Error);
    // the automatically chosen chart C(w,v,e2) needs no change at all
    auto plain = oka_zeta_auto(g);
    CHECK(plain.zeta.zeta == viaShift.zeta->zeta);
  }
}

TEST_CASE("A'Campo assembly of resolution data matches the Oka output") {
  // components: E(w) strata of the boundary (from the Varchenko terms), the
  // correction at the degenerate facet, and the exceptional data of each point
  auto f = parse_polynomial(kEx33, 3);
  auto in = make_shift_input(f, kW, 1, 1);
  auto r = shift_milnor(in);
  auto vr = varchenko(shifted_polynomial(in), true);
  std::vector<std::pair<long, long>> comps;
  for (const auto& t : vr.terms) comps.push_back({t.d, t.chi.get_num().get_si()});
  comps.push_back({6, -2});  // (-1)^{n-1} mu_tot copies of E(w) removed
  for (auto [d, e] : r.points[0].local_zeta.factors()) comps.push_back({d, -e});
  CHECK(acampo_zeta(comps) == r.zeta->zeta);
}
