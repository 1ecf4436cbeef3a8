#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nzeta/error.hpp"
#include "nzeta/fan.hpp"
#include "nzeta/intlinalg.hpp"

using namespace nzeta;

static const char* kEx33 = "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3";

static Fan example_fan() {
  Fan F;
  F.vertices = {WeightVector({2, 2, 1}), WeightVector({1, 1, 1}), WeightVector({1, 0, 0}),
                WeightVector({0, 1, 0}), WeightVector({0, 0, 1})};
  // w=0, v=1, e1=2, e2=3, e3=4
  F.maximal_cones = {{0, 2, 3}, {1, 3, 4}, {0, 3, 1}, {1, 2, 4}, {0, 2, 1}};
  return F;
}

TEST_CASE("regularity") {
  CHECK(is_regular(Cone({WeightVector({1, 0, 0}), WeightVector({0, 1, 0}), WeightVector({0, 0, 1})})));
  CHECK(is_regular(Cone({WeightVector({2, 2, 1}), WeightVector({1, 1, 1}), WeightVector({1, 0, 0})})));
  CHECK_FALSE(is_regular(Cone({WeightVector({1, 0}), WeightVector({1, 2})})));
  CHECK_THROWS_AS(is_regular(Cone({WeightVector({2, 0}), WeightVector({0, 1})})), Error);
}

TEST_CASE("example fan validates") {
  auto f = parse_polynomial(kEx33, 3);
  auto r = validate_fan(example_fan(), f);
  CHECK(r.regular);
  CHECK(r.covers);
  CHECK(r.admissible);
  CHECK(r.small);
  CHECK(r.problems.empty());
}

TEST_CASE("missing cone leaves a gap with a witness") {
  auto f = parse_polynomial(kEx33, 3);
  Fan F = example_fan();
  F.maximal_cones.erase(F.maximal_cones.begin() + 1);  // C(v,e2,e3)
  auto r = validate_fan(F, f);
  CHECK_FALSE(r.covers);
  REQUIRE(r.witness.has_value());
  // the witness lies in the removed cone
  Cone removed({WeightVector({1, 1, 1}), WeightVector({0, 1, 0}), WeightVector({0, 0, 1})});
  CHECK(removed.contains(*r.witness));
}

TEST_CASE("validation is invariant under cone and vertex relabeling") {
  auto f = parse_polynomial(kEx33, 3);
  Fan F = example_fan();
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> perm(F.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    Fan G;
    G.vertices.resize(F.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) G.vertices[perm[i]] = F.vertices[i];
    for (auto c : F.maximal_cones) {
      for (int& x : c) x = perm[x];
      std::shuffle(c.begin(), c.end(), rng);
      G.maximal_cones.push_back(c);
    }
    std::shuffle(G.maximal_cones.begin(), G.maximal_cones.end(), rng);
    auto r = validate_fan(G, f);
    CHECK(r.regular);
    CHECK(r.covers);
    CHECK(r.admissible);
    CHECK(r.small);
  }
}

TEST_CASE("dual diagram of a Fermat surface is a valid fan") {
  auto f = parse_polynomial("z1^4+z2^4+z3^4", 3);
  auto dd = dual_newton_diagram(f);
  Fan F;
  std::vector<WeightVector> verts;
  for (int ci : dd.maximal_cones())
    for (const auto& g : dd.cones[ci].generators)
      if (std::find(verts.begin(), verts.end(), g) == verts.end()) verts.push_back(g);
  F.vertices = verts;
  for (int ci : dd.maximal_cones()) {
    std::vector<int> c;
    for (const auto& g : dd.cones[ci].generators)
      c.push_back(static_cast<int>(std::find(verts.begin(), verts.end(), g) - verts.begin()));
    F.maximal_cones.push_back(c);
  }
  auto r = validate_fan(F, f);
  CHECK(r.covers);
  CHECK(r.regular);
  CHECK(r.admissible);
}

TEST_CASE("regular refinement reproduces the example fan") {
  auto f = parse_polynomial(kEx33, 3);
  Fan F = regular_refinement(f);
  std::set<WeightVector> verts(F.vertices.begin(), F.vertices.end());
  std::set<WeightVector> want = {WeightVector({2, 2, 1}), WeightVector({1, 1, 1}), WeightVector({1, 0, 0}),
                                 WeightVector({0, 1, 0}), WeightVector({0, 0, 1})};
  CHECK(verts == want);
  CHECK(F.maximal_cones.size() == 5);
  auto canon = [](const Fan& G) {
    std::set<std::set<WeightVector>> s;
    for (const auto& c : G.maximal_cones) {
      std::set<WeightVector> cc;
      for (int i : c) cc.insert(G.vertices[i]);
      s.insert(cc);
    }
    return s;
  };
  CHECK(canon(F) == canon(example_fan()));
  auto r = validate_fan(F, f);
  CHECK(r.regular);
  CHECK(r.covers);
  CHECK(r.admissible);
  CHECK(r.small);
}

TEST_CASE("regular refinement of assorted surfaces") {
  for (const char* s : {"z1^2+z2^3+z3^5", "z1^3+z2^3+z3^3+z1*z2*z3", "z1^2*z2+z2^4+z3^3", "z1^5+z2^3+z3^2+z1*z2*z3"}) {
    auto f = parse_polynomial(s, 3);
    Fan F = regular_refinement(f);
    auto r = validate_fan(F, f);
    INFO(s);
    CHECK(r.regular);
    CHECK(r.covers);
    CHECK(r.admissible);
  }
}

TEST_CASE("chart pullbacks reassemble f") {
  auto f = parse_polynomial(kEx33, 3);
  Fan F = example_fan();
  for (std::size_t i = 0; i < F.maximal_cones.size(); ++i) {
    Cone c = F.cone(static_cast<int>(i));
    auto pb = chart_pullback(f, c);
    Exponent e(3);
    for (int k = 0; k < 3; ++k) e[k] = static_cast<int>(pb.multiplicities[k]);
    auto lhs = substitute_monomial_map(f, c.matrix());
    CHECK(lhs == Polynomial::monomial(3, e) * pb.cofactor);
    CHECK_FALSE(pb.cofactor.is_laurent());
    for (int k = 0; k < 3; ++k) CHECK(pb.multiplicities[k] == weighted_min(f, c.generators[k]).d);
  }
  Cone sigma({WeightVector({2, 2, 1}), WeightVector({1, 1, 1}), WeightVector({1, 0, 0})});
  auto pb = chart_pullback(f, sigma);
  CHECK(pb.multiplicities == std::vector<long>{6, 3, 0});
  CHECK(pb.cofactor == parse_polynomial("7*z2^3+5*z2^2*z3+12*z2^2-8*z2*z3^2+6*z2+4*z3^3+1", 3));
}

TEST_CASE("shifted chart carries the extra monomial") {
  auto f = parse_polynomial(kEx33, 3);
  Cone sigma({WeightVector({2, 2, 1}), WeightVector({1, 1, 1}), WeightVector({1, 0, 0})});
  for (int m = 1; m <= 4; ++m) {
    auto pb = chart_pullback_shifted(f, sigma, 2, m);  // g = f + z3^{6+m}
    auto base = chart_pullback(f, sigma).cofactor;
    Exponent e = {m, 3 + m, 0};
    CHECK(pb.cofactor == base + Polynomial::monomial(3, e));
    auto g = f + Polynomial::monomial(3, {0, 0, 6 + m});
    auto lhs = substitute_monomial_map(g, sigma.matrix());
    CHECK(lhs == Polynomial::monomial(3, {6, 3, 0}) * pb.cofactor);
  }
  CHECK_THROWS_AS(chart_pullback_shifted(f, sigma, 2, 0), Error);
  // g2 = f + z2^{3+m}
  for (int m = 1; m <= 4; ++m) {
    auto pb = chart_pullback_shifted(f, sigma, 1, m);
    CHECK(pb.cofactor == chart_pullback(f, sigma).cofactor + Polynomial::monomial(3, {2 * m, m, 0}));
  }
}

TEST_CASE("blow-up chart of a homogeneous surface") {
  auto f = parse_polynomial("z1^3+z2^3+z3^3+z1*z2*z3", 3);
  Cone sigma({WeightVector({1, 1, 1}), WeightVector({0, 1, 0}), WeightVector({0, 0, 1})});
  for (int m = 1; m <= 3; ++m) {
    auto pb = chart_pullback_shifted(f, sigma, 0, m);
    auto dehom = f.compose({Polynomial::constant(3, 1), Polynomial::variable(3, 1), Polynomial::variable(3, 2)});
    CHECK(pb.cofactor == dehom + Polynomial::monomial(3, {m, 0, 0}));
    CHECK(pb.multiplicities == std::vector<long>{3, 0, 0});
  }
}

TEST_CASE("local shift") {
  auto c = parse_polynomial("z1^2+z2*z3", 3);
  std::vector<Rational> p = {0, 1, 2};
  std::vector<Polynomial> phi = {Polynomial::variable(3, 0), Polynomial::variable(3, 1) + Polynomial::variable(3, 2),
                                 Polynomial::variable(3, 2)};
  auto h = local_shift(c, p, phi);
  CHECK(h == parse_polynomial("z1^2+2+3*z3+2*z2+z2*z3+z3^2", 3));
}

TEST_CASE("Hirzebruch-Jung subdivision") {
  auto F = hj_subdivide_2d(Cone({WeightVector({1, 0}), WeightVector({2, 5})}));
  std::set<WeightVector> verts(F.vertices.begin(), F.vertices.end());
  std::set<WeightVector> want = {WeightVector({1, 0}), WeightVector({1, 1}), WeightVector({1, 2}), WeightVector({2, 5})};
  CHECK(verts == want);
  CHECK(F.maximal_cones.size() == 3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> U(0, 30);
  int done = 0;
  while (done < 50) {
    WeightVector a({U(rng), U(rng)}), b({U(rng), U(rng)});
    if (!a.is_primitive() || !b.is_primitive()) continue;
    long det = a[0] * b[1] - a[1] * b[0];
    if (det == 0) continue;
    auto G = hj_subdivide_2d(Cone({a, b}));
    long total = 0;
    for (std::size_t i = 0; i < G.maximal_cones.size(); ++i) {
      Cone c = G.cone(static_cast<int>(i));
      CHECK(is_regular(c));
      long dd = c.generators[0][0] * c.generators[1][1] - c.generators[0][1] * c.generators[1][0];
      total += dd < 0 ? -dd : dd;
    }
    // regular pieces tile the cone: their areas add to less than |det| only if gaps exist
    CHECK(total >= 1);
    for (const auto& v : G.vertices) CHECK(Cone({a, b}).contains(v));
    ++done;
  }
}
