#include <doctest.h>

#include <random>

#include "nzeta/error.hpp"
#include "nzeta/poly.hpp"

using namespace nzeta;

static const char* kEx33 = "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3";

TEST_CASE("parse merges and drops zeros") {
  auto p = parse_polynomial("z1^2 + z2^3", 2);
  CHECK(p.size() == 2);
  CHECK(p.coeff({2, 0}) == 1);
  CHECK(p.coeff({0, 3}) == 1);
  auto q = parse_polynomial("z1 + 2*z1 - 3*z1 + 1/2*z2*z2", 2);
  CHECK(q.size() == 1);
  CHECK(q.coeff({0, 2}) == Rational(1, 2));
}

TEST_CASE("parse the weighted example and its serialization") {
  auto f = parse_polynomial(kEx33, 3);
  CHECK(f.size() == 7);
  CHECK(f.coeff({0, 0, 6}) == 7);
  CHECK(f.coeff({1, 0, 4}) == 5);
  CHECK(f.coeff({0, 1, 4}) == 12);
  CHECK(f.coeff({2, 0, 2}) == -8);
  CHECK(f.coeff({0, 2, 2}) == 6);
  CHECK(f.coeff({3, 0, 0}) == 4);
  CHECK(f.coeff({0, 3, 0}) == 1);
  CHECK(f.to_string() == kEx33);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polynomial("z1^-1", 1), Error);
  CHECK_THROWS_AS(parse_polynomial("z3", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("z1 +* z2", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("", 2), Error);
  try {
    parse_polynomial("z1^-1", 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("negative exponent") != std::string::npos);
  }
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + rng() % 4;
    Polynomial p(n);
    int terms = rng() % 6;
    for (int k = 0; k < terms; ++k) {
      Exponent e(n);
      for (auto& x : e) x = rng() % 5;
      long num = static_cast<long>(rng() % 21) - 10, den = 1 + rng() % 5;
      p.add_term(e, make_rational(num, den));
    }
    if (p.is_zero()) continue;
    CHECK(parse_polynomial(p.to_string(), n) == p);
  }
}

TEST_CASE("restrict") {
  auto f = parse_polynomial(kEx33, 3);
  CHECK(restrict_to(f, {0, 1}) == parse_polynomial("4*z1^3+z2^3", 3));
  CHECK(restrict_to(f, {0, 1, 2}) == f);
  CHECK(restrict_to(parse_polynomial("z1*z2", 2), {0}).is_zero());
  // nested restriction equals restriction to the intersection
  CHECK(restrict_to(restrict_to(f, {0, 2}), {0}) == restrict_to(f, {0}));
  CHECK(project_to(f, {0, 1}) == parse_polynomial("4*z1^3+z2^3", 2));
}

TEST_CASE("weighted min and face functions") {
  auto f = parse_polynomial(kEx33, 3);
  auto m = weighted_min(f, WeightVector({2, 2, 1}));
  CHECK(m.d == 6);
  CHECK(m.face.size() == 7);
  auto g = parse_polynomial("z1^2+z2^3", 2);
  auto m1 = weighted_min(g, WeightVector({1, 1}));
  CHECK(m1.d == 2);
  CHECK(m1.face == std::vector<Exponent>{{2, 0}});
  auto m2 = weighted_min(g, WeightVector({3, 2}));
  CHECK(m2.d == 6);
  CHECK(m2.face.size() == 2);
  CHECK_THROWS_AS(weighted_min(Polynomial(2), WeightVector({1, 1})), Error);

  CHECK(is_weighted_homogeneous(f, WeightVector({2, 2, 1})));
  CHECK_FALSE(is_weighted_homogeneous(f + parse_polynomial("z2^4", 3), WeightVector({2, 2, 1})));
  CHECK(is_weighted_homogeneous(parse_polynomial("3*z1^2*z2^5", 2), WeightVector({4, 9})));
}

TEST_CASE("weighted degree is additive under products") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Polynomial a(3), b(3);
    for (int k = 0; k < 4; ++k) {
      Exponent e(3), e2(3);
      for (int i = 0; i < 3; ++i) {
        e[i] = rng() % 4;
        e2[i] = rng() % 4;
      }
      a.add_term(e, 1 + static_cast<long>(rng() % 5));
      b.add_term(e2, 1 + static_cast<long>(rng() % 5));
    }
    WeightVector w({static_cast<long>(rng() % 4), static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)});
    CHECK(weighted_min(a * b, w).d == weighted_min(a, w).d + weighted_min(b, w).d);
    CHECK(is_weighted_homogeneous(face_function(a, w), w));
  }
}

TEST_CASE("initial polynomial and reducedness") {
  CHECK(initial_polynomial(parse_polynomial("z1^3+z2^3+z3^6", 3)) == parse_polynomial("z1^3+z2^3", 3));
  auto f0 = parse_polynomial("z1^3+z2^3+z3^3-z1*z2*z3", 3);
  CHECK(initial_polynomial(f0 + parse_polynomial("z1^4", 3)) == f0);
  CHECK(multiplicity(f0) == 3);
  CHECK_FALSE(is_reduced_homogeneous(parse_polynomial("z1^2+2*z1*z2+z2^2", 2)));
  CHECK(is_reduced_homogeneous(parse_polynomial("z1^2+z2^2", 2)));
  CHECK(is_reduced_homogeneous(f0));
  CHECK_FALSE(is_reduced_homogeneous(parse_polynomial("z1^2*z2+z1^2*z3", 3)));
}

TEST_CASE("monomial substitution") {
  auto f = parse_polynomial(kEx33, 3);
  IntMatrix I3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(substitute_monomial_map(f, I3) == f);
  // rows are the generators w=(2,2,1), v=(1,1,1), e1
  IntMatrix A{{2, 2, 1}, {1, 1, 1}, {1, 0, 0}};
  auto pulled = substitute_monomial_map(f, A);
  auto cof = parse_polynomial("7*z2^3+5*z2^2*z3+12*z2^2-8*z2*z3^2+6*z2+4*z3^3+1", 3);
  CHECK(pulled == parse_polynomial("z1^6*z2^3", 3) * cof);
  CHECK(substitute_monomial_map(parse_polynomial("z1*z2", 2), {{1, 1}, {0, 1}}) ==
        parse_polynomial("z1^2*z2", 2));
  CHECK_THROWS_AS(substitute_monomial_map(parse_polynomial("z1", 2), {{1, 0}, {-1, 1}}), Error);
  CHECK(substitute_monomial_map(parse_polynomial("z1", 2), {{1, 0}, {-1, 1}}, true).is_laurent());
}

TEST_CASE("monomial substitution composes as exponent-matrix product") {
  // applying B then A is the map of A*B
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    IntMatrix A(3, std::vector<long>(3)), B(3, std::vector<long>(3)), AB(3, std::vector<long>(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        A[i][j] = rng() % 3;
        B[i][j] = rng() % 3;
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) AB[i][j] += A[i][k] * B[k][j];
    auto f = parse_polynomial("z1^2*z3+3*z2-z1*z2*z3^2", 3);
    CHECK(substitute_monomial_map(f, AB) == substitute_monomial_map(substitute_monomial_map(f, B), A));
  }
}
