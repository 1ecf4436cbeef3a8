#include <doctest.h>

#include <random>

#include "nzeta/intlinalg.hpp"

using namespace nzeta;

TEST_CASE("determinant and rank") {
  CHECK(determinant({{2, 2, 1}, {1, 1, 1}, {1, 0, 0}}) == 1);
  CHECK(determinant({{1, 0}, {1, 2}}) == 2);
  CHECK(rank({{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank({{1, 2, 3}, {2, 4, 7}}) == 2);
}

TEST_CASE("kernel vector is primitive and orthogonal") {
  auto v = primitive_kernel_vector({{-3, 6}});
  CHECK(((v == std::vector<long>{2, 1}) || (v == std::vector<long>{-2, -1})));
  auto w = primitive_kernel_vector({{1, 1, -2}, {0, 3, -3}});
  long d1 = w[0] + w[1] - 2 * w[2], d2 = 3 * w[1] - 3 * w[2];
  CHECK(d1 == 0);
  CHECK(d2 == 0);
}

TEST_CASE("column reduction gives a unimodular transform") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    int r = 1 + rng() % 3, c = r + rng() % 2;
    IntMatrix a(r, std::vector<long>(c));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 11) - 5;
    int rk = 0;
    IntMatrix u = column_reduce(a, &rk);
    CHECK(abs(determinant(u)) == 1);
    CHECK(rk == rank(a));
    IntMatrix au = multiply(a, u);
    for (const auto& row : au)
      for (int j = rk; j < c; ++j) CHECK(row[j] == 0);
  }
}

TEST_CASE("unimodular completion") {
  for (auto w : std::vector<std::vector<long>>{{2, 2, 1}, {3, 5}, {1, 0, 0}, {6, 10, 15}, {-2, 3}}) {
    IntMatrix u = unimodular_completion(w);
    CHECK(abs(determinant(u)) == 1);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(u[i][0] == w[i]);
  }
  CHECK(maximal_minor_gcd({{1, 0, 0}, {0, 1, 0}}) == 1);
  CHECK(maximal_minor_gcd({{1, 1, 0}, {1, -1, 0}}) == 2);
}
