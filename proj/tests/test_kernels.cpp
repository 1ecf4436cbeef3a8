#include <doctest.h>

#include <random>

#include "nzeta/kernels.hpp"
#include "nzeta/milnor.hpp"

using namespace nzeta;

// dense rational Gaussian elimination over the unpruned n*N columns
static long dense_rank(const JacobianSpan& J, const std::vector<Exponent>& basis) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : J.columns) {
    std::vector<Rational> v(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) v[k] = c.coeff(basis[k]);
    rows.push_back(v);
  }
  long r = 0;
  for (std::size_t col = 0; col < basis.size() && r < static_cast<long>(rows.size()); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == static_cast<std::size_t>(r) || rows[q][col] == 0) continue;
      Rational t = rows[q][col] / rows[r][col];
      for (std::size_t k = col; k < basis.size(); ++k) rows[q][k] -= t * rows[r][k];
    }
    ++r;
  }
  return r;
}

static Polynomial random_poly(std::mt19937& rng, int n, int deg, int terms) {
  std::uniform_int_distribution<int> E(0, deg), C(-5, 5);
  Polynomial f(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n);
    int s = 0;
    for (int k = 0; k < n; ++k) s += (e[k] = E(rng));
    if (s < 2) continue;
    f.add_term(e, Rational(C(rng)));
  }
  return f;
}

TEST_CASE("truncated basis size and order") {
  auto b = kernels::truncated_basis(3, 4);
  CHECK(b.size() == 35);
  CHECK(b[0] == Exponent{0, 0, 0});
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(GrlexLess()(b[i - 1], b[i]));
}

TEST_CASE("serial and parallel ranks agree with a dense oracle") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + t % 2;
    auto f = random_poly(rng, n, 5, 6);
    if (f.is_zero()) continue;
    int m = 3 + t % 3;
    auto basis = kernels::truncated_basis(n, m);
    long oracle = dense_rank(jacobian_span(f, m), basis);
    long rs = kernels::rank_serial(kernels::jacobian_columns_serial(f, m));
    long rp = kernels::rank_omp(kernels::jacobian_columns_omp(f, m), 7);
    CHECK(rs == oracle);
    CHECK(rp == oracle);
  }
}

TEST_CASE("column builders agree") {
  auto f = parse_polynomial("z1^3+z2^3+z3^3+z1*z2*z3", 3);
  auto a = kernels::jacobian_columns_serial(f, 6);
  auto b = kernels::jacobian_columns_omp(f, 6);
  CHECK(a == b);
}

TEST_CASE("Jacobian span has n*N recomputable columns") {
  auto f = parse_polynomial("z1^2+z2^3", 2);
  auto J = jacobian_span(f, 3);
  CHECK(J.columns.size() == 2 * 10);
  auto basis = kernels::truncated_basis(2, 3);
  for (int i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(J.columns[i * basis.size() + j] ==
            (Polynomial::monomial(2, basis[j]) * f.derivative(i)).truncate(3));
}
