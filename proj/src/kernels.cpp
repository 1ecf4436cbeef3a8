#include "nzeta/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <unordered_map>

namespace nzeta::kernels {

namespace {

struct ExpHash {
  std::size_t operator()(const Exponent& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

using Index = std::unordered_map<Exponent, int, ExpHash>;

void gen_basis(int n, int deg, int pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos == n - 1) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int k = deg; k >= 0; --k) {
    cur[pos] = k;
    gen_basis(n, deg - k, pos + 1, cur, out);
  }
}

// integer-scaled partial derivatives as (exponent, coefficient) lists
std::vector<std::vector<std::pair<Exponent, Integer>>> integer_partials(const Polynomial& f) {
  Polynomial g = f.primitive_integer();
  std::vector<std::vector<std::pair<Exponent, Integer>>> out;
  for (int i = 0; i < f.nvars(); ++i) {
    std::vector<std::pair<Exponent, Integer>> d;
    Polynomial gi = g.derivative(i);
    for (const auto& [e, c] : gi.terms()) d.emplace_back(e, c.get_num());
    out.push_back(std::move(d));
  }
  return out;
}

SparseColumn make_column(const Exponent& M, const std::vector<std::pair<Exponent, Integer>>& d, int m,
                         const Index& idx) {
  SparseColumn col;
  Exponent e(M.size());
  for (const auto& [a, c] : d) {
    int deg = 0;
    for (std::size_t k = 0; k < M.size(); ++k) {
      e[k] = M[k] + a[k];
      deg += e[k];
    }
    if (deg > m) continue;
    col.emplace_back(idx.at(e), c);
  }
  std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return col;
}

void dedup(Columns& cols) {
  cols.erase(std::remove_if(cols.begin(), cols.end(), [](const SparseColumn& c) { return c.empty(); }), cols.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  // lowest leading row first keeps fill-in small
  std::stable_sort(cols.begin(), cols.end(), [](const SparseColumn& a, const SparseColumn& b) {
    return a.front().first < b.front().first;
  });
}

void remove_content(SparseColumn& c) {
  Integer g = 0;
  for (const auto& [r, v] : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [r, v] : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// c <- p0*c - c0*p, eliminating the common leading row
SparseColumn eliminate(const SparseColumn& c, const SparseColumn& p) {
  Integer a = p.front().second, b = c.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  SparseColumn out;
  out.reserve(c.size() + p.size());
  std::size_t i = 1, j = 1;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.emplace_back(c[i].first, a * c[i].second);
      ++i;
    } else if (i == c.size() || p[j].first < c[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Integer v = a * c[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  remove_content(out);
  return out;
}

using PivotTable = std::map<int, SparseColumn>;

void reduce_against(SparseColumn& c, const PivotTable& piv) {
  while (!c.empty()) {
    auto it = piv.find(c.front().first);
    if (it == piv.end()) return;
    c = eliminate(c, it->second);
  }
}

}  // namespace

std::vector<Exponent> truncated_basis(int n, int m) {
  std::vector<Exponent> out;
  Exponent cur(n);
  for (int d = 0; d <= m; ++d) {
    std::vector<Exponent> layer;
    gen_basis(n, d, 0, cur, layer);
    std::sort(layer.begin(), layer.end());  // ascending lex inside a degree
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Columns jacobian_columns_serial(const Polynomial& f, int m) {
  auto basis = truncated_basis(f.nvars(), m);
  Index idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  auto parts = integer_partials(f);
  Columns cols;
  for (const auto& d : parts)
    for (const auto& M : basis) cols.push_back(make_column(M, d, m, idx));
  dedup(cols);
  return cols;
}

Columns jacobian_columns_omp(const Polynomial& f, int m) {
  auto basis = truncated_basis(f.nvars(), m);
  Index idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  auto parts = integer_partials(f);
  const long N = static_cast<long>(basis.size());
  const long total = N * static_cast<long>(parts.size());
  Columns cols(total);
#pragma omp parallel for schedule(dynamic, 32)
  for (long t = 0; t < total; ++t) cols[t] = make_column(basis[t % N], parts[t / N], m, idx);
  dedup(cols);
  return cols;
}

long rank_serial(const Columns& cols) {
  PivotTable piv;
  for (const auto& c0 : cols) {
    SparseColumn c = c0;
    remove_content(c);
    reduce_against(c, piv);
    if (!c.empty()) piv.emplace(c.front().first, std::move(c));
  }
  return static_cast<long>(piv.size());
}

long rank_omp(const Columns& cols, int batch) {
  PivotTable piv;
  const long n = static_cast<long>(cols.size());
  if (batch < 1) batch = 1;
  for (long start = 0; start < n; start += batch) {
    long end = std::min(n, start + batch);
    std::vector<SparseColumn> work(cols.begin() + start, cols.begin() + end);
    // the pivot table is read-only inside the parallel region
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < end - start; ++k) {
      remove_content(work[k]);
      reduce_against(work[k], piv);
    }
    for (auto& c : work) {
      reduce_against(c, piv);
      if (!c.empty()) piv.emplace(c.front().first, std::move(c));
    }
  }
  return static_cast<long>(piv.size());
}

}  // namespace nzeta::kernels
