#include "nzeta/intlinalg.hpp"

#include <numeric>

#include "nzeta/error.hpp"

namespace nzeta {

namespace {

using ZMat = std::vector<std::vector<Integer>>;

ZMat to_z(const IntMatrix& a) {
  ZMat z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long x : a[i]) z[i].push_back(Integer(x));
  return z;
}

// Bareiss elimination; returns rank and (for square) the determinant
int bareiss(ZMat m, Integer* det) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  Integer prev = 1;
  int sign = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (det) {
    if (rows != cols) throw Error(ErrorKind::Domain, "determinant of a non-square matrix");
    *det = (r == rows) ? Integer(sign * prev) : Integer(0);
    if (r == rows && rows == 0) *det = 1;
  }
  return r;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
  if (a.empty()) return 1;
  Integer d;
  bareiss(to_z(a), &d);
  return d;
}

int rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return bareiss(to_z(a), nullptr);
}

std::vector<long> primitive_kernel_vector(const IntMatrix& rows) {
  int k = rows.empty() ? 1 : static_cast<int>(rows[0].size());
  std::vector<long> v(k);
  // generalized cross product: signed maximal minors
  for (int j = 0; j < k; ++j) {
    IntMatrix sub;
    for (const auto& r : rows) {
      std::vector<long> s;
      for (int c = 0; c < k; ++c)
        if (c != j) s.push_back(r[c]);
      sub.push_back(s);
    }
    Integer d = determinant(sub);
    if ((j % 2) == 1) d = -d;
    v[j] = d.get_si();
  }
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Integer maximal_minor_gcd(const IntMatrix& a) {
  int r = static_cast<int>(a.size());
  if (r == 0) return 1;
  int c = static_cast<int>(a[0].size());
  if (r > c) return 0;
  Integer g = 0;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    IntMatrix sub(r, std::vector<long>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub[i][j] = a[i][idx[j]];
    Integer d = determinant(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    int i = r - 1;
    while (i >= 0 && idx[i] == c - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

IntMatrix identity_matrix(int n) {
  IntMatrix u(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  return u;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

IntMatrix column_reduce(const IntMatrix& a0, int* rank_out) {
  IntMatrix a = a0;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  IntMatrix u = identity_matrix(cols);
  auto colop = [&](int i, int j, long p, long q, long r, long s) {
    // (col_i, col_j) <- (p col_i + q col_j, r col_i + s col_j), ps - qr = +-1
    for (auto* m : {&a, &u})
      for (auto& row : *m) {
        long x = row[i], y = row[j];
        row[i] = p * x + q * y;
        row[j] = r * x + s * y;
      }
  };
  int pc = 0;
  for (int r = 0; r < rows && pc < cols; ++r) {
    for (int j = pc + 1; j < cols; ++j) {
      long x = a[r][pc], y = a[r][j];
      if (y == 0) continue;
      // extended gcd: s*x + t*y = g
      long old_r = x, rr = y, old_s = 1, s = 0, old_t = 0, t = 1;
      while (rr != 0) {
        long q = old_r / rr;
        long tmp = old_r - q * rr; old_r = rr; rr = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
      }
      long g = old_r;
      // new col pc = old_s*c_pc + old_t*c_j, new col j = (-y/g) c_pc + (x/g) c_j
      colop(pc, j, old_s, old_t, -y / g, x / g);
    }
    if (a[r][pc] != 0) ++pc;
  }
  if (rank_out) *rank_out = pc;
  return u;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  int n = static_cast<int>(u.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = u[i][j];
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::Domain, "singular matrix");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (int i = 0; i < n; ++i)
      if (i != c && m[i][c] != 0) {
        Rational f = m[i][c];
        for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
      }
  }
  IntMatrix r(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m[i][n + j].get_den() != 1) throw Error(ErrorKind::Domain, "matrix is not unimodular");
      r[i][j] = m[i][n + j].get_num().get_si();
    }
  return r;
}

IntMatrix unimodular_completion(const std::vector<long>& w) {
  IntMatrix row{w};
  int rk = 0;
  IntMatrix u = column_reduce(row, &rk);
  // w^T U = (g,0,..,0) with g = +-1 for primitive w
  IntMatrix wu = multiply(row, u);
  if (std::abs(wu[0][0]) != 1) throw Error(ErrorKind::Domain, "vector is not primitive");
  IntMatrix c = transpose(inverse_unimodular(u));
  if (wu[0][0] == -1)
    for (auto& r : c) r[0] = -r[0];
  return c;
}

}  // namespace nzeta
