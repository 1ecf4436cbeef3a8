#include "nzeta/upoly.hpp"

#include <algorithm>
#include <cstdint>

#include "nzeta/error.hpp"

namespace nzeta {

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& q : r) q *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lc();
  return *this * inv;
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::divmod(const UPoly& d, UPoly& r) const {
  if (d.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  std::vector<Rational> rem(c_);
  int dd = d.degree();
  if (degree() < dd) {
    r = *this;
    return {};
  }
  std::vector<Rational> q(degree() - dd + 1);
  Rational inv = 1 / d.lc();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] * inv;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  r = UPoly(std::move(rem));
  return UPoly(std::move(q));
}

UPoly UPoly::operator/(const UPoly& d) const {
  UPoly r;
  return divmod(d, r);
}

UPoly UPoly::operator%(const UPoly& d) const {
  UPoly r;
  divmod(d, r);
  return r;
}

int UPoly::x_valuation() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return k;
}

UPoly UPoly::strip_x() const {
  if (is_zero()) return {};
  int k = x_valuation();
  return UPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = y.monic();
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.monic();
  return (a / gcd(a, a.derivative())).monic();
}

bool is_squarefree(const UPoly& a) {
  if (a.degree() <= 0) return true;
  return gcd(a, a.derivative()).degree() == 0;
}

Rational resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) {
    Rational r = 1;
    for (int i = 0; i < a.degree(); ++i) r *= b.lc();
    return r;
  }
  if (a.degree() == 0) {
    Rational r = 1;
    for (int i = 0; i < b.degree(); ++i) r *= a.lc();
    return r;
  }
  UPoly rem = a % b;
  if (rem.is_zero()) return 0;
  Rational s = ((a.degree() * b.degree()) % 2) ? -1 : 1;
  Rational l = 1;
  for (int i = 0; i < a.degree() - rem.degree(); ++i) l *= b.lc();
  return s * l * resultant(b, rem);
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences
  std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly p = UPoly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    p = p * UPoly(std::vector<Rational>{-xs[k], 1}) + UPoly::constant(dd[k]);
  }
  return p;
}

namespace {

// integer primitive version of a rational polynomial
std::vector<Integer> to_integer_primitive(const UPoly& a) {
  Integer l = 1;
  for (const auto& q : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> z;
  Integer g = 0;
  for (const auto& q : a.coeffs()) {
    Integer v = q.get_num() * (l / q.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<unsigned __int128>(a) * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce(const std::vector<Integer>& z, u64 p) {
  std::vector<u64> r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Integer t = z[i] % static_cast<unsigned long>(p);
    if (t < 0) t += static_cast<unsigned long>(p);
    r[i] = t.get_ui();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// gcd degree over F_p
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      u64 f = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + p - mulmod(f, b[j], p)) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer eval_int(const std::vector<Integer>& z, const Integer& x, const Integer& M) {
  Integer acc = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) {
    acc = (acc * x + *it) % M;
  }
  if (acc < 0) acc += M;
  return acc;
}

bool rational_reconstruct(const Integer& x, const Integer& M, Rational& out) {
  // find a/b = x mod M with |a|, b <= sqrt(M/2)
  Integer bound;
  Integer half = M / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = M, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  Integer a = r1, b = t1;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (b > bound) return false;
  out = Rational(a, b);
  out.canonicalize();
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& a0) {
  std::vector<Rational> roots;
  if (a0.degree() <= 0) return roots;
  UPoly a = a0;
  if (a.coeff(0) == 0) {
    roots.push_back(0);
    a = a.strip_x();
  }
  a = squarefree_part(a);
  if (a.degree() <= 0) return roots;
  if (a.degree() == 1) {
    roots.push_back(-a.coeff(0) / a.coeff(1));
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  std::vector<Integer> z = to_integer_primitive(a);
  std::vector<Integer> dz(z.size() - 1);
  for (std::size_t i = 1; i < z.size(); ++i) dz[i - 1] = z[i] * static_cast<long>(i);

  u64 p = 1009;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    auto zp = reduce(z, p);
    if (zp.size() != z.size()) continue;  // p | lc
    if (gcd_degree_mod(zp, reduce(dz, p), p) != 0) continue;
    break;
  }
  auto zp = reduce(z, p);
  std::vector<u64> modroots;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (auto it = zp.rbegin(); it != zp.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
    if (acc == 0) modroots.push_back(x);
    if (static_cast<int>(modroots.size()) == a.degree()) break;
  }
  // bound: |num| <= |a_0|, den <= |a_n|; need M > 2 |a_0| |a_n|
  Integer target = 2 * abs(z.front()) * abs(z.back()) + 1;
  target *= target;  // margin for the sqrt bound in reconstruction
  for (u64 r : modroots) {
    Integer M = static_cast<unsigned long>(p);
    Integer x = static_cast<unsigned long>(r);
    while (M <= target) {
      Integer M2 = M * M;
      Integer fx = eval_int(z, x, M2);
      Integer dfx = eval_int(dz, x, M2);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), M2.get_mpz_t()) == 0) break;
      x = (x - fx * inv) % M2;
      if (x < 0) x += M2;
      M = M2;
    }
    Rational cand;
    if (rational_reconstruct(x, M, cand) && a.eval(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace nzeta
