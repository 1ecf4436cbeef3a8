#include "nzeta/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "nzeta/error.hpp"
#include "nzeta/upoly.hpp"

namespace nzeta {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // within a degree, z1-heavy monomials are larger
  return a < b;
}

long dot(const std::vector<long>& w, const Exponent& a) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i];
  return s;
}

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool WeightVector::is_primitive() const {
  long g = 0;
  for (long x : w_) g = std::gcd(g, x);
  return g == 1;
}

bool WeightVector::is_nonnegative() const {
  return std::all_of(w_.begin(), w_.end(), [](long x) { return x >= 0; });
}

bool WeightVector::is_positive() const {
  return std::all_of(w_.begin(), w_.end(), [](long x) { return x > 0; });
}

WeightVector WeightVector::primitive() const {
  long g = 0;
  for (long x : w_) g = std::gcd(g, x);
  if (g == 0) return *this;
  std::vector<long> r(w_);
  for (auto& x : r) x /= g;
  return WeightVector(r);
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
  return s + ")";
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(int n, int i) {
  Exponent e(n, 0);
  e[i] = 1;
  return monomial(n, e);
}

Polynomial Polynomial::monomial(int n, const Exponent& e, const Rational& c) {
  Polynomial p(n);
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(std::max(n_, o.n_));
  Exponent e(r.n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < r.n_; ++i) e[i] = a[i] + b[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(n_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    r.add_term(f, c * e[i]);
  }
  return r;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return nzeta::total_degree(terms_.rbegin()->first);
}

int Polynomial::order() const {
  if (terms_.empty()) throw Error(ErrorKind::Domain, "order of the zero polynomial");
  return nzeta::total_degree(terms_.begin()->first);
}

bool Polynomial::is_laurent() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

bool Polynomial::has_constant_term() const { return coeff(Exponent(n_, 0)) != 0; }

std::vector<Exponent> Polynomial::support() const {
  std::vector<Exponent> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i) {
      if (e[i] < 0) throw Error(ErrorKind::Domain, "evaluate on Laurent polynomial");
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != n_) throw Error(ErrorKind::Domain, "compose: image count");
  int m = images.empty() ? 0 : images[0].nvars();
  // cache powers per variable
  std::vector<std::vector<Polynomial>> pw(n_);
  for (int i = 0; i < n_; ++i) pw[i].push_back(Polynomial::constant(m, 1));
  Polynomial r(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(m, c);
    for (int i = 0; i < n_; ++i) {
      if (e[i] < 0) throw Error(ErrorKind::Domain, "compose on Laurent polynomial");
      while (static_cast<int>(pw[i].size()) <= e[i]) pw[i].push_back(pw[i].back() * images[i]);
      if (e[i] > 0) t = t * pw[i][e[i]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::truncate(int m) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_)
    if (nzeta::total_degree(e) <= m) r.terms_.emplace(e, c);
  return r;
}

Polynomial Polynomial::primitive_integer() const {
  if (terms_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : terms_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  return *this * s;
}

std::string Polynomial::to_string() const { return to_string('z', 1); }

std::string Polynomial::to_string(char prefix, int first_index) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (neg)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool wrote = false;
    if (a != 1 || constant) {
      os << a.get_str();
      wrote = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << prefix << (i + first_index);
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, int n, char prefix, int first) : n_(n), prefix_(prefix), first_(first) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Polynomial parse() {
    Polynomial p(n_);
    if (s_.empty()) fail("empty input");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      p.add_term(e, c * sign);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& m) const {
    throw Error(ErrorKind::Parse, m + " at position " + std::to_string(pos_));
  }

  Integer number() {
    std::size_t st = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (st == pos_) fail("expected number");
    return Integer(s_.substr(st, pos_ - st));
  }

  std::pair<Exponent, Rational> term() {
    Exponent e(n_, 0);
    Rational c = 1;
    bool any = false;
    while (true) {
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Integer num = number(), den = 1;
        if (peek() == '/') {
          ++pos_;
          den = number();
          if (den == 0) fail("zero denominator");
        }
        c *= Rational(num, den);
        c.canonicalize();
      } else if (ch == prefix_) {
        ++pos_;
        Integer idx = number();
        long k = idx.get_si() - first_;
        if (idx < first_ || k >= n_) fail("variable index out of range");
        int ex = 1;
        if (peek() == '^') {
          ++pos_;
          if (peek() == '-') fail("negative exponent");
          ex = static_cast<int>(number().get_si());
        }
        e[k] += ex;
      } else {
        fail(std::string("unexpected '") + (ch ? std::string(1, ch) : "end") + "'");
      }
      any = true;
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() == prefix_) continue;  // juxtaposition after coefficient: 3z1
      break;
    }
    if (!any) fail("empty term");
    return {e, c};
  }

  std::string s_;
  std::size_t pos_ = 0;
  int n_;
  char prefix_;
  int first_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n, char prefix, int first_index) {
  if (n < 1) throw Error(ErrorKind::Parse, "variable count must be >= 1");
  return Parser(text, n, prefix, first_index).parse();
}

Polynomial parse_polynomial(std::string_view text, int n) { return parse_polynomial(text, n, 'z', 1); }

Polynomial restrict_to(const Polynomial& f, const std::vector<int>& I) {
  std::vector<bool> in(f.nvars(), false);
  for (int i : I) in[i] = true;
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    bool ok = true;
    for (int i = 0; i < f.nvars() && ok; ++i)
      if (!in[i] && e[i] != 0) ok = false;
    if (ok) r.add_term(e, c);
  }
  return r;
}

Polynomial project_to(const Polynomial& f, const std::vector<int>& I) {
  Polynomial g = restrict_to(f, I);
  Polynomial r(static_cast<int>(I.size()));
  for (const auto& [e, c] : g.terms()) {
    Exponent s(I.size());
    for (std::size_t j = 0; j < I.size(); ++j) s[j] = e[I[j]];
    r.add_term(s, c);
  }
  return r;
}

WeightedMin weighted_min(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "weighted_min of the zero polynomial");
  WeightedMin r;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    long v = w.eval(e);
    if (first || v < r.d) {
      r.d = v;
      r.face.clear();
      first = false;
    }
    if (v == r.d) r.face.push_back(e);
  }
  return r;
}

Polynomial face_function(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return f;
  long d = weighted_min(f, w).d;
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (w.eval(e) == d) r.add_term(e, c);
  return r;
}

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w) { return face_function(f, w) == f; }

Polynomial initial_polynomial(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "initial polynomial of zero");
  int d = f.order();
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) == d) r.add_term(e, c);
  return r;
}

int multiplicity(const Polynomial& f) { return f.order(); }

bool is_reduced_homogeneous(const Polynomial& h, std::uint64_t seed) {
  if (h.is_zero()) throw Error(ErrorKind::Domain, "reducedness of zero");
  int deg = h.total_degree();
  if (h.order() != deg) throw Error(ErrorKind::Domain, "is_reduced_homogeneous needs a homogeneous input");
  if (deg <= 1) return true;
  std::mt19937_64 rng(seed);
  int n = h.nvars();
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Polynomial> line;
    for (int i = 0; i < n; ++i) {
      long a = static_cast<long>(rng() % 201) - 100, b = static_cast<long>(rng() % 201) - 100;
      Polynomial li(1);
      li.add_term({0}, a);
      li.add_term({1}, b);
      line.push_back(li);
    }
    Polynomial u = h.compose(line);
    if (u.total_degree() != deg) continue;
    std::vector<Rational> c(deg + 1);
    for (const auto& [e, v] : u.terms()) c[e[0]] = v;
    // a square factor of h stays a square factor on every full-degree line
    if (is_squarefree(UPoly(c))) return true;
  }
  return false;
}

Polynomial substitute_monomial_map(const Polynomial& f, const IntMatrix& A, bool allow_laurent) {
  int n = f.nvars();
  int m = static_cast<int>(A.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::Domain, "monomial map: row length must equal nvars");
  Polynomial r(m);
  for (const auto& [e, c] : f.terms()) {
    Exponent y(m, 0);
    for (int i = 0; i < m; ++i) {
      long s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<long>(e[j]) * A[i][j];
      if (s < 0 && !allow_laurent) throw Error(ErrorKind::Domain, "monomial map produced a negative exponent");
      y[i] = static_cast<int>(s);
    }
    r.add_term(y, c);
  }
  return r;
}

}  // namespace nzeta
