#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nzeta/rational.hpp"

namespace nzeta {

// Exponent vectors are signed so chart pullbacks may carry Laurent terms;
// ordinary polynomials keep every entry >= 0.
using Exponent = std::vector<int>;
using IntMatrix = std::vector<std::vector<long>>;

// ascending graded-lex: total degree first, then lexicographic
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

long dot(const std::vector<long>& w, const Exponent& a);
int total_degree(const Exponent& a);

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<long> entries) : w_(std::move(entries)) {}

  std::size_t size() const { return w_.size(); }
  long operator[](std::size_t i) const { return w_[i]; }
  const std::vector<long>& entries() const { return w_; }

  bool is_primitive() const;
  bool is_nonnegative() const;
  bool is_positive() const;
  WeightVector primitive() const;  // divide by gcd; zero vector stays zero
  long eval(const Exponent& a) const { return dot(w_, a); }

  bool operator==(const WeightVector& o) const { return w_ == o.w_; }
  bool operator<(const WeightVector& o) const { return w_ < o.w_; }
  std::string to_string() const;

 private:
  std::vector<long> w_;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(int nvars = 0) : n_(nvars) {}

  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, int i);  // 0-based
  static Polynomial monomial(int n, const Exponent& e, const Rational& c = 1);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(int i) const;
  int total_degree() const;  // max; -1 for zero
  int order() const;         // min total degree; throws on zero
  bool is_laurent() const;   // some negative exponent
  bool has_constant_term() const;
  std::vector<Exponent> support() const;

  Rational evaluate(const std::vector<Rational>& x) const;
  // z_i -> images[i]; all images share one variable count
  Polynomial compose(const std::vector<Polynomial>& images) const;
  Polynomial truncate(int m) const;  // drop terms of total degree > m
  // multiply by lcm of denominators and divide by gcd of numerators
  Polynomial primitive_integer() const;

  std::string to_string() const;
  std::string to_string(char prefix, int first_index) const;

 private:
  int n_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial parse_polynomial(std::string_view text, int n);
// variables named <prefix><first_index> ... <prefix><first_index+n-1>
Polynomial parse_polynomial(std::string_view text, int n, char prefix, int first_index);

// f^I: terms supported in coordinates I (0-based indices), same ambient n
Polynomial restrict_to(const Polynomial& f, const std::vector<int>& I);
// same terms, rewritten as a polynomial in |I| variables
Polynomial project_to(const Polynomial& f, const std::vector<int>& I);

struct WeightedMin {
  long d = 0;
  std::vector<Exponent> face;
};
WeightedMin weighted_min(const Polynomial& f, const WeightVector& w);
Polynomial face_function(const Polynomial& f, const WeightVector& w);
bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w);

Polynomial initial_polynomial(const Polynomial& f);
int multiplicity(const Polynomial& f);  // mult_0 = order
// squarefree test for a homogeneous h; seed makes the random line deterministic
bool is_reduced_homogeneous(const Polynomial& h, std::uint64_t seed = 0x5eed);

// z_j -> prod_i y_i^{A[i][j]}: row i of A is the i-th cone generator, so the
// exponent of y_i in the image of z^a is l_{w_i}(a)
Polynomial substitute_monomial_map(const Polynomial& f, const IntMatrix& A,
                                   bool allow_laurent = false);

}  // namespace nzeta
