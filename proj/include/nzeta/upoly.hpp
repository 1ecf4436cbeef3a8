#pragma once
#include <vector>

#include "nzeta/rational.hpp"

namespace nzeta {

// Dense univariate polynomial over Q, coefficients low -> high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  static UPoly constant(const Rational& c);
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  UPoly derivative() const;
  UPoly monic() const;
  Rational eval(const Rational& t) const;
  // exact polynomial division, remainder returned through r
  UPoly divmod(const UPoly& d, UPoly& r) const;
  UPoly operator/(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const;
  // remove factors t^k
  UPoly strip_x() const;
  int x_valuation() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0)=0
UPoly squarefree_part(const UPoly& a);
bool is_squarefree(const UPoly& a);
Rational resultant(const UPoly& a, const UPoly& b);
// distinct rational roots, ascending
std::vector<Rational> rational_roots(const UPoly& a);
// Lagrange/Newton interpolation through (x_i, y_i), distinct x_i
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace nzeta
