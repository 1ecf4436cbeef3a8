#pragma once
#include <string>
#include <vector>

#include "nzeta/poly.hpp"
#include "nzeta/upoly.hpp"

namespace nzeta {

// Common zeros of F and all its partials inside the torus (C*)^k, k in {1,2}.
struct TorusCriticalSet {
  bool infinite = false;  // a whole curve of critical points (square factor)
  std::vector<std::vector<Rational>> rational_points;
  bool has_irrational = false;
  std::string irrational_info;  // defining polynomial of an algebraic coordinate
  bool empty() const { return !infinite && rational_points.empty() && !has_irrational; }
};

// F may be Laurent; negative powers and monomial factors are cleared first.
TorusCriticalSet torus_critical_points(const Polynomial& F);

// Res_v(A, B) for bivariate A(u,v), B(u,v) (variables 0 and 1), as a polynomial in u.
UPoly resultant_v(const Polynomial& A, const Polynomial& B);

// Polynomial with negative exponents and common monomial factor removed.
Polynomial clear_monomial_factor(const Polynomial& F);

}  // namespace nzeta
