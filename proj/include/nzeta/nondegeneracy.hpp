#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nzeta/fan.hpp"
#include "nzeta/newton.hpp"
#include "nzeta/poly.hpp"

namespace nzeta {

enum class NDMethod { Monomial, EdgeDiscriminant, SurfaceResultant, UserAsserted, Undecided };
const char* method_name(NDMethod m);

struct FaceVerdict {
  Face face;
  bool decided = true;
  bool nondegenerate = false;
  NDMethod method = NDMethod::Monomial;
  int essential_vars = 0;            // rank of the face's difference lattice
  bool finite_critical_set = true;   // meaningful when degenerate
  std::optional<std::string> witness;
};

FaceVerdict face_nondegenerate(const Polynomial& f, const Face& face);
// the whole support of g spans the face (g a face function)
FaceVerdict face_function_nondegenerate(const Polynomial& g);

struct NDProfile {
  bool decided = true;
  bool nondegenerate = false;
  bool convenient = false;
  bool weakly_almost = false;
  std::vector<int> degenerate_facets;  // indices into complex.facets
  std::vector<FaceVerdict> verdicts;   // compact faces, in complex order
  std::vector<std::string> notes;
  NewtonComplex complex;
};

NDProfile nd_profile(const Polynomial& f);

// terms of h lying on compact faces of its Newton polyhedron
Polynomial newton_principal_part(const Polynomial& h);

struct SingularPointRecord {
  Cone chart;
  std::vector<Rational> coordinates;  // (p_2, ..., p_n)
  long mu = 0;
  Polynomial local_equation;          // f~'(p + x'), n-1 variables
};

// singular points of E(w) in the torus of the chart sigma (first generator w)
std::vector<SingularPointRecord> sing_points(const Polynomial& f, const WeightVector& w, const Cone& sigma);

// y' - p = phi(x'); phi has n-1 entries in n-1 variables
struct LocalChange {
  std::vector<Rational> point;
  std::vector<Polynomial> phi;
};

struct PointCheck {
  SingularPointRecord record;
  Polynomial local;      // equation after the change (or the certified normal form)
  Polynomial principal;  // Newton principal part of `local`
  bool convenient = false;
  bool nondegenerate = false;
  std::string method;  // "user change", "identity", "A_k normal form"
  std::string note;
};

struct PreNDReport {
  bool verdict = false;
  std::vector<PointCheck> points;
};

// Checks Newton pre-non-degeneracy at every singular point of E(w).
// Points with a supplied change use it; otherwise the identity is tried and,
// for corank <= 1 points, the analytic normal form of type A_mu certifies.
PreNDReport verify_pre_nondegenerate(const Polynomial& f, const WeightVector& w, const Cone& sigma,
                                     const std::vector<LocalChange>& changes = {});

// Hessian rank of h at 0 (h without constant and linear part)
int hessian_rank(const Polynomial& h);

// parse "x2+2*x3" style coordinate changes: n-1 variables named x2..xn
std::vector<Polynomial> parse_change(const std::vector<std::string>& entries, int n);

}  // namespace nzeta
