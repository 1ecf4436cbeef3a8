#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nzeta/newton.hpp"
#include "nzeta/poly.hpp"

namespace nzeta {

struct Cone {
  std::vector<WeightVector> generators;

  Cone() = default;
  explicit Cone(std::vector<WeightVector> g) : generators(std::move(g)) {}
  int size() const { return static_cast<int>(generators.size()); }
  int dim() const;
  IntMatrix matrix() const;  // rows are generators
  bool contains(const WeightVector& w) const;  // simplicial cones only
  std::string to_string() const;
};

// throws on a non-primitive generator
bool is_regular(const Cone& c);

struct Fan {
  std::vector<WeightVector> vertices;
  std::vector<std::vector<int>> maximal_cones;  // indices into vertices
  Cone cone(int i) const;
  int dim() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }
};

struct FanReport {
  bool regular = false;
  bool covers = false;  // complete, face-to-face subdivision of the orthant
  bool admissible = false;
  bool small = false;
  std::vector<std::string> problems;
  std::optional<WeightVector> witness;  // a weight in a gap or overlap
};

FanReport validate_fan(const Fan& fan, const Polynomial& f, std::uint64_t seed = 1);

// Gamma*(f) refined to a regular simplicial fan by triangulation and stellar
// subdivisions (n <= 3). Throws Budget when more than max_cones are needed.
Fan regular_refinement(const Polynomial& f, int max_cones = 400);

struct ChartPullback {
  Cone cone;
  std::vector<long> multiplicities;  // d(w_i; f)
  Polynomial cofactor;               // f~_sigma in the chart coordinates y
};

ChartPullback chart_pullback(const Polynomial& f, const Cone& sigma);
// g = f + z_k^{d_k+m}, k 0-based; the multiplicities stay those of f
ChartPullback chart_pullback_shifted(const Polynomial& f, const Cone& sigma, int k, int m);

// h(x) = cofactor(p + Phi(x)); Phi has one polynomial per chart coordinate, Phi(0) = 0
Polynomial local_shift(const Polynomial& cofactor, const std::vector<Rational>& p,
                       const std::vector<Polynomial>& phi);

// Hirzebruch-Jung continued fraction subdivision of a 2-dimensional cone
Fan hj_subdivide_2d(const Cone& sigma);

}  // namespace nzeta
