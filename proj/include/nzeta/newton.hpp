#pragma once
#include <cstdint>
#include <vector>

#include "nzeta/poly.hpp"

namespace nzeta {

struct Face {
  std::vector<Exponent> points;  // support points lying on the face
  std::vector<int> directions;   // recession directions e_j, 0-based
  int dim = 0;
  bool compact = false;
  std::vector<int> facets;  // indices into NewtonComplex::facets
};

struct Facet {
  WeightVector normal;  // primitive, non-negative
  long d = 0;
  int face = -1;  // index into NewtonComplex::faces
};

struct NewtonComplex {
  int n = 0;
  std::vector<Exponent> support;
  std::vector<Exponent> vertices;
  std::vector<Facet> facets;
  std::vector<Face> faces;  // every non-empty proper face, facets included
  bool convenient = false;

  std::vector<int> compact_faces() const;
  std::vector<int> compact_facets() const;  // facet indices with positive normal
};

NewtonComplex newton_complex(const Polynomial& f);
bool is_convenient(const Polynomial& f);

struct DualCone {
  std::vector<WeightVector> generators;
  int face = -1;  // the face of the NewtonComplex it is dual to
  int dim = 0;
};

struct DualDiagram {
  NewtonComplex complex;
  std::vector<DualCone> cones;  // one per face; maximal cones belong to vertices
  std::vector<WeightVector> positive_vertices;
  std::vector<int> maximal_cones() const;
};

DualDiagram dual_newton_diagram(const Polynomial& f);

// |I|! Vol(conv(face, 0)); face points live in Z^k after projection to I
Integer normalized_volume(const std::vector<Exponent>& face_points);
// k! Vol(conv(points)) for points in Z^k; apex_seed picks the pulling vertex
Integer hull_normalized_volume(const std::vector<Exponent>& points, std::uint64_t apex_seed = 0);

struct CompactFacetData {
  WeightVector w;  // primitive positive weight on I
  long d = 0;
  std::vector<Exponent> points;
  Integer volume;  // |I|! Vol(Cone(face, 0))
};
// compact facets of Gamma(g) for g in k variables (g = f^I projected)
std::vector<CompactFacetData> compact_facet_data(const Polynomial& g);

// chi(w) for w positive on I (0-based), zero off I
Rational chi(const WeightVector& w, const Polynomial& f, const std::vector<int>& I);

Integer newton_number(const Polynomial& f);

// nonempty subsets of {0..n-1}, ordered by size then lexicographically
std::vector<std::vector<int>> coordinate_subsets(int n);

}  // namespace nzeta
