#include "nzeta/newton.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "nzeta/error.hpp"
#include "nzeta/intlinalg.hpp"

namespace nzeta {

namespace {

bool dominates(const Exponent& a, const Exponent& b) {
  // a >= b componentwise and a != b
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

std::vector<Exponent> minimal_points(const std::vector<Exponent>& s) {
  std::vector<Exponent> r;
  for (const auto& a : s) {
    bool dom = false;
    for (const auto& b : s)
      if (dominates(a, b)) {
        dom = true;
        break;
      }
    if (!dom) r.push_back(a);
  }
  return r;
}

template <class F>
void for_each_combination(int n, int k, F&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int affine_dim(const std::vector<Exponent>& pts, const std::vector<int>& dirs, int n) {
  IntMatrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<long> r(n);
    for (int j = 0; j < n; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(r);
  }
  for (int d : dirs) {
    std::vector<long> r(n, 0);
    r[d] = 1;
    rows.push_back(r);
  }
  return rank(rows);
}

}  // namespace

std::vector<int> NewtonComplex::compact_faces() const {
  std::vector<int> r;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].compact) r.push_back(static_cast<int>(i));
  return r;
}

std::vector<int> NewtonComplex::compact_facets() const {
  std::vector<int> r;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i].normal.is_positive()) r.push_back(static_cast<int>(i));
  return r;
}

bool is_convenient(const Polynomial& f) {
  int n = f.nvars();
  for (int i = 0; i < n; ++i) {
    bool hit = false;
    for (const auto& [e, c] : f.terms()) {
      bool axis = e[i] > 0;
      for (int j = 0; j < n && axis; ++j)
        if (j != i && e[j] != 0) axis = false;
      if (axis) hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

NewtonComplex newton_complex(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "Newton polyhedron of the zero polynomial");
  if (f.is_laurent()) throw Error(ErrorKind::Domain, "Newton polyhedron needs non-negative exponents");
  const int n = f.nvars();
  if (n > 4) throw Error(ErrorKind::Domain, "Newton polyhedra are supported for n <= 4");
  NewtonComplex nc;
  nc.n = n;
  nc.support = f.support();
  nc.vertices = minimal_points(nc.support);  // superset of the vertices
  nc.convenient = is_convenient(f);
  const auto& V = nc.vertices;
  const int nv = static_cast<int>(V.size());

  // hyperplanes spanned by minimal points plus coordinate directions
  std::map<std::vector<long>, long> normals;
  for (int s = 0; s <= n - 1; ++s) {
    for_each_combination(n, s, [&](const std::vector<int>& D) {
      for_each_combination(nv, n - s, [&](const std::vector<int>& P) {
        IntMatrix rows;
        for (std::size_t i = 1; i < P.size(); ++i) {
          std::vector<long> r(n);
          for (int j = 0; j < n; ++j) r[j] = V[P[i]][j] - V[P[0]][j];
          rows.push_back(r);
        }
        for (int d : D) {
          std::vector<long> r(n, 0);
          r[d] = 1;
          rows.push_back(r);
        }
        if (rank(rows) != n - 1) return;
        std::vector<long> w = primitive_kernel_vector(rows);
        bool pos = std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
        bool neg = std::all_of(w.begin(), w.end(), [](long x) { return x <= 0; });
        if (!pos && !neg) return;
        if (neg)
          for (auto& x : w) x = -x;
        long d0 = dot(w, V[P[0]]);
        for (const auto& v : V)
          if (dot(w, v) < d0) return;
        normals.emplace(w, d0);
      });
    });
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> face_index;
  auto make_face = [&](std::vector<int> pts, std::vector<int> dirs) -> int {
    auto key = std::make_pair(pts, dirs);
    auto it = face_index.find(key);
    if (it != face_index.end()) return it->second;
    Face F;
    for (int i : pts) F.points.push_back(nc.support[i]);
    F.directions = dirs;
    F.compact = dirs.empty();
    F.dim = affine_dim(F.points, dirs, n);
    nc.faces.push_back(F);
    int id = static_cast<int>(nc.faces.size()) - 1;
    face_index.emplace(key, id);
    return id;
  };

  std::vector<std::pair<std::vector<int>, std::vector<int>>> facet_sets;
  for (const auto& [w, d] : normals) {
    std::vector<int> pts, dirs;
    for (std::size_t i = 0; i < nc.support.size(); ++i)
      if (dot(w, nc.support[i]) == d) pts.push_back(static_cast<int>(i));
    for (int j = 0; j < n; ++j)
      if (w[j] == 0) dirs.push_back(j);
    Facet fc;
    fc.normal = WeightVector(w);
    fc.d = d;
    fc.face = make_face(pts, dirs);
    nc.facets.push_back(fc);
    facet_sets.emplace_back(pts, dirs);
  }

  // close under intersection with facets
  for (std::size_t q = 0; q < nc.faces.size(); ++q) {
    std::vector<int> qp, qd;
    for (const auto& [key, id] : face_index)
      if (id == static_cast<int>(q)) {
        qp = key.first;
        qd = key.second;
      }
    for (const auto& [fp, fd] : facet_sets) {
      std::vector<int> ip, id;
      std::set_intersection(qp.begin(), qp.end(), fp.begin(), fp.end(), std::back_inserter(ip));
      std::set_intersection(qd.begin(), qd.end(), fd.begin(), fd.end(), std::back_inserter(id));
      if (ip.empty()) continue;
      make_face(ip, id);
    }
  }

  // facets containing each face
  for (std::size_t i = 0; i < nc.faces.size(); ++i) {
    Face& F = nc.faces[i];
    for (std::size_t k = 0; k < nc.facets.size(); ++k) {
      const auto& w = nc.facets[k].normal;
      bool in = std::all_of(F.points.begin(), F.points.end(),
                            [&](const Exponent& p) { return w.eval(p) == nc.facets[k].d; });
      for (int dj : F.directions) in = in && w[dj] == 0;
      if (in) F.facets.push_back(static_cast<int>(k));
    }
  }

  // actual vertices: 0-dimensional faces
  nc.vertices.clear();
  for (const auto& F : nc.faces)
    if (F.dim == 0) nc.vertices.push_back(F.points[0]);
  std::sort(nc.vertices.begin(), nc.vertices.end(), GrlexLess());
  return nc;
}

std::vector<int> DualDiagram::maximal_cones() const {
  std::vector<int> r;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].dim == complex.n) r.push_back(static_cast<int>(i));
  return r;
}

DualDiagram dual_newton_diagram(const Polynomial& f) {
  DualDiagram dd;
  dd.complex = newton_complex(f);
  const auto& nc = dd.complex;
  for (std::size_t i = 0; i < nc.faces.size(); ++i) {
    DualCone c;
    c.face = static_cast<int>(i);
    for (int k : nc.faces[i].facets) c.generators.push_back(nc.facets[k].normal);
    std::sort(c.generators.begin(), c.generators.end());
    IntMatrix g;
    for (const auto& w : c.generators) g.push_back(w.entries());
    c.dim = rank(g);
    dd.cones.push_back(c);
  }
  for (const auto& fc : nc.facets)
    if (fc.normal.is_positive()) dd.positive_vertices.push_back(fc.normal);
  return dd;
}

namespace {

using Simplex = std::vector<int>;

Exponent drop_coord(const Exponent& p, int c) {
  Exponent r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (static_cast<int>(i) != c) r.push_back(p[i]);
  return r;
}

// pulling triangulation of a full-dimensional lattice point set in Z^r
void triangulate(const std::vector<Exponent>& pts, std::uint64_t seed, std::vector<Simplex>& out) {
  const int r = static_cast<int>(pts[0].size());
  const int np = static_cast<int>(pts.size());
  if (r == 0) {
    out.push_back({0});
    return;
  }
  if (r == 1) {
    int lo = 0, hi = 0;
    for (int i = 0; i < np; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.push_back({lo, hi});
    return;
  }
  // apex: minimiser of a functional; lex order for seed 0, random generic otherwise
  int apex = 0;
  if (seed == 0) {
    for (int i = 1; i < np; ++i)
      if (pts[i] < pts[apex]) apex = i;
  } else {
    std::mt19937_64 rng(seed);
    std::vector<long> c(r);
    for (auto& x : c) x = static_cast<long>(rng() % 20011) - 10005;
    for (int i = 1; i < np; ++i) {
      long a = dot(c, pts[i]), b = dot(c, pts[apex]);
      if (a < b || (a == b && pts[i] < pts[apex])) apex = i;
    }
  }
  std::set<std::vector<int>> seen;
  for_each_combination(np, r, [&](const std::vector<int>& P) {
    IntMatrix rows;
    for (int i = 1; i < r; ++i) {
      std::vector<long> row(r);
      for (int j = 0; j < r; ++j) row[j] = pts[P[i]][j] - pts[P[0]][j];
      rows.push_back(row);
    }
    if (rank(rows) != r - 1) return;
    std::vector<long> w = primitive_kernel_vector(rows);
    long c0 = dot(w, pts[P[0]]);
    bool lo = false, hi = false;
    std::vector<int> on;
    for (int i = 0; i < np; ++i) {
      long v = dot(w, pts[i]);
      if (v < c0) lo = true;
      if (v > c0) hi = true;
      if (v == c0) on.push_back(i);
    }
    if (lo && hi) return;
    if (!seen.insert(on).second) return;
    if (std::find(on.begin(), on.end(), apex) != on.end()) return;
    int drop = 0;
    while (w[drop] == 0) ++drop;
    std::vector<Exponent> sub;
    for (int i : on) sub.push_back(drop_coord(pts[i], drop));
    std::vector<Simplex> inner;
    triangulate(sub, seed, inner);
    for (auto& s : inner) {
      Simplex t;
      for (int k : s) t.push_back(on[k]);
      t.push_back(apex);
      out.push_back(t);
    }
  });
}

}  // namespace

Integer hull_normalized_volume(const std::vector<Exponent>& points, std::uint64_t apex_seed) {
  if (points.empty()) return 0;
  const int r = static_cast<int>(points[0].size());
  if (r == 0) return 1;
  if (affine_dim(points, {}, r) < r) return 0;
  std::vector<Exponent> pts(points);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Simplex> simplices;
  triangulate(pts, apex_seed, simplices);
  Integer total = 0;
  for (const auto& s : simplices) {
    IntMatrix m;
    for (int i = 1; i <= r; ++i) {
      std::vector<long> row(r);
      for (int j = 0; j < r; ++j) row[j] = pts[s[i]][j] - pts[s[0]][j];
      m.push_back(row);
    }
    total += abs(determinant(m));
  }
  return total;
}

Integer normalized_volume(const std::vector<Exponent>& face_points) {
  if (face_points.empty()) throw Error(ErrorKind::Domain, "normalized_volume: empty face");
  std::vector<Exponent> pts(face_points);
  pts.push_back(Exponent(face_points[0].size(), 0));
  return hull_normalized_volume(pts);
}

std::vector<CompactFacetData> compact_facet_data(const Polynomial& g) {
  std::vector<CompactFacetData> out;
  if (g.is_zero()) return out;
  NewtonComplex nc = newton_complex(g);
  for (int k : nc.compact_facets()) {
    const auto& fc = nc.facets[k];
    CompactFacetData d;
    d.w = fc.normal;
    d.d = fc.d;
    d.points = nc.faces[fc.face].points;
    d.volume = d.d > 0 ? normalized_volume(d.points) : Integer(0);
    out.push_back(d);
  }
  return out;
}

Rational chi(const WeightVector& w, const Polynomial& f, const std::vector<int>& I) {
  Polynomial g = project_to(f, I);
  if (g.is_zero()) throw Error(ErrorKind::Domain, "chi: f^I is zero");
  std::vector<long> wi;
  for (int i : I) wi.push_back(w[i]);
  for (int j = 0; j < static_cast<int>(w.size()); ++j)
    if (std::find(I.begin(), I.end(), j) == I.end() && w[j] != 0)
      throw Error(ErrorKind::Domain, "chi: w must vanish off I");
  WeightVector wI(wi);
  if (!wI.is_positive()) throw Error(ErrorKind::Domain, "chi: w must be positive on I");
  WeightedMin m = weighted_min(g, wI);
  if (m.d == 0) throw Error(ErrorKind::Domain, "chi: d(w;f^I) = 0");
  int k = static_cast<int>(I.size());
  Integer vol = affine_dim(m.face, {}, k) == k - 1 ? normalized_volume(m.face) : Integer(0);
  Rational c(vol, m.d);
  c.canonicalize();
  return (k % 2 == 1) ? c : Rational(-c);
}

std::vector<std::vector<int>> coordinate_subsets(int n) {
  std::vector<std::vector<int>> r;
  for (int k = 1; k <= n; ++k) for_each_combination(n, k, [&](const std::vector<int>& s) { r.push_back(s); });
  return r;
}

Integer newton_number(const Polynomial& f) {
  if (!is_convenient(f)) throw Error(ErrorKind::Domain, "newton_number needs a convenient polynomial");
  int n = f.nvars();
  // Kouchnirenko's alternating sum; the empty set contributes (-1)^n
  Integer nu = (n % 2 == 0) ? 1 : -1;
  for (const auto& I : coordinate_subsets(n)) {
    Integer v = 0;
    for (const auto& fd : compact_facet_data(project_to(f, I))) v += fd.volume;
    if ((n - static_cast<int>(I.size())) % 2 == 0)
      nu += v;
    else
      nu -= v;
  }
  return nu;
}

}  // namespace nzeta
