#include "nzeta/fan.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nzeta/error.hpp"
#include "nzeta/intlinalg.hpp"

namespace nzeta {

namespace {

// coefficients lambda with sum lambda_i g_i = w, if w lies in the span
std::optional<std::vector<Rational>> cone_coordinates(const std::vector<WeightVector>& g, const WeightVector& w) {
  int k = static_cast<int>(g.size()), n = static_cast<int>(w.size());
  // augmented n x (k+1) system
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = g[j][i];
    m[i][k] = w[i];
  }
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < k && r < n; ++c) {
    int p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < n; ++i)
      if (i != r && m[i][c] != 0) {
        Rational f = m[i][c];
        for (int j = 0; j <= k; ++j) m[i][j] -= f * m[r][j];
      }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  if (r < k) return std::nullopt;  // not simplicial
  std::vector<Rational> lam(k);
  for (int i = 0; i < r; ++i) lam[pivcol[i]] = m[i][k];
  return lam;
}

std::set<Exponent> delta_set(const Polynomial& f, const WeightVector& w) {
  auto m = weighted_min(f, w);
  return std::set<Exponent>(m.face.begin(), m.face.end());
}

WeightVector sum_of(const std::vector<WeightVector>& g) {
  std::vector<long> s(g[0].size(), 0);
  for (const auto& w : g)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += w[i];
  return WeightVector(s);
}

struct P2 {
  Rational x, y;
};

P2 project_simplex(const WeightVector& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i];
  return {Rational(w[0]) / s, Rational(w[1]) / s};
}

Rational cross(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// interiors of two non-degenerate triangles intersect?
bool triangles_overlap(const std::array<P2, 3>& a, const std::array<P2, 3>& b) {
  auto separated_by = [](const std::array<P2, 3>& t, const std::array<P2, 3>& u) {
    Rational orient = cross(t[0], t[1], t[2]);
    for (int e = 0; e < 3; ++e) {
      const P2& p = t[e];
      const P2& q = t[(e + 1) % 3];
      bool all_out = true;
      for (const auto& v : u) {
        Rational s = cross(p, q, v);
        if ((orient > 0 && s > 0) || (orient < 0 && s < 0)) {
          all_out = false;
          break;
        }
      }
      if (all_out) return true;
    }
    return false;
  };
  return !separated_by(a, b) && !separated_by(b, a);
}

}  // namespace

int Cone::dim() const { return rank(matrix()); }

IntMatrix Cone::matrix() const {
  IntMatrix m;
  for (const auto& g : generators) m.push_back(g.entries());
  return m;
}

bool Cone::contains(const WeightVector& w) const {
  auto lam = cone_coordinates(generators, w);
  if (!lam) return false;
  return std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x >= 0; });
}

std::string Cone::to_string() const {
  std::string s = "C(";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? "," : "") + generators[i].to_string();
  return s + ")";
}

bool is_regular(const Cone& c) {
  for (const auto& g : c.generators)
    if (!g.is_primitive()) throw Error(ErrorKind::Domain, "non-primitive cone generator " + g.to_string());
  IntMatrix m = c.matrix();
  if (m.empty()) return true;
  if (m.size() == m[0].size()) return abs(determinant(m)) == 1;
  return maximal_minor_gcd(m) == 1;
}

Cone Fan::cone(int i) const {
  Cone c;
  for (int k : maximal_cones[i]) c.generators.push_back(vertices[k]);
  return c;
}

FanReport validate_fan(const Fan& fan, const Polynomial& f, std::uint64_t seed) {
  FanReport rep;
  const int n = f.nvars();
  if (fan.dim() != n) throw Error(ErrorKind::Domain, "fan dimension does not match the polynomial");
  for (const auto& v : fan.vertices)
    if (!v.is_nonnegative()) rep.problems.push_back("vertex " + v.to_string() + " is outside the orthant");

  rep.regular = true;
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    Cone c = fan.cone(static_cast<int>(i));
    cones.push_back(c);
    if (c.size() != n || c.dim() != n) {
      rep.regular = false;
      rep.problems.push_back("cone " + c.to_string() + " is not full-dimensional simplicial");
      continue;
    }
    if (!is_regular(c)) {
      rep.regular = false;
      rep.problems.push_back("cone " + c.to_string() + " is not regular");
    }
  }

  // exact covering checks
  bool exact_ok = true;
  if (n == 3 || n == 2) {
    Rational total = 0;
    if (n == 3) {
      std::vector<std::array<P2, 3>> tris;
      for (const auto& c : cones) {
        if (c.size() != 3) continue;
        std::array<P2, 3> t{project_simplex(c.generators[0]), project_simplex(c.generators[1]),
                            project_simplex(c.generators[2])};
        Rational a = cross(t[0], t[1], t[2]);
        total += a < 0 ? Rational(-a) : a;
        tris.push_back(t);
      }
      total /= 2;
      for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
          if (triangles_overlap(tris[i], tris[j])) {
            exact_ok = false;
            rep.problems.push_back("cones " + cones[i].to_string() + " and " + cones[j].to_string() + " overlap");
          }
      if (total != Rational(1, 2)) {
        exact_ok = false;
        rep.problems.push_back("projected area " + total.get_str() + " differs from 1/2 (coverage gap or overlap)");
      }
    } else {
      std::vector<std::pair<Rational, Rational>> iv;
      for (const auto& c : cones) {
        if (c.size() != 2) continue;
        Rational a = project_simplex(c.generators[0]).y, b = project_simplex(c.generators[1]).y;
        if (b < a) std::swap(a, b);
        iv.emplace_back(a, b);
        total += b - a;
      }
      std::sort(iv.begin(), iv.end());
      for (std::size_t i = 1; i < iv.size(); ++i)
        if (iv[i].first < iv[i - 1].second) {
          exact_ok = false;
          rep.problems.push_back("2-d cones overlap");
        }
      if (total != 1) {
        exact_ok = false;
        rep.problems.push_back("2-d cones leave a gap");
      }
    }
    // face-to-face: no fan vertex inside a cone it does not generate
    for (std::size_t v = 0; v < fan.vertices.size(); ++v)
      for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
        const auto& mc = fan.maximal_cones[i];
        if (std::find(mc.begin(), mc.end(), static_cast<int>(v)) != mc.end()) continue;
        if (cones[i].size() == n && cones[i].contains(fan.vertices[v])) {
          exact_ok = false;
          rep.problems.push_back("vertex " + fan.vertices[v].to_string() + " lies inside " + cones[i].to_string());
        }
      }
  }

  // dense sampling; any miss is a hard failure with a witness
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 1000 && !rep.witness; ++s) {
    std::vector<long> w(n);
    for (auto& x : w) x = static_cast<long>(rng() % 61);
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) continue;
    WeightVector wv(w);
    int inside = 0, interior = 0;
    for (const auto& c : cones) {
      if (c.size() != n) continue;
      auto lam = cone_coordinates(c.generators, wv);
      if (!lam) continue;
      if (std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x >= 0; })) ++inside;
      if (std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x > 0; })) ++interior;
    }
    if (inside == 0) {
      rep.witness = wv;
      rep.problems.push_back("coverage gap at weight " + wv.to_string());
    } else if (interior > 1) {
      rep.witness = wv;
      rep.problems.push_back("overlapping cones at weight " + wv.to_string());
    }
  }
  rep.covers = exact_ok && !rep.witness;

  // admissible: each cone sits in a closed cell of the dual Newton diagram
  rep.admissible = true;
  for (const auto& c : cones) {
    auto centre = delta_set(f, sum_of(c.generators));
    for (const auto& g : c.generators) {
      auto dg = delta_set(f, g);
      if (!std::includes(dg.begin(), dg.end(), centre.begin(), centre.end())) {
        rep.admissible = false;
        rep.problems.push_back("cone " + c.to_string() + " crosses a cell of the dual Newton diagram");
        break;
      }
    }
  }

  // small, after removing the monomial factor
  rep.small = true;
  Polynomial fp(n);
  {
    Exponent mn(n, 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      for (int i = 0; i < n; ++i) mn[i] = first ? e[i] : std::min(mn[i], e[i]);
      first = false;
    }
    for (const auto& [e, c] : f.terms()) {
      Exponent s(e);
      for (int i = 0; i < n; ++i) s[i] -= mn[i];
      fp.add_term(s, c);
    }
  }
  for (const auto& v : fan.vertices) {
    int nz = 0;
    for (std::size_t i = 0; i < v.size(); ++i) nz += v[i] != 0;
    bool unit = nz == 1 && std::accumulate(v.entries().begin(), v.entries().end(), 0L) == 1;
    if (unit) continue;
    if (weighted_min(fp, v).d <= 0) {
      rep.small = false;
      rep.problems.push_back("vertex " + v.to_string() + " has d(w;f') = 0 (fan not small)");
    }
  }
  return rep;
}

namespace {

// 3-d helper: triangulate a polygonal cone by fanning from its first generator in cyclic order
std::vector<std::vector<WeightVector>> triangulate_cone3(const std::vector<WeightVector>& gens) {
  if (gens.size() == 3) return {gens};
  // cyclic order around the centroid in the simplex projection
  std::vector<P2> pts;
  for (const auto& g : gens) pts.push_back(project_simplex(g));
  // sort by angle using exact orientation around the first point after picking an extreme point
  std::vector<int> idx(gens.size());
  std::iota(idx.begin(), idx.end(), 0);
  int lo = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].x < pts[lo].x || (pts[i].x == pts[lo].x && pts[i].y < pts[lo].y)) lo = static_cast<int>(i);
  idx.erase(idx.begin() + lo);
  P2 o = pts[lo];
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return cross(o, pts[a], pts[b]) > 0; });
  std::vector<std::vector<WeightVector>> out;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) out.push_back({gens[lo], gens[idx[i]], gens[idx[i + 1]]});
  return out;
}

// a primitive lattice point of the half-open parallelepiped of a non-regular simplicial cone
WeightVector interior_lattice_point(const std::vector<WeightVector>& g) {
  IntMatrix m;
  for (const auto& w : g) m.push_back(w.entries());
  long D = std::abs(determinant(m).get_si());
  int n = static_cast<int>(g.size());
  WeightVector best;
  long best_sum = -1;
  // points are (1/D) * sum c_i g_i with 0 <= c_i < D; enumerate via the lattice
  std::vector<long> c(n, 0);
  while (true) {
    int i = 0;
    while (i < n && ++c[i] == D) c[i++] = 0;
    if (i == n) break;
    std::vector<long> p(n, 0);
    bool integral = true;
    for (int j = 0; j < n && integral; ++j) {
      long s = 0;
      for (int k = 0; k < n; ++k) s += c[k] * g[k][j];
      if (s % D != 0) integral = false;
      p[j] = s / D;
    }
    if (!integral) continue;
    long sum = std::accumulate(c.begin(), c.end(), 0L);
    if (best_sum < 0 || sum < best_sum) {
      best_sum = sum;
      best = WeightVector(p).primitive();
    }
  }
  if (best_sum < 0) throw Error(ErrorKind::Domain, "no interior lattice point found");
  return best;
}

}  // namespace

Fan regular_refinement(const Polynomial& f, int max_cones) {
  const int n = f.nvars();
  DualDiagram dd = dual_newton_diagram(f);
  std::vector<std::vector<WeightVector>> cones;
  for (int i : dd.maximal_cones()) {
    const auto& g = dd.cones[i].generators;
    if (n == 3) {
      for (auto& t : triangulate_cone3(g)) cones.push_back(t);
    } else if (n <= 2) {
      cones.push_back(g);
    } else {
      throw Error(ErrorKind::Domain, "automatic fan refinement supports n <= 3");
    }
  }
  if (n == 2) {
    std::vector<std::vector<WeightVector>> reg;
    for (const auto& c : cones) {
      Fan h = hj_subdivide_2d(Cone(c));
      for (std::size_t i = 0; i < h.maximal_cones.size(); ++i) reg.push_back(h.cone(static_cast<int>(i)).generators);
    }
    cones = reg;
  }
  // stellar subdivision until every cone is unimodular
  while (true) {
    if (static_cast<int>(cones.size()) > max_cones) throw Error(ErrorKind::Budget, "fan refinement exceeded the cone budget");
    int bad = -1;
    for (std::size_t i = 0; i < cones.size(); ++i)
      if (!is_regular(Cone(cones[i]))) {
        bad = static_cast<int>(i);
        break;
      }
    if (bad < 0) break;
    WeightVector p = interior_lattice_point(cones[bad]);
    std::vector<std::vector<WeightVector>> next;
    for (const auto& c : cones) {
      auto lam = cone_coordinates(c, p);
      bool in = lam && std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x >= 0; });
      if (!in) {
        next.push_back(c);
        continue;
      }
      for (std::size_t j = 0; j < c.size(); ++j) {
        if ((*lam)[j] == 0) continue;
        auto d = c;
        d[j] = p;
        next.push_back(d);
      }
    }
    cones = next;
  }
  Fan fan;
  std::map<WeightVector, int> id;
  auto vid = [&](const WeightVector& w) {
    auto it = id.find(w);
    if (it != id.end()) return it->second;
    fan.vertices.push_back(w);
    return id[w] = static_cast<int>(fan.vertices.size()) - 1;
  };
  // unit vectors and positive vertices first, in a stable order
  std::set<WeightVector> all;
  for (const auto& c : cones)
    for (const auto& w : c) all.insert(w);
  std::vector<WeightVector> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const WeightVector& a, const WeightVector& b) {
    return a.is_positive() && !b.is_positive();
  });
  for (const auto& w : ordered) vid(w);
  for (const auto& c : cones) {
    std::vector<int> ids;
    for (const auto& w : c) ids.push_back(vid(w));
    fan.maximal_cones.push_back(ids);
  }
  return fan;
}

ChartPullback chart_pullback(const Polynomial& f, const Cone& sigma) {
  ChartPullback cp;
  cp.cone = sigma;
  int n = f.nvars();
  if (sigma.size() != n) throw Error(ErrorKind::Domain, "chart pullback needs a full-dimensional cone");
  for (const auto& g : sigma.generators) cp.multiplicities.push_back(f.is_zero() ? 0 : weighted_min(f, g).d);
  Polynomial P = substitute_monomial_map(f, sigma.matrix(), true);
  Polynomial cof(n);
  for (const auto& [e, c] : P.terms()) {
    Exponent s(e);
    for (int i = 0; i < n; ++i) s[i] -= static_cast<int>(cp.multiplicities[i]);
    cof.add_term(s, c);
  }
  cp.cofactor = cof;
  return cp;
}

ChartPullback chart_pullback_shifted(const Polynomial& f, const Cone& sigma, int k, int m) {
  if (m < 1) throw Error(ErrorKind::Domain, "shift amount m must be >= 1");
  int n = f.nvars();
  if (k < 0 || k >= n) throw Error(ErrorKind::Domain, "shift index out of range");
  ChartPullback cp = chart_pullback(f, sigma);
  const WeightVector& w = sigma.generators[0];
  long d = weighted_min(f, w).d;
  if (w[k] == 0 || d % w[k] != 0) throw Error(ErrorKind::Domain, "w_k must divide the weighted degree");
  long dk = d / w[k];
  Exponent extra(n);
  for (int i = 0; i < n; ++i) {
    long e = (dk + m) * sigma.generators[i][k] - cp.multiplicities[i];
    if (e < 0) throw Error(ErrorKind::Domain, "negative exponent in the shifted cofactor: incompatible cone");
    extra[i] = static_cast<int>(e);
  }
  cp.cofactor.add_term(extra, 1);
  return cp;
}

Polynomial local_shift(const Polynomial& cofactor, const std::vector<Rational>& p,
                       const std::vector<Polynomial>& phi) {
  int n = cofactor.nvars();
  if (static_cast<int>(p.size()) != n || static_cast<int>(phi.size()) != n)
    throw Error(ErrorKind::Domain, "local_shift: dimension mismatch");
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) {
    if (phi[i].has_constant_term()) throw Error(ErrorKind::Domain, "coordinate change must fix the origin");
    images.push_back(phi[i] + Polynomial::constant(phi[i].nvars(), p[i]));
  }
  return cofactor.compose(images);
}

Fan hj_subdivide_2d(const Cone& sigma) {
  if (sigma.size() != 2 || sigma.generators[0].size() != 2) throw Error(ErrorKind::Domain, "hj_subdivide_2d needs a 2-d cone");
  for (const auto& g : sigma.generators)
    if (!g.is_primitive()) throw Error(ErrorKind::Domain, "non-primitive generator");
  WeightVector u = sigma.generators[0], v = sigma.generators[1];
  auto det = [](const WeightVector& a, const WeightVector& b) { return a[0] * b[1] - a[1] * b[0]; };
  bool flipped = false;
  if (det(u, v) < 0) {
    std::swap(u, v);
    flipped = true;
  }
  if (det(u, v) == 0) throw Error(ErrorKind::Domain, "degenerate 2-d cone");
  std::vector<WeightVector> chain{u};
  WeightVector a = u;
  while (true) {
    long D = det(a, v);
    if (D == 1) break;
    long j = 0;
    for (; j < D; ++j)
      if ((j * a[0] + v[0]) % D == 0 && (j * a[1] + v[1]) % D == 0) break;
    WeightVector r({(j * a[0] + v[0]) / D, (j * a[1] + v[1]) / D});
    chain.push_back(r);
    a = r;
  }
  chain.push_back(v);
  if (flipped) std::reverse(chain.begin(), chain.end());
  Fan fan;
  fan.vertices = chain;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    fan.maximal_cones.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return fan;
}

}  // namespace nzeta
