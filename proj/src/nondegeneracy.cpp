#include "nzeta/nondegeneracy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nzeta/error.hpp"
#include "nzeta/intlinalg.hpp"
#include "nzeta/milnor.hpp"
#include "nzeta/torus_solver.hpp"

namespace nzeta {

const char* method_name(NDMethod m) {
  switch (m) {
    case NDMethod::Monomial: return "monomial";
    case NDMethod::EdgeDiscriminant: return "edge-discriminant";
    case NDMethod::SurfaceResultant: return "surface-resultant";
    case NDMethod::UserAsserted: return "user-asserted";
    case NDMethod::Undecided: return "undecided";
  }
  return "?";
}

namespace {

std::string laurent_monomial(const std::vector<long>& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(j + 1);
    if (e[j] != 1) s += "^" + std::to_string(e[j]);
  }
  return s.empty() ? "1" : s;
}

// rank over Q of a small rational matrix
int rational_rank(std::vector<std::vector<Rational>> a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int q = r + 1; q < rows; ++q) {
      if (a[q][c] == 0) continue;
      Rational t = a[q][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[q][k] -= t * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

FaceVerdict face_function_nondegenerate(const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::Domain, "empty face");
  FaceVerdict v;
  const int n = g.nvars();
  auto pts = g.support();
  const Exponent& p0 = pts[0];
  IntMatrix D;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<long> row(n);
    for (int j = 0; j < n; ++j) row[j] = pts[i][j] - p0[j];
    D.push_back(row);
  }
  int k = 0;
  IntMatrix U = identity_matrix(n);
  if (!D.empty()) U = column_reduce(D, &k);
  v.essential_vars = k;
  if (k == 0) {
    v.nondegenerate = true;
    v.method = NDMethod::Monomial;
    return v;
  }
  // F(u) with z = u^{U^T}: the exponent of u_j in z^p is (p U)_j
  Polynomial F(k);
  for (const auto& [e, c] : g.terms()) {
    Exponent q(k);
    for (int j = 0; j < k; ++j) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<long>(e[i] - p0[i]) * U[i][j];
      q[j] = static_cast<int>(s);
    }
    F.add_term(q, c);
  }
  if (k >= 3) {
    v.decided = false;
    v.method = NDMethod::Undecided;
    v.witness = std::to_string(k) + " essential variables";
    return v;
  }
  v.method = k == 1 ? NDMethod::EdgeDiscriminant : NDMethod::SurfaceResultant;
  TorusCriticalSet cs = torus_critical_points(F);
  v.nondegenerate = cs.empty();
  v.finite_critical_set = !cs.infinite;
  if (v.nondegenerate) return v;
  // u_j = z^{row j of U^{-1}}
  IntMatrix Ui = inverse_unimodular(U);
  std::ostringstream os;
  if (cs.infinite) {
    os << "curve of torus critical points";
    if (k == 1) os << " (" << laurent_monomial(Ui[0]) << " constant)";
  } else if (!cs.rational_points.empty()) {
    const auto& p = cs.rational_points[0];
    for (int j = 0; j < k; ++j) os << (j ? ", " : "") << laurent_monomial(Ui[j]) << " = " << p[j].get_str();
    if (cs.rational_points.size() > 1) os << " (and " << cs.rational_points.size() - 1 << " more)";
  } else {
    os << "algebraic critical point: " << cs.irrational_info;
  }
  v.witness = os.str();
  return v;
}

FaceVerdict face_nondegenerate(const Polynomial& f, const Face& face) {
  if (!face.compact) throw Error(ErrorKind::Domain, "face is not compact");
  Polynomial g(f.nvars());
  for (const auto& p : face.points) g.add_term(p, f.coeff(p));
  FaceVerdict v = face_function_nondegenerate(g);
  v.face = face;
  return v;
}

NDProfile nd_profile(const Polynomial& f) {
  NDProfile pr;
  pr.complex = newton_complex(f);
  const auto& nc = pr.complex;
  const int n = nc.n;
  pr.convenient = nc.convenient;
  bool all_nd = true, low_nd = true, facets_finite = true;
  for (int fi : nc.compact_faces()) {
    FaceVerdict v = face_nondegenerate(f, nc.faces[fi]);
    if (!v.decided) pr.decided = false;
    if (v.decided && !v.nondegenerate) {
      all_nd = false;
      if (v.face.dim <= n - 2) {
        low_nd = false;
      } else if (!v.finite_critical_set) {
        facets_finite = false;
      }
    }
    pr.verdicts.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < nc.facets.size(); ++i) {
    const auto& fc = nc.facets[i];
    if (!nc.faces[fc.face].compact) continue;
    for (const auto& v : pr.verdicts)
      if (v.decided && !v.nondegenerate && v.face.points == nc.faces[fc.face].points) {
        pr.degenerate_facets.push_back(static_cast<int>(i));
        break;
      }
  }
  pr.nondegenerate = pr.decided && all_nd;
  pr.weakly_almost = pr.decided && pr.convenient && low_nd && facets_finite;
  if (!pr.convenient) pr.notes.push_back("not convenient");
  if (!low_nd) pr.notes.push_back("a face of dimension <= n-2 is degenerate");
  if (!facets_finite) pr.notes.push_back("a degenerate facet has a non-isolated critical locus");
  if (!pr.decided) pr.notes.push_back("undecided face (too many essential variables)");
  return pr;
}

Polynomial newton_principal_part(const Polynomial& h) {
  Polynomial out(h.nvars());
  if (h.is_zero()) return out;
  auto nc = newton_complex(h);
  std::set<Exponent> on;
  for (int fi : nc.compact_faces())
    for (const auto& p : nc.faces[fi].points) on.insert(p);
  for (const auto& [e, c] : h.terms())
    if (on.count(e)) out.add_term(e, c);
  return out;
}

namespace {

// f~'(y_2..y_n): the chart cofactor of the face function on {y_1 = 0}
Polynomial exceptional_equation(const Polynomial& f, const WeightVector& w, const Cone& sigma) {
  const int n = f.nvars();
  if (sigma.size() != n || !(sigma.generators[0] == w))
    throw Error(ErrorKind::Domain, "chart cone must have " + std::to_string(n) + " generators, the first being w");
  if (!is_regular(sigma)) throw Error(ErrorKind::Domain, "chart cone is not regular");
  Polynomial fw = face_function(f, w);
  Polynomial cof = chart_pullback(fw, sigma).cofactor;
  std::vector<int> rest;
  for (int i = 1; i < n; ++i) rest.push_back(i);
  for (const auto& [e, c] : cof.terms())
    if (e[0] != 0) throw Error(ErrorKind::Domain, "face function is not weighted homogeneous for w");
  return project_to(cof, rest);
}

Polynomial shift_to(const Polynomial& F, const std::vector<Rational>& p, const std::vector<Polynomial>& phi) {
  std::vector<Polynomial> im;
  for (int i = 0; i < F.nvars(); ++i) im.push_back(Polynomial::constant(F.nvars(), p[i]) + phi[i]);
  return F.compose(im);
}

std::vector<Polynomial> identity_change(int k) {
  std::vector<Polynomial> phi;
  for (int i = 0; i < k; ++i) phi.push_back(Polynomial::variable(k, i));
  return phi;
}

}  // namespace

std::vector<SingularPointRecord> sing_points(const Polynomial& f, const WeightVector& w, const Cone& sigma) {
  Polynomial F = exceptional_equation(f, w, sigma);
  std::vector<SingularPointRecord> out;
  if (F.nvars() == 0 || F.is_zero()) return out;
  if (F.nvars() > 2)
    throw Error(ErrorKind::Undecided, "singular point enumeration supports at most 2 chart variables");
  TorusCriticalSet cs = torus_critical_points(F);
  if (cs.infinite)
    throw Error(ErrorKind::Hypothesis, "E(w) has a curve of singular points: not weakly almost non-degenerate");
  if (cs.has_irrational)
    throw Error(ErrorKind::AlgebraicPoint,
                "algebraic point: supply local data manually (" + cs.irrational_info + ")");
  for (const auto& p : cs.rational_points) {
    SingularPointRecord r;
    r.chart = sigma;
    r.coordinates = p;
    r.local_equation = shift_to(F, p, identity_change(F.nvars()));
    r.mu = milnor_number(r.local_equation).mu;
    out.push_back(std::move(r));
  }
  return out;
}

int hessian_rank(const Polynomial& h) {
  const int k = h.nvars();
  std::vector<std::vector<Rational>> H(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Exponent e(k);
      e[i] += 1;
      e[j] += 1;
      H[i][j] = i == j ? 2 * h.coeff(e) : h.coeff(e);
    }
  return rational_rank(H);
}

std::vector<Polynomial> parse_change(const std::vector<std::string>& entries, int n) {
  if (static_cast<int>(entries.size()) != n - 1)
    throw Error(ErrorKind::Usage, "coordinate change needs " + std::to_string(n - 1) + " entries");
  std::vector<Polynomial> phi;
  for (const auto& s : entries) phi.push_back(parse_polynomial(s, n - 1, 'x', 2));
  return phi;
}

PreNDReport verify_pre_nondegenerate(const Polynomial& f, const WeightVector& w, const Cone& sigma,
                                     const std::vector<LocalChange>& changes) {
  Polynomial F = exceptional_equation(f, w, sigma);
  const int k = F.nvars();
  PreNDReport rep;
  rep.verdict = true;
  for (auto& rec : sing_points(f, w, sigma)) {
    PointCheck pc;
    pc.record = rec;
    const LocalChange* ch = nullptr;
    for (const auto& c : changes)
      if (c.point == rec.coordinates) ch = &c;
    auto assess = [&](const Polynomial& local) {
      pc.local = local;
      pc.principal = newton_principal_part(local);
      pc.convenient = is_convenient(local);
      pc.nondegenerate = pc.convenient && nd_profile(local).nondegenerate;
    };
    if (ch) {
      if (static_cast<int>(ch->phi.size()) != k) throw Error(ErrorKind::Usage, "coordinate change has wrong arity");
      // Phi(0) = 0 with invertible linear part
      std::vector<std::vector<Rational>> J(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i) {
        if (ch->phi[i].has_constant_term()) throw Error(ErrorKind::Domain, "coordinate change must fix the origin");
        for (int j = 0; j < k; ++j) {
          Exponent e(k);
          e[j] = 1;
          J[i][j] = ch->phi[i].coeff(e);
        }
      }
      if (rational_rank(J) < k) throw Error(ErrorKind::Domain, "supplied coordinate change is not invertible");
      assess(shift_to(F, rec.coordinates, ch->phi));
      pc.method = "user change";
      long mu = pc.local.is_zero() ? -1 : milnor_number(pc.local).mu;
      if (mu != rec.mu) throw Error(ErrorKind::Hypothesis, "coordinate change altered the local Milnor number");
      if (!pc.convenient) pc.note = "transformed equation is not convenient";
      else if (!pc.nondegenerate) pc.note = "transformed equation is Newton degenerate";
    } else {
      assess(rec.local_equation);
      pc.method = "identity";
      if (!(pc.convenient && pc.nondegenerate)) {
        int corank = k - hessian_rank(rec.local_equation);
        if (corank <= 1) {
          // splitting lemma: corank <= 1 means type A_mu
          Polynomial nf(k);
          for (int i = 0; i + corank < k; ++i) {
            Exponent e(k);
            e[i] = 2;
            nf.add_term(e, 1);
          }
          if (corank == 1) {
            Exponent e(k);
            e[k - 1] = static_cast<int>(rec.mu) + 1;
            nf.add_term(e, 1);
          }
          assess(nf);
          pc.method = "A_k normal form";
          pc.note = "type A_" + std::to_string(rec.mu);
        } else {
          pc.note = "corank " + std::to_string(corank) + " point needs a coordinate change";
        }
      }
    }
    if (!(pc.convenient && pc.nondegenerate)) rep.verdict = false;
    rep.points.push_back(std::move(pc));
  }
  return rep;
}

}  // namespace nzeta
