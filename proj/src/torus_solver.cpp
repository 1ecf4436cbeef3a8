#include "nzeta/torus_solver.hpp"

#include <algorithm>

#include "nzeta/error.hpp"

namespace nzeta {

namespace {

// polynomial in v with coefficients in Q[u]
using VPoly = std::vector<UPoly>;

void trim(VPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

VPoly to_vpoly(const Polynomial& F) {
  VPoly p;
  for (const auto& [e, c] : F.terms()) {
    if (static_cast<int>(p.size()) <= e[1]) p.resize(e[1] + 1);
    std::vector<Rational> uc(e[0] + 1);
    uc[e[0]] = c;
    p[e[1]] = p[e[1]] + UPoly(uc);
  }
  trim(p);
  return p;
}

int udeg(const VPoly& p) {
  int d = 0;
  for (const auto& c : p) d = std::max(d, c.degree());
  return d;
}

UPoly eval_u(const VPoly& p, const Rational& u0) {
  std::vector<Rational> c;
  for (const auto& q : p) c.push_back(q.eval(u0));
  return UPoly(c);
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // extended Euclid: s*a + t*m = 1
  UPoly r0 = m, r1 = a % m, s0, s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    UPoly r2;
    UPoly q = r0.divmod(r1, r2);
    UPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0) throw Error(ErrorKind::Domain, "inverse_mod: not invertible");
  return (s0 * (1 / r0.lc())) % m;
}

// Is there a root alpha of the squarefree m and v0 != 0 with ps(alpha, v0) = 0 for all ps?
bool exists_over_extension(UPoly m, std::vector<VPoly> ps, std::string& info) {
  if (m.degree() < 1) return false;
  for (auto& p : ps) {
    for (auto& c : p) c = c % m;
    trim(p);
  }
  // make every leading coefficient a unit, splitting m when it is a zero divisor
  for (auto& p : ps) {
    while (!p.empty()) {
      UPoly g = gcd(p.back(), m);
      if (g.degree() == 0) break;
      if (g.degree() == m.degree()) {
        p.pop_back();
        trim(p);
        continue;
      }
      return exists_over_extension(g, ps, info) || exists_over_extension(m / g, ps, info);
    }
  }
  ps.erase(std::remove_if(ps.begin(), ps.end(), [](const VPoly& p) { return p.empty(); }), ps.end());
  if (ps.empty()) {
    info = "v free over root of " + std::to_string(m.degree()) + "-degree factor";
    return true;
  }
  if (ps.size() >= 2) {
    std::sort(ps.begin(), ps.end(), [](const VPoly& a, const VPoly& b) { return a.size() > b.size(); });
    VPoly& A = ps[0];
    const VPoly& B = ps[1];
    UPoly inv = inverse_mod(B.back(), m);
    // one reduction step A <- A mod B (leading term elimination until deg A < deg B)
    while (A.size() >= B.size() && !A.empty()) {
      UPoly f = (A.back() * inv) % m;
      std::size_t off = A.size() - B.size();
      for (std::size_t j = 0; j < B.size(); ++j) A[off + j] = (A[off + j] - f * B[j]) % m;
      A.pop_back();
      trim(A);
      // leading coefficient may now be a zero divisor: restart the normalisation
      if (!A.empty()) {
        UPoly g = gcd(A.back(), m);
        if (g.degree() != 0) return exists_over_extension(m, ps, info);
      }
    }
    return exists_over_extension(m, ps, info);
  }
  // single gcd polynomial G: strip factors of v, then ask for positive degree
  VPoly G = ps[0];
  while (!G.empty()) {
    UPoly g = gcd(G.front(), m);
    if (G.front().is_zero() || g.degree() == m.degree()) {
      G.erase(G.begin());
      continue;
    }
    if (g.degree() > 0) {
      return exists_over_extension(g, {G}, info) || exists_over_extension(m / g, {G}, info);
    }
    break;
  }
  if (G.size() >= 2) {
    info = "u root of degree-" + std::to_string(m.degree()) + " factor";
    std::string s = "[";
    for (int i = 0; i <= m.degree(); ++i) s += (i ? "," : "") + m.coeff(i).get_str();
    info += " " + s + "]";
    return true;
  }
  return false;
}

TorusCriticalSet critical_1d(const Polynomial& F) {
  TorusCriticalSet r;
  std::vector<Rational> c(std::max(F.total_degree(), 0) + 1);
  for (const auto& [e, v] : F.terms()) c[e[0]] = v;
  UPoly p = UPoly(c).strip_x();
  if (p.degree() <= 0) return r;
  UPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return r;
  auto roots = rational_roots(g);
  for (const auto& x : roots) r.rational_points.push_back({x});
  if (squarefree_part(g).degree() > static_cast<int>(roots.size())) {
    r.has_irrational = true;
    r.irrational_info = "repeated irrational root";
  }
  return r;
}

}  // namespace

Polynomial clear_monomial_factor(const Polynomial& F) {
  if (F.is_zero()) return F;
  int n = F.nvars();
  Exponent mn(n);
  bool first = true;
  for (const auto& [e, c] : F.terms()) {
    for (int i = 0; i < n; ++i) mn[i] = first ? e[i] : std::min(mn[i], e[i]);
    first = false;
  }
  Polynomial r(n);
  for (const auto& [e, c] : F.terms()) {
    Exponent s(e);
    for (int i = 0; i < n; ++i) s[i] -= mn[i];
    r.add_term(s, c);
  }
  return r;
}

UPoly resultant_v(const Polynomial& A, const Polynomial& B) {
  VPoly a = to_vpoly(A), b = to_vpoly(B);
  if (a.empty() || b.empty()) return {};
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da == 0 && db == 0) return UPoly::constant(1);
  int bound = udeg(a) * db + udeg(b) * da;
  std::vector<Rational> xs, ys;
  for (long t = 1; static_cast<int>(xs.size()) <= bound; ++t) {
    Rational u0(t);
    if (a.back().eval(u0) == 0 || b.back().eval(u0) == 0) continue;
    xs.push_back(u0);
    ys.push_back(resultant(eval_u(a, u0), eval_u(b, u0)));
  }
  return interpolate(xs, ys);
}

TorusCriticalSet torus_critical_points(const Polynomial& F0) {
  int k = F0.nvars();
  if (k < 1 || k > 2) throw Error(ErrorKind::Undecided, "torus critical points: only 1 or 2 variables are automated");
  TorusCriticalSet r;
  if (F0.is_zero()) {
    r.infinite = true;
    return r;
  }
  Polynomial F = clear_monomial_factor(F0);
  if (k == 1) return critical_1d(F);

  // dependence on a single variable: critical points come in whole lines
  bool dep_u = false, dep_v = false;
  for (const auto& [e, c] : F.terms()) {
    dep_u |= e[0] > 0;
    dep_v |= e[1] > 0;
  }
  if (!dep_u || !dep_v) {
    Polynomial G(1);
    for (const auto& [e, c] : F.terms()) G.add_term({dep_u ? e[0] : e[1]}, c);
    TorusCriticalSet s = critical_1d(G);
    r.infinite = !s.empty();
    return r;
  }

  Polynomial Fu = F.derivative(0), Fv = F.derivative(1);
  UPoly R1 = resultant_v(F, Fv);
  // content in u (gcd of v-coefficients); a square there is a curve u = const
  VPoly fv = to_vpoly(F);
  UPoly content = fv[0];
  for (const auto& c : fv) content = gcd(content, c);
  if (R1.is_zero() || !is_squarefree(content.strip_x())) {
    r.infinite = true;
    return r;
  }
  UPoly R = R1;
  if (!Fu.is_zero()) {
    UPoly R2 = resultant_v(F, Fu);
    if (!R2.is_zero()) R = gcd(R, R2);
    UPoly R3 = resultant_v(Fu, Fv);
    if (!R3.is_zero()) R = gcd(R, R3);
  }
  R = squarefree_part(R.strip_x());
  if (R.degree() <= 0) return r;

  VPoly pf = to_vpoly(F), pu = to_vpoly(Fu), pv = to_vpoly(Fv);
  UPoly rest = R;
  for (const auto& u0 : rational_roots(R)) {
    rest = rest / UPoly(std::vector<Rational>{-u0, 1});
    UPoly g = eval_u(pf, u0);
    for (const auto* q : {&pu, &pv}) {
      UPoly h = eval_u(*q, u0);
      if (!h.is_zero()) g = gcd(g, h);
    }
    g = g.strip_x();
    if (g.degree() <= 0) continue;
    auto vr = rational_roots(g);
    for (const auto& v0 : vr) r.rational_points.push_back({u0, v0});
    if (squarefree_part(g).degree() > static_cast<int>(vr.size())) {
      r.has_irrational = true;
      r.irrational_info = "v irrational over u = " + u0.get_str();
    }
  }
  if (rest.degree() >= 1) {
    std::string info;
    std::vector<VPoly> sys{pf, pv};
    if (!pu.empty()) sys.push_back(pu);
    if (exists_over_extension(rest.monic(), sys, info)) {
      r.has_irrational = true;
      r.irrational_info = info;
    }
  }
  std::sort(r.rational_points.begin(), r.rational_points.end());
  return r;
}

}  // namespace nzeta
