#include "nzeta/zeta.hpp"

#include <map>
#include <set>

#include "nzeta/error.hpp"
#include "nzeta/newton.hpp"

namespace nzeta {

ZetaFactored ZetaFactored::factor(long period, long exponent) {
  ZetaFactored z;
  z.add(period, exponent);
  return z;
}

ZetaFactored ZetaFactored::from_pairs(const std::vector<std::pair<long, long>>& pairs) {
  ZetaFactored z;
  for (auto [d, e] : pairs) z.add(d, e);
  return z;
}

void ZetaFactored::add(long period, long exponent) {
  if (period < 1) throw Error(ErrorKind::Domain, "zeta period must be positive");
  if (exponent == 0) return;
  long& e = f_[period];
  e += exponent;
  if (e == 0) f_.erase(period);
}

long ZetaFactored::exponent(long period) const {
  auto it = f_.find(period);
  return it == f_.end() ? 0 : it->second;
}

ZetaFactored ZetaFactored::operator*(const ZetaFactored& o) const {
  ZetaFactored r = *this;
  r *= o;
  return r;
}

ZetaFactored& ZetaFactored::operator*=(const ZetaFactored& o) {
  for (auto [d, e] : o.f_) add(d, e);
  return *this;
}

ZetaFactored ZetaFactored::pow(long k) const {
  ZetaFactored r;
  for (auto [d, e] : f_) r.add(d, e * k);
  return r;
}

long ZetaFactored::degree() const {
  long s = 0;
  for (auto [d, e] : f_) s += d * e;
  return s;
}

std::string ZetaFactored::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (auto [d, e] : f_) {
    s += "(1-t";
    if (d != 1) s += "^" + std::to_string(d);
    s += ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::vector<std::pair<long, long>> ZetaFactored::pairs() const { return {f_.begin(), f_.end()}; }

ZetaFactored zeta_mul(const ZetaFactored& a, const ZetaFactored& b) { return a * b; }
ZetaFactored zeta_pow(const ZetaFactored& a, long k) { return a.pow(k); }
long degree(const ZetaFactored& z) { return z.degree(); }

ZetaFactored acampo_zeta(const std::vector<std::pair<long, long>>& components) {
  ZetaFactored z;
  for (auto [m, chi] : components) {
    if (m < 1) throw Error(ErrorKind::Domain, "component multiplicity must be positive");
    z *= ZetaFactored::factor(m, -chi);
  }
  return z;
}

namespace {

// exact rational exponents per period; integrality is enforced at the end
ZetaFactored integral_zeta(const std::map<long, Rational>& acc, const std::string& what) {
  ZetaFactored z;
  for (const auto& [d, e] : acc) {
    if (e.get_den() != 1) throw Error(ErrorKind::Domain, what + ": non-integral exponent at period " + std::to_string(d));
    z *= ZetaFactored::factor(d, e.get_num().get_si());
  }
  return z;
}

std::string face_label(const std::vector<int>& I, const WeightVector& w) {
  std::string s = "I={";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i] + 1);
  return s + "}, w=" + w.to_string();
}

}  // namespace

VarchenkoReport varchenko(const Polynomial& f, bool assume_nd) {
  if (f.has_constant_term()) throw Error(ErrorKind::Domain, "f(0) != 0");
  const int n = f.nvars();
  VarchenkoReport rep;
  std::map<long, Rational> total;
  for (const auto& I : coordinate_subsets(n)) {
    Polynomial g = project_to(f, I);
    if (g.is_zero()) continue;
    if (!assume_nd) {
      auto pr = nd_profile(g);
      for (const auto& v : pr.verdicts) {
        if (!v.decided) throw Error(ErrorKind::Undecided, "face of f^I undecided for " + face_label(I, WeightVector()));
        if (!v.nondegenerate) {
          std::string pts;
          for (const auto& p : v.face.points) {
            std::string e;
            for (std::size_t j = 0; j < p.size(); ++j) e += (j ? "," : "") + std::to_string(p[j]);
            pts += "(" + e + ")";
          }
          throw Error(ErrorKind::Hypothesis, "Newton degenerate face of f^I, I={" + [&] {
            std::string s;
            for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i] + 1);
            return s;
          }() + "}, points " + pts + (v.witness ? ": " + *v.witness : ""));
        }
      }
    }
    std::map<long, Rational> acc;
    const long k = static_cast<long>(I.size());
    for (const auto& cf : compact_facet_data(g)) {
      // chi(w) = (-1)^{|I|-1} |I|! Vol / d
      Rational chi(cf.volume, Integer(cf.d));
      chi.canonicalize();
      if ((k - 1) % 2) chi = -chi;
      std::vector<long> wf(n, 0);
      for (long j = 0; j < k; ++j) wf[I[j]] = cf.w[j];
      rep.terms.push_back({I, WeightVector(wf), cf.d, chi});
      acc[cf.d] -= chi;
      total[cf.d] -= chi;
    }
    ZetaFactored zi;
    bool integral = true;
    for (const auto& [d, e] : acc) integral = integral && e.get_den() == 1;
    if (integral) zi = integral_zeta(acc, "zeta_I");
    rep.per_I.emplace_back(I, zi);
  }
  rep.zeta = integral_zeta(total, "Varchenko zeta");
  return rep;
}

ZetaFactored varchenko_zeta(const Polynomial& f, bool assume_nd) { return varchenko(f, assume_nd).zeta; }

OkaResult oka_zeta(const Polynomial& f, const std::vector<DegenerateFaceData>& data) {
  const int n = f.nvars();
  auto pr = nd_profile(f);
  if (!pr.decided) throw Error(ErrorKind::Undecided, "non-degeneracy undecided");
  if (!pr.weakly_almost) throw Error(ErrorKind::Hypothesis, "f is not weakly almost Newton non-degenerate");
  std::set<WeightVector> p0, given;
  for (int fi : pr.degenerate_facets) p0.insert(pr.complex.facets[fi].normal);
  for (const auto& dd : data) {
    if (!given.insert(dd.w).second) throw Error(ErrorKind::Usage, "duplicate degenerate face data for " + dd.w.to_string());
    if (dd.points.size() != dd.local_zetas.size())
      throw Error(ErrorKind::Usage, "missing local zeta for a singular point of E(" + dd.w.to_string() + ")");
  }
  if (p0 != given) {
    std::string want, got;
    for (const auto& w : p0) want += " " + w.to_string();
    for (const auto& w : given) got += " " + w.to_string();
    throw Error(ErrorKind::Hypothesis, "degenerate facets {" + want + " } do not match supplied data {" + got + " }");
  }
  OkaResult r;
  // Varchenko of the Newton boundary alone: depends only on Gamma(f)
  r.zeta_fs = varchenko_zeta(f, true);
  r.zeta_prime = r.zeta_fs;
  const long sign = (n - 1) % 2 ? -1 : 1;
  r.zeta = ZetaFactored();
  for (const auto& dd : data) {
    long mu_sum = 0;
    for (const auto& p : dd.points) mu_sum += p.mu;
    long d = dd.d > 0 ? dd.d : weighted_min(f, dd.w).d;
    r.zeta_prime *= ZetaFactored::factor(d, sign * mu_sum);
    for (const auto& z : dd.local_zetas) r.zeta *= z;
  }
  r.zeta *= r.zeta_prime;
  return r;
}

long milnor_from_zeta(const ZetaFactored& z, int n) {
  long v = z.degree() + 1;
  long mu = (n % 2) ? -v : v;
  if (mu < 0) throw Error(ErrorKind::Domain, "negative Milnor number from zeta degree: non-isolated input or wrong data");
  return mu;
}

long zeta_multiplicity(const ZetaFactored& z) { return zeta_multiplicity_factor(z).first; }

std::pair<long, long> zeta_multiplicity_factor(const ZetaFactored& z) {
  if (z.is_one()) throw Error(ErrorKind::Domain, "zeta-function is 1: no multiplicity factor");
  return *z.factors().begin();
}

}  // namespace nzeta
