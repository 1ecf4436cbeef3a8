#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nzeta/nondegeneracy.hpp"
#include "nzeta/poly.hpp"

namespace nzeta {

// prod (1 - t^d)^nu over distinct periods d, no zero exponents
class ZetaFactored {
 public:
  ZetaFactored() = default;
  static ZetaFactored factor(long period, long exponent);
  static ZetaFactored from_pairs(const std::vector<std::pair<long, long>>& pairs);

  const std::map<long, long>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  long exponent(long period) const;

  ZetaFactored operator*(const ZetaFactored& o) const;
  ZetaFactored& operator*=(const ZetaFactored& o);
  ZetaFactored pow(long k) const;
  ZetaFactored inverse() const { return pow(-1); }
  long degree() const;

  bool operator==(const ZetaFactored& o) const { return f_ == o.f_; }
  bool operator!=(const ZetaFactored& o) const { return f_ != o.f_; }
  std::string to_string() const;  // "(1-t^3)(1-t^6)^-2", "1" when empty
  std::vector<std::pair<long, long>> pairs() const;

 private:
  void add(long period, long exponent);
  std::map<long, long> f_;
};

ZetaFactored zeta_mul(const ZetaFactored& a, const ZetaFactored& b);
ZetaFactored zeta_pow(const ZetaFactored& a, long k);
long degree(const ZetaFactored& z);

// components (m_i, chi_i) -> prod (1 - t^{m_i})^{-chi_i}
ZetaFactored acampo_zeta(const std::vector<std::pair<long, long>>& components);

struct VarchenkoTerm {
  std::vector<int> I;  // 0-based coordinates
  WeightVector w;      // on I
  long d = 0;
  Rational chi;
};

struct VarchenkoReport {
  ZetaFactored zeta;
  std::vector<std::pair<std::vector<int>, ZetaFactored>> per_I;
  std::vector<VarchenkoTerm> terms;
};

// throws Hypothesis naming the face when a face of some f^I is degenerate
VarchenkoReport varchenko(const Polynomial& f, bool assume_nd = false);
ZetaFactored varchenko_zeta(const Polynomial& f, bool assume_nd = false);

struct DegenerateFaceData {
  WeightVector w;
  long d = 0;
  std::vector<SingularPointRecord> points;
  std::vector<ZetaFactored> local_zetas;  // one per point
};

struct OkaResult {
  ZetaFactored zeta, zeta_prime, zeta_fs;
};

OkaResult oka_zeta(const Polynomial& f, const std::vector<DegenerateFaceData>& data);

long milnor_from_zeta(const ZetaFactored& z, int n);
long zeta_multiplicity(const ZetaFactored& z);
std::pair<long, long> zeta_multiplicity_factor(const ZetaFactored& z);

}  // namespace nzeta
