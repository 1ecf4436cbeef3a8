#pragma once
#include <optional>
#include <string>
#include <vector>

#include "nzeta/fan.hpp"
#include "nzeta/milnor.hpp"
#include "nzeta/nondegeneracy.hpp"
#include "nzeta/zeta.hpp"

namespace nzeta {

// prod (d/w_i - 1); warns when some w_i does not divide d
Rational milnor_orlik(const WeightVector& w, long d, std::vector<std::string>* warnings = nullptr);

struct ShiftInput {
  Polynomial f;
  WeightVector w;
  long d = 0;
  std::vector<long> d_exponents;  // d_i = d / w_i
  int k = 0;                      // 0-based shifted variable
  int m = 1;
};

// derives d and the d_i from f and w; throws Hypothesis when f is not weighted homogeneous
ShiftInput make_shift_input(const Polynomial& f, const WeightVector& w, int k, int m);

// g_k = f + z_k^{d_k + m}
Polynomial shifted_polynomial(const ShiftInput& in);

// user-supplied data for one singular point of E(w)
struct LocalPointData {
  std::optional<Cone> chart;
  std::vector<Rational> point;
  std::optional<long> mu;
  std::optional<std::vector<Polynomial>> change;
};

struct HypothesisCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ShiftOptions {
  std::vector<LocalPointData> local;
  std::optional<Fan> fan;
  bool compute_zeta = true;
  bool cross_check_linear = false;
  MilnorOptions milnor;
};

struct PointEvidence {
  PointCheck check;
  Rational extra_coefficient;  // value at p of the chart image of z_k^{d_k+m}
  ZetaFactored local_zeta;
};

struct ShiftResult {
  ShiftInput input;
  long mu = 0;
  long mu_tot = 0;
  long base = 0;  // prod (d_i - 1)
  std::vector<HypothesisCheck> hypotheses;
  Cone chart;
  Fan fan;
  std::vector<PointEvidence> points;
  std::optional<OkaResult> zeta;
  std::optional<long> mu_from_zeta;
  std::optional<MilnorReport> mu_linear;
};

// evaluates the hypothesis battery; throws Hypothesis naming the failed checks
ShiftResult shift_milnor(const ShiftInput& in, const ShiftOptions& opt = {});

// the hypothesis battery alone (no throw)
std::vector<HypothesisCheck> shift_hypotheses(const ShiftInput& in, const ShiftOptions& opt = {});

struct OkaAutoResult {
  OkaResult zeta;
  Fan fan;
  std::vector<DegenerateFaceData> data;
  std::vector<Cone> charts;
};

// Oka zeta of a weakly almost ND f: local zetas from Varchenko on the chart
// pullback at each singular point of E(w), in user coordinates when supplied
OkaAutoResult oka_zeta_auto(const Polynomial& f, const std::vector<LocalPointData>& local = {},
                            const std::optional<Fan>& fan = std::nullopt);

struct MuStarTriple {
  long mu = 0, mu2 = 0, mu1 = 0;
  std::vector<long> values() const { return {mu, mu2, mu1}; }
};
MuStarTriple mu_star_triple(long d, long m, long mu_tot);

struct CurveAnalysis {
  Polynomial f, g;
  long d = 0;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<ShiftResult> shift;
  std::optional<MuStarTriple> mu_star;
  std::optional<std::vector<long>> mu_star_linear;
  std::string failure;
};

struct ZariskiReport {
  Polynomial f0, f1;
  int k = 0, m = 1;
  CurveAnalysis curve0, curve1;
  std::string verdict;  // mu-star-zariski-candidate, mismatch, hypotheses-failed
  std::vector<std::string> citations;
  std::string note;
};

struct ZariskiOptions {
  std::vector<LocalPointData> local0, local1;
  bool linear_mu_star = false;  // also run milnor-linear mu_star on g0, g1
  int trials = 5;
  std::uint64_t seed = 1;
};

ZariskiReport zariski_surface_report(const Polynomial& f0, const Polynomial& f1, int k, int m,
                                     const ZariskiOptions& opt = {});

}  // namespace nzeta
