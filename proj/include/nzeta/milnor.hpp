#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "nzeta/kernels.hpp"
#include "nzeta/poly.hpp"

namespace nzeta {

struct TruncatedSpace {
  int n = 0, m = 0;
  std::vector<Exponent> basis;  // ascending graded-lex, basis[0] = 1
  long N() const { return static_cast<long>(basis.size()); }
};
TruncatedSpace truncated_space(int n, int m);

// all n*N generators pi_m(M_j * df/dz_i), column index i*N + j, no pruning
struct JacobianSpan {
  Polynomial source;
  int m = 0;
  std::vector<Polynomial> columns;
};
JacobianSpan jacobian_span(const Polynomial& f, int m);

long jacobian_rank(const Polynomial& f, int m, bool parallel = true);
long truncated_milnor(const Polynomial& f, int m, bool parallel = true);

enum class MilnorMode { Stabilize, Safe };

struct MilnorOptions {
  MilnorMode mode = MilnorMode::Stabilize;
  int max_m = 40;        // truncation budget
  long max_N = 20000;    // basis-size budget
  bool parallel = true;
};

struct MilnorReport {
  long mu = 0;
  std::string certificate;  // "safe" or "stabilized"
  int m = 0;                // truncation degree that certified the value
  std::vector<std::pair<int, long>> trace;  // (m, truncated value)
};

MilnorReport milnor_number(const Polynomial& f, const MilnorOptions& opt = {});

bool in_W(const Polynomial& f, int n, int m, long mu);

struct SectionReport {
  long value = 0;
  int agreeing = 0;  // samples attaining the minimum
  int samples = 0;
  std::vector<long> values;
};

// f restricted to random i-planes z'' = A z' through 0; i = n returns milnor_number
SectionReport section_milnor(const Polynomial& f, int i, int trials, std::uint64_t seed,
                             bool parallel = true, const MilnorOptions& opt = {});

// a random graph-form i-plane section of f, coefficients in [-range, range]
Polynomial random_plane_section(const Polynomial& f, int i, long range, std::uint64_t seed);

struct MuStarSequence {
  std::vector<long> values;                // mu^(n), ..., mu^(1)
  std::vector<std::string> certification;  // per entry
};

MuStarSequence mu_star(const Polynomial& f, int trials, std::uint64_t seed, bool parallel = true,
                       const MilnorOptions& opt = {});

bool in_W_star(const Polynomial& f, int n, int m, const std::vector<long>& mu_star_values, int trials,
               std::uint64_t seed);

}  // namespace nzeta
