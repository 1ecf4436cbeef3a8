#include "nzeta/milnor.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>
#include <random>

#include "nzeta/error.hpp"

namespace nzeta {

TruncatedSpace truncated_space(int n, int m) {
  if (n < 1 || m < 0) throw Error(ErrorKind::Domain, "truncated space needs n >= 1, m >= 0");
  TruncatedSpace s;
  s.n = n;
  s.m = m;
  s.basis = kernels::truncated_basis(n, m);
  return s;
}

JacobianSpan jacobian_span(const Polynomial& f, int m) {
  JacobianSpan J;
  J.source = f;
  J.m = m;
  auto basis = kernels::truncated_basis(f.nvars(), m);
  for (int i = 0; i < f.nvars(); ++i) {
    Polynomial d = f.derivative(i);
    for (const auto& M : basis) J.columns.push_back((Polynomial::monomial(f.nvars(), M) * d).truncate(m));
  }
  return J;
}

long jacobian_rank(const Polynomial& f, int m, bool parallel) {
  if (f.is_zero()) return 0;
  if (parallel) return kernels::rank_omp(kernels::jacobian_columns_omp(f, m));
  return kernels::rank_serial(kernels::jacobian_columns_serial(f, m));
}

long truncated_milnor(const Polynomial& f, int m, bool parallel) {
  if (m < 1) throw Error(ErrorKind::Domain, "truncation degree must be >= 1");
  if (f.has_constant_term()) throw Error(ErrorKind::Domain, "f(0) != 0");
  long N = static_cast<long>(kernels::truncated_basis(f.nvars(), m).size());
  return N - jacobian_rank(f, m, parallel);
}

static long binom(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

MilnorReport milnor_number(const Polynomial& f, const MilnorOptions& opt) {
  if (f.has_constant_term()) throw Error(ErrorKind::Domain, "f(0) != 0");
  if (f.is_zero()) throw Error(ErrorKind::Domain, "non-isolated singularity: f is identically zero");
  MilnorReport rep;
  const int n = f.nvars();
  long prev = -1;
  int grew = 0;
  for (int m = 1;; ++m) {
    if (m > opt.max_m || binom(n + m, n) > opt.max_N) {
      std::string tr;
      for (auto& [mm, v] : rep.trace) tr += " m=" + std::to_string(mm) + ":" + std::to_string(v);
      if (grew >= 3)
        throw Error(ErrorKind::Domain, "non-isolated singularity: truncated Milnor value keeps growing with m (" +
                                           tr.substr(1) + ")");
      throw Error(ErrorKind::Budget,
                  "stabilization budget exceeded, probable non-isolated singularity (" + tr.substr(1) + ")");
    }
    long v = truncated_milnor(f, m, opt.parallel);
    rep.trace.emplace_back(m, v);
    if (v == prev) {
      rep.mu = v;
      rep.m = m;
      break;
    }
    grew = (prev >= 0 && v > prev) ? grew + 1 : 0;
    prev = v;
  }
  rep.certificate = rep.m >= rep.mu ? "safe" : "stabilized";
  if (opt.mode == MilnorMode::Safe && rep.m < rep.mu) {
    int m = static_cast<int>(rep.mu);
    long v = truncated_milnor(f, m, opt.parallel);
    rep.trace.emplace_back(m, v);
    if (v != rep.mu)
      throw Error(ErrorKind::Hypothesis, "safe recheck at m=" + std::to_string(m) + " gave " + std::to_string(v) +
                                             ", stabilized value was " + std::to_string(rep.mu));
    rep.m = m;
    rep.certificate = "safe";
  }
  return rep;
}

bool in_W(const Polynomial& f, int n, int m, long mu) {
  if (f.nvars() != n) throw Error(ErrorKind::Domain, "variable count mismatch");
  long N = static_cast<long>(kernels::truncated_basis(n, m).size());
  if (mu < 0 || mu > N) return false;
  return jacobian_rank(f, m, true) == N - mu;
}

Polynomial random_plane_section(const Polynomial& f, int i, long range, std::uint64_t seed) {
  const int n = f.nvars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> U(-range, range);
  std::vector<Polynomial> images;
  for (int j = 0; j < i; ++j) images.push_back(Polynomial::variable(i, j));
  for (int j = i; j < n; ++j) {
    Polynomial lin(i);
    for (int l = 0; l < i; ++l) lin += Polynomial::variable(i, l) * Rational(U(rng));
    images.push_back(lin);
  }
  return f.compose(images);
}

namespace {

std::optional<long> try_milnor(const Polynomial& g, const MilnorOptions& opt) {
  try {
    if (g.is_zero()) return std::nullopt;
    return milnor_number(g, opt).mu;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SectionReport section_milnor(const Polynomial& f, int i, int trials, std::uint64_t seed, bool parallel,
                             const MilnorOptions& opt) {
  const int n = f.nvars();
  if (i < 1 || i > n) throw Error(ErrorKind::Usage, "section dimension out of range");
  if (trials < 3) throw Error(ErrorKind::Usage, "at least 3 trials are required");
  SectionReport rep;
  if (i == n) {
    rep.value = milnor_number(f, opt).mu;
    rep.agreeing = rep.samples = 1;
    rep.values = {rep.value};
    return rep;
  }
  MilnorOptions inner = opt;
  inner.parallel = false;  // the trials themselves are the parallel unit
  std::vector<long> vals;
  for (int round = 0; round < 4; ++round) {
    long range = 3L << (2 * round);
    std::vector<Polynomial> sections;
    for (int t = 0; t < trials; ++t)
      sections.push_back(random_plane_section(f, i, range, seed + 1000003ull * (round * trials + t + 1)));
    std::vector<std::optional<long>> out(sections.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long t = 0; t < static_cast<long>(sections.size()); ++t) out[t] = try_milnor(sections[t], inner);
    } else {
      for (std::size_t t = 0; t < sections.size(); ++t) out[t] = try_milnor(sections[t], inner);
    }
    for (auto& o : out)
      if (o) vals.push_back(*o);
    rep.samples += trials;
    if (vals.empty()) continue;
    long mn = *std::min_element(vals.begin(), vals.end());
    int cnt = static_cast<int>(std::count(vals.begin(), vals.end(), mn));
    if (cnt >= 3) {
      rep.value = mn;
      rep.agreeing = cnt;
      rep.values = vals;
      return rep;
    }
  }
  if (vals.empty()) throw Error(ErrorKind::Domain, "all plane sections are non-isolated");
  throw Error(ErrorKind::Hypothesis, "inconsistent trials: minimal section value not reproduced");
}

MuStarSequence mu_star(const Polynomial& f, int trials, std::uint64_t seed, bool parallel, const MilnorOptions& opt) {
  MuStarSequence s;
  const int n = f.nvars();
  auto top = milnor_number(f, opt);
  s.values.push_back(top.mu);
  s.certification.push_back(top.certificate);
  for (int i = n - 1; i >= 1; --i) {
    auto r = section_milnor(f, i, trials, seed + static_cast<std::uint64_t>(i), parallel, opt);
    s.values.push_back(r.value);
    s.certification.push_back("sampled-trials " + std::to_string(r.agreeing) + "/" + std::to_string(r.samples));
  }
  if (n >= 1 && s.values.back() != multiplicity(f) - 1)
    throw Error(ErrorKind::Hypothesis, "line section disagrees with mult_0(f) - 1");
  return s;
}

bool in_W_star(const Polynomial& f, int n, int m, const std::vector<long>& mu, int trials, std::uint64_t seed) {
  if (f.nvars() != n || static_cast<int>(mu.size()) != n)
    throw Error(ErrorKind::Usage, "mu* needs one entry per dimension");
  if (!in_W(f, n, m, mu[0])) return false;
  if (n == 1) return true;
  // a generic hyperplane attains the minimal section value
  std::optional<long> best;
  Polynomial chosen;
  for (int t = 0; t < trials; ++t) {
    Polynomial h = random_plane_section(f, n - 1, 3, seed + 7919ull * (t + 1));
    auto v = try_milnor(h, {});
    if (v && (!best || *v < *best)) {
      best = v;
      chosen = h;
    }
  }
  if (!best) return false;
  return in_W_star(chosen, n - 1, m, std::vector<long>(mu.begin() + 1, mu.end()), trials, seed + 1);
}

}  // namespace nzeta
