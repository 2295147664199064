#include "alphagersch/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>

#include "alphagersch/errors.hpp"
#include "alphagersch/gersch.hpp"
#include "alphagersch/scaling.hpp"

namespace ag {

const char* family_name(MatrixFamily family) {
  return family == MatrixFamily::general ? "general" : "tridiagonal";
}

PointMatrix gen_matrix(int n, MatrixFamily family, SplitMix64& rng) {
  if (n < 2) throw Error(errc::invalid_argument, "gen_matrix requires n >= 2");
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  // Draw order is part of the seeded contract: row-major over the upper
  // triangle (general) or upper band (tridiagonal).
  for (int i = 0; i < n; ++i) {
    const int last = family == MatrixFamily::general ? n - 1 : std::min(i + 1, n - 1);
    for (int j = i; j <= last; ++j) {
      const double v = static_cast<double>(rng.next_int(-10, 10));
      e[i * n + j] = v;
      e[j * n + i] = v;
    }
  }
  if (family == MatrixFamily::general)
    for (int i = 0; i < n; ++i) e[i * n + i] += n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e[i * n + j] = -std::fabs(e[i * n + j]);
  return PointMatrix(n, std::move(e));
}

TrialOutcome run_trial(const PointMatrix& h) {
  const int n = h.dim();
  const double tol = default_tolerance(h);
  const std::vector<double> ones(n, 1.0);
  const RowValues rv = row_values(h, ones);
  const auto [hd_min, hd_max] = std::minmax_element(rv.hd.begin(), rv.hd.end());
  if (*hd_min >= -tol) return {true, 0};  // Gerschgorin-PSD
  if (*hd_max <= tol) return {true, 0};   // no unsaturated row

  int max_block_iterations = 0;
  for (const std::vector<int>& block : decompose_blocks(h)) {
    const PointMatrix hb = submatrix(h, block);
    const std::vector<double> db(block.size(), 1.0);
    const ScalingState result = li2(hb, db);
    max_block_iterations = std::max(max_block_iterations, result.iterations());
  }
  if (max_block_iterations == 0) return {true, 0};  // no block iterated
  return {false, max_block_iterations};
}

namespace {

// outcome[t]: -1 skipped, else iteration count. Chunked threads write
// disjoint slots, so the aggregate is independent of the worker count.
std::vector<int> trial_outcomes(int n, MatrixFamily family, int trials,
                                std::uint64_t seed, int jobs) {
  std::vector<int> outcome(trials, -1);
  auto work = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      const PointMatrix h = gen_matrix(n, family, rng);
      const TrialOutcome r = run_trial(h);
      outcome[t] = r.skipped ? -1 : r.iterations;
    }
  };
  if (jobs <= 1 || trials < 2) {
    work(0, trials);
    return outcome;
  }
  jobs = std::min<int>(jobs, std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, trials);
  std::vector<std::thread> pool;
  const int chunk = (trials + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(work, lo, hi);
  }
  for (std::thread& th : pool) th.join();
  return outcome;
}

}  // namespace

TrialStats run_experiment(int n, MatrixFamily family, int trials,
                          std::uint64_t seed, int jobs) {
  if (trials < 0) throw Error(errc::invalid_argument, "trials must be >= 0");
  TrialStats stats;
  stats.n = n;
  stats.family = family;
  stats.trials_requested = trials;
  stats.seed = seed;

  const std::vector<int> outcome = trial_outcomes(n, family, trials, seed, jobs);
  long long sum = 0;
  int max_it = 0;
  for (int t = 0; t < trials; ++t) {
    if (outcome[t] < 0) {
      ++stats.skipped;
      continue;
    }
    ++stats.trials_counted;
    sum += outcome[t];
    max_it = std::max(max_it, outcome[t]);
  }
  if (stats.trials_counted > 0) {
    stats.average_iterations =
        static_cast<double>(sum) / static_cast<double>(stats.trials_counted);
    stats.max_iterations = max_it;
  }
  return stats;
}

}  // namespace ag
