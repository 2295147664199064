#include "alphagersch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <thread>

#include "alphagersch/errors.hpp"
#include "alphagersch/experiment.hpp"
#include "alphagersch/gersch.hpp"
#include "alphagersch/linalg.hpp"
#include "alphagersch/rng.hpp"
#include "alphagersch/scaling.hpp"

namespace ag {

namespace {

void require_lengths(const PointMatrix& h, const std::vector<double>& d,
                     const std::vector<double>& rad) {
  if (static_cast<int>(d.size()) != h.dim())
    throw Error(errc::invalid_argument, "scaling vector length mismatch");
  if (static_cast<int>(rad.size()) != h.dim())
    throw Error(errc::invalid_argument, "radius length mismatch");
  for (double v : d)
    if (!(v > 0.0))
      throw Error(errc::nonpositive_scaling,
                  "scaling vector must be strictly positive");
  for (double v : rad)
    if (!(v > 0.0))
      throw Error(errc::nonpositive_radius,
                  "radius vector must be strictly positive");
}

}  // namespace

OptimalityReport check_optimality(const PointMatrix& h,
                                  const std::vector<double>& d,
                                  const std::vector<double>& rad, double tol) {
  require_lengths(h, d, rad);
  const int n = h.dim();
  const PointMatrix hn = normalize(h, rad);
  std::vector<double> c(n);
  for (int i = 0; i < n; ++i) c[i] = d[i] / rad[i];
  if (tol < 0.0) tol = default_tolerance(hn);

  OptimalityReport report;
  report.tolerance = tol;
  const RowValues rv = row_values(hn, c);

  for (int i = 0; i < n; ++i)
    if (rv.hd[i] < -tol) report.i_star.push_back(i);

  // c1: every row saturated
  report.c1_worst_row = static_cast<int>(
      std::max_element(rv.hd.begin(), rv.hd.end()) - rv.hd.begin());
  report.c1_worst_slack = rv.hd[report.c1_worst_row];
  report.c1_pass = report.c1_worst_slack <= tol;

  const double c_max_all = *std::max_element(c.begin(), c.end());

  // c2: c constant on I*
  if (report.i_star.empty()) {
    report.c2_pass = true;
    report.c2_max_deviation = 0.0;
  } else {
    double lo = c[report.i_star.front()], hi = lo, sum = 0.0;
    for (int i : report.i_star) {
      lo = std::min(lo, c[i]);
      hi = std::max(hi, c[i]);
      sum += c[i];
    }
    report.c2_common_ratio = sum / static_cast<double>(report.i_star.size());
    report.c2_max_deviation = hi - lo;
    report.c2_pass = report.c2_max_deviation <= tol * c_max_all;
  }

  // c3: c_i <= c_j for i outside I*, j in I*
  report.c3_pass = true;
  report.c3_unnormalized_pass = true;
  if (!report.i_star.empty() &&
      report.i_star.size() < static_cast<std::size_t>(n)) {
    std::vector<bool> in_star(n, false);
    for (int i : report.i_star) in_star[i] = true;
    int out_max = -1, in_min = -1;
    for (int i = 0; i < n; ++i) {
      if (in_star[i]) {
        if (in_min < 0 || c[i] < c[in_min]) in_min = i;
      } else {
        if (out_max < 0 || c[i] > c[out_max]) out_max = i;
      }
    }
    if (c[out_max] > c[in_min] + tol) {
      report.c3_pass = false;
      report.c3_violating_i = out_max;
      report.c3_violating_j = in_min;
    }
    // Informational: the same dominance test on d .* rad instead of d ./ rad.
    double dr_scale = 0.0;
    for (int i = 0; i < n; ++i) dr_scale = std::max(dr_scale, d[i] * rad[i]);
    for (int i = 0; i < n && report.c3_unnormalized_pass; ++i) {
      if (in_star[i]) continue;
      for (int j : report.i_star) {
        if (d[i] * rad[i] > d[j] * rad[j] + tol * dr_scale) {
          report.c3_unnormalized_pass = false;
          break;
        }
      }
    }
  }

  // c4: rows with nonnegative row sums of H' stay out of I*
  report.c4_pass = true;
  {
    std::vector<bool> in_star(n, false);
    for (int i : report.i_star) in_star[i] = true;
    for (int k = 0; k < n; ++k) {
      double row_sum = 0.0;
      for (int j = 0; j < n; ++j) row_sum += hn.at(k, j);
      if (row_sum >= -tol && in_star[k]) {
        report.c4_pass = false;
        report.c4_violating_row = k;
        break;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

// Objective in normalized coordinates: sum of alpha_i(hn, c).
double normalized_objective(const PointMatrix& hn, const std::vector<double>& c) {
  const int n = hn.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double q = hn.at(i, i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      q += hn.at(i, j) * (c[j] / c[i]);
    }
    if (q < 0.0) s += -0.5 * q;
  }
  return s;
}

// Minimize the (coordinate-wise convex) slice over c[coord] in [lo, hi].
double golden_section(const PointMatrix& hn, std::vector<double>& c, int coord,
                      double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  auto eval = [&](double t) {
    c[coord] = t;
    return normalized_objective(hn, c);
  };
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  while (b - a > 1e-13) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = eval(x2);
    }
  }
  const double t = (a + b) / 2.0;
  c[coord] = t;
  return eval(t);
}

}  // namespace

OracleResult oracle_min(const PointMatrix& h, const std::vector<double>& rad,
                        double grid_step) {
  const int n = h.dim();
  if (static_cast<int>(rad.size()) != n)
    throw Error(errc::invalid_argument, "radius length mismatch");
  if (n > 4)
    throw Error(errc::dimension_too_large,
                "brute-force oracle is limited to n <= 4");
  if (!(grid_step > 0.0) || grid_step > 0.5)
    throw Error(errc::invalid_argument, "grid step must lie in (0, 0.5]");
  const PointMatrix hn = normalize(h, rad);

  // Grid ladder {step, 2 step, ..., 1}.
  std::vector<double> ladder;
  for (int k = 1;; ++k) {
    const double v = std::min(k * grid_step, 1.0);
    ladder.push_back(v);
    if (v >= 1.0) break;
  }
  const int m = static_cast<int>(ladder.size());

  double best_obj = 0.0;
  std::vector<double> best_c;
  std::vector<double> c(n, 1.0);
  bool first = true;
  // One component pinned to 1 (scale invariance), the rest sweep the
  // ladder lexicographically; ties keep the earliest point.
  for (int fixed = 0; fixed < n; ++fixed) {
    std::vector<int> digit(n, 0);
    for (;;) {
      for (int i = 0; i < n; ++i) c[i] = i == fixed ? 1.0 : ladder[digit[i]];
      const double obj = normalized_objective(hn, c);
      if (first || obj < best_obj) {
        first = false;
        best_obj = obj;
        best_c = c;
      }
      int carry = n - 1;
      while (carry >= 0) {
        if (carry == fixed) {
          --carry;
          continue;
        }
        if (++digit[carry] < m) break;
        digit[carry] = 0;
        --carry;
      }
      if (carry < 0) break;
    }
  }

  // Polish: cyclic coordinate-wise golden-section around the best grid
  // point, keeping the pinned component at 1.
  int best_fixed = 0;
  for (int i = 1; i < n; ++i)
    if (best_c[i] >= best_c[best_fixed]) best_fixed = i;
  c = best_c;
  for (int round = 0; round < 30; ++round) {
    for (int j = 0; j < n; ++j) {
      if (j == best_fixed) continue;
      golden_section(hn, c, j, grid_step / 10.0, 1.0);
    }
  }
  const double polished = normalized_objective(hn, c);
  if (polished < best_obj) {
    best_obj = polished;
    best_c = c;
  }

  OracleResult result;
  result.d_star = std::move(best_c);
  result.alpha_objective = best_obj;
  result.deficit_objective = 2.0 * best_obj;
  result.grid_step = grid_step;
  return result;
}

// ---------------------------------------------------------------------------
// Conjecture harness

namespace {

struct ConjectureTrial {
  bool pass = true;
  ConjectureCounterexample data;
};

ConjectureTrial conjecture_trial(int n, std::uint64_t seed, int t,
                                 double grid_step) {
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
  PointMatrix h = gen_matrix(n, MatrixFamily::general, rng);
  while (decompose_blocks(h).size() > 1)
    h = gen_matrix(n, MatrixFamily::general, rng);

  const std::vector<double> ones(n, 1.0);
  const ScalingState st = li2(h, ones);
  const double heuristic = separation_objective(alpha(h, st.d), ones);
  const OracleResult orc = oracle_min(h, ones, grid_step);
  const double tolerance =
      std::max(1e-6, 2.0 * grid_step * h.norm_inf());

  ConjectureTrial trial;
  trial.pass = heuristic <= orc.alpha_objective + tolerance;
  if (!trial.pass) {
    trial.data = ConjectureCounterexample{
        h, st.d, orc.d_star, heuristic, orc.alpha_objective, tolerance, t};
  }
  return trial;
}

}  // namespace

ConjectureReport conjecture_test(int n, int trials, std::uint64_t seed,
                                 double grid_step, int jobs) {
  if (n > 4)
    throw Error(errc::dimension_too_large,
                "conjecture harness is limited to n <= 4");
  if (trials < 0) throw Error(errc::invalid_argument, "trials must be >= 0");
  ConjectureReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.grid_step = grid_step;

  std::vector<ConjectureTrial> results(trials);
  auto work = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t)
      results[t] = conjecture_trial(n, seed, t, grid_step);
  };
  if (jobs <= 1 || trials < 2) {
    work(0, trials);
  } else {
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
  }

  for (int t = 0; t < trials; ++t) {
    if (results[t].pass) {
      ++report.passes;
    } else {
      ++report.failures;
      if (!report.counterexample) report.counterexample = results[t].data;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Underestimator sampling

UnderestimationReport underestimation_check(const Expr& f, const Box& box,
                                            const std::vector<double>& alpha,
                                            int samples, std::uint64_t seed) {
  const int n = box.dim();
  if (static_cast<int>(alpha.size()) != n)
    throw Error(errc::invalid_argument, "alpha length mismatch");
  for (double a : alpha)
    if (a < 0.0)
      throw Error(errc::negative_alpha, "alpha entries must be nonnegative");
  if (samples < 0)
    throw Error(errc::invalid_argument, "sample count must be >= 0");

  UnderestimationReport report;
  report.samples = samples;
  report.seed = seed;
  if (samples == 0) return report;

  const std::vector<Expr> hess = hessian(f, n);
  SplitMix64 rng(seed);
  std::vector<double> x(n);
  std::vector<double> hx(static_cast<std::size_t>(n) * n);

  double max_gap = -std::numeric_limits<double>::infinity();
  double max_sep = -std::numeric_limits<double>::infinity();
  double min_curv = std::numeric_limits<double>::infinity();
  std::vector<double> argmax(n, 0.0);

  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) {
      const Interval iv = box[i];
      x[i] = iv.lo + rng.next_unit() * (iv.hi - iv.lo);
    }
    const double fx = eval_point(f, x);
    double sep_term = 0.0;
    for (int i = 0; i < n; ++i)
      sep_term += alpha[i] * (box[i].hi - x[i]) * (x[i] - box[i].lo);
    const double gx = fx - sep_term;
    max_gap = std::max(max_gap, gx - fx);
    const double sep = fx - gx;
    if (sep > max_sep) {
      max_sep = sep;
      argmax = x;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        hx[i * n + j] = eval_point(hess[i * n + j], x);
        if (i == j) hx[i * n + j] += 2.0 * alpha[i];
      }
    min_curv = std::min(min_curv, detail::min_eigenvalue_symmetric(n, hx));
  }

  report.max_underestimator_gap = max_gap;
  report.max_separation = max_sep;
  report.argmax = std::move(argmax);
  report.min_curvature = min_curv;
  return report;
}

}  // namespace ag
