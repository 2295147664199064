#include "alphagersch/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "alphagersch/errors.hpp"
#include "alphagersch/linalg.hpp"

namespace ag {

namespace {

// Relative improvement of the deficit objective below which a LI-I sweep
// that still made updates is treated as stalled.
constexpr double kRelativeImprovement = 1e-12;

void require_positive(const std::vector<double>& d, errc code,
                      const char* what) {
  for (double v : d)
    if (!(v > 0.0)) throw Error(code, what);
}

double resolve_tol(const PointMatrix& h, double tol) {
  return tol < 0.0 ? default_tolerance(h) : tol;
}

double unit_deficit_objective(const PointMatrix& h,
                              const std::vector<double>& d) {
  const RowValues rv = row_values(h, d);
  double s = 0.0;
  for (double v : rv.deficit) s += v;
  return s;
}

// hd_over_d for a single row with the current d.
double row_value(const PointMatrix& h, const std::vector<double>& d, int i) {
  double q = h.at(i, i);
  for (int j = 0; j < h.dim(); ++j) {
    if (j == i) continue;
    q += h.at(i, j) * (d[j] / d[i]);
  }
  return q;
}

}  // namespace

const char* scaling_status_name(ScalingStatus status) {
  switch (status) {
    case ScalingStatus::all_saturated: return "all_saturated";
    case ScalingStatus::convex: return "convex";
    case ScalingStatus::tolerance_stop: return "tolerance_stop";
    case ScalingStatus::iteration_cap: return "iteration_cap";
  }
  return "unknown";
}

std::vector<double> initial_d(const std::vector<double>& rad) {
  if (rad.empty())
    throw Error(errc::invalid_argument, "empty radius vector");
  require_positive(rad, errc::nonpositive_radius,
                   "box radius must be strictly positive; eliminate "
                   "zero-width variables before scaling");
  return rad;
}

double li1_row_update(const PointMatrix& h, const std::vector<double>& d,
                      int row, double tol) {
  if (static_cast<int>(d.size()) != h.dim())
    throw Error(errc::invalid_argument, "scaling vector length mismatch");
  if (row < 0 || row >= h.dim())
    throw Error(errc::invalid_argument, "row index out of range");
  require_positive(d, errc::nonpositive_scaling,
                   "scaling vector must be strictly positive");
  tol = resolve_tol(h, tol);
  if (!(row_value(h, d, row) > tol))
    throw Error(errc::row_saturated, "row update requires an unsaturated row");
  double s = 0.0;
  for (int j = 0; j < h.dim(); ++j) {
    if (j == row) continue;
    s += h.at(row, j) * d[j];
  }
  if (s == 0.0)
    throw Error(errc::degenerate_row,
                "row has no off-diagonal coupling; the update would drive "
                "d_i to zero (block row)");
  // Unsaturated with nonpositive off-diagonals forces h_ii > 0.
  return -s / h.at(row, row);
}

ScalingState li1(const PointMatrix& h, const std::vector<double>& d0,
                 double tol, int max_sweeps) {
  if (static_cast<int>(d0.size()) != h.dim())
    throw Error(errc::invalid_argument, "scaling vector length mismatch");
  require_positive(d0, errc::nonpositive_scaling,
                   "scaling vector must be strictly positive");
  if (max_sweeps < 0)
    throw Error(errc::invalid_argument, "max_sweeps must be >= 0");
  tol = resolve_tol(h, tol);
  const int n = h.dim();

  ScalingState state;
  state.d = d0;
  double objective = unit_deficit_objective(h, state.d);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const RowValues rv = row_values(h, state.d);
    const auto [qmin, qmax] =
        std::minmax_element(rv.hd_over_d.begin(), rv.hd_over_d.end());
    if (*qmax <= tol) {
      state.status = ScalingStatus::all_saturated;
      return state;
    }
    if (*qmin >= -tol) {
      state.status = ScalingStatus::convex;
      return state;
    }

    int updates = 0;
    for (int i = 0; i < n; ++i) {
      if (!(row_value(h, state.d, i) > tol)) continue;
      state.d[i] = li1_row_update(h, state.d, i, tol);
      ++updates;
      TraceStep step;
      step.kind = TraceStep::Kind::row_update;
      step.indices = {i};
      step.d_after = state.d;
      step.deficit_objective_after = unit_deficit_objective(h, state.d);
      state.trace.push_back(std::move(step));
    }
    if (updates == 0) {
      state.status = ScalingStatus::all_saturated;
      return state;
    }
    const double next = state.trace.back().deficit_objective_after;
    if (objective - next <= kRelativeImprovement * std::max(1.0, objective)) {
      state.status = ScalingStatus::tolerance_stop;
      return state;
    }
    objective = next;
  }
  state.status = ScalingStatus::iteration_cap;
  return state;
}

std::vector<int> identify_unsaturated(const PointMatrix& h,
                                      const std::vector<double>& d,
                                      double tol) {
  require_positive(d, errc::nonpositive_scaling,
                   "scaling vector must be strictly positive");
  tol = resolve_tol(h, tol);
  const int n = h.dim();
  const RowValues rv = row_values(h, d);

  std::vector<bool> in_set(n, false);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (rv.hd[i] > tol) {
      in_set[i] = true;
      any = true;
    }
  }
  if (!any) return {};

  // Close over exactly saturated rows touching the set; a subsystem update
  // must not push them back above zero.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < n; ++i) {
      if (in_set[i] || std::fabs(rv.hd[i]) > tol) continue;
      for (int j = 0; j < n; ++j) {
        if (j != i && in_set[j] && h.at(i, j) != 0.0) {
          in_set[i] = true;
          grew = true;
          break;
        }
      }
    }
  }

  std::vector<int> result;
  for (int i = 0; i < n; ++i)
    if (in_set[i]) result.push_back(i);
  return result;
}

Subsystem::Subsystem(PointMatrix h_sub_in, std::vector<double> a_in,
                     std::vector<int> indices_in, double tol_in)
    : indices(std::move(indices_in)),
      h_sub(std::move(h_sub_in)),
      a(std::move(a_in)) {
  if (static_cast<int>(a.size()) != h_sub.dim())
    throw Error(errc::invalid_argument, "subsystem right-hand side mismatch");
  for (double v : a)
    if (v < 0.0)
      throw Error(errc::invalid_argument,
                  "subsystem right-hand side must be nonnegative");
  tol = tol_in < 0.0 ? default_tolerance(h_sub) : tol_in;
}

Subsystem make_subsystem(const PointMatrix& h, const std::vector<double>& d,
                         const std::vector<int>& indices, double tol) {
  require_positive(d, errc::nonpositive_scaling,
                   "scaling vector must be strictly positive");
  PointMatrix h_sub = submatrix(h, indices);
  std::vector<bool> in_set(h.dim(), false);
  for (int i : indices) in_set[i] = true;
  std::vector<double> a(indices.size(), 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    double s = 0.0;
    for (int j = 0; j < h.dim(); ++j)
      if (!in_set[j]) s -= h.at(indices[k], j) * d[j];
    a[k] = s;
  }
  return Subsystem(std::move(h_sub), std::move(a), indices,
                   tol < 0.0 ? default_tolerance(h) : tol);
}

std::vector<double> solve_subsystem(const Subsystem& s) {
  const int m = s.h_sub.dim();
  const double pivot_tol = 1e-12 * s.h_sub.norm_inf();
  std::vector<double> x =
      detail::lu_solve(m, s.h_sub.entries(), s.a, pivot_tol);
  for (int k = 0; k < m; ++k) {
    if (x[k] <= s.tol) {
      std::ostringstream os;
      os << "subsystem solution component " << k + 1 << " is " << x[k]
         << "; block-diagonal or numerically degenerate input";
      throw Error(errc::nonpositive_solution, os.str());
    }
  }
  return x;
}

ScalingState li2(const PointMatrix& h, const std::vector<double>& d0,
                 double tol, int max_iters) {
  if (static_cast<int>(d0.size()) != h.dim())
    throw Error(errc::invalid_argument, "scaling vector length mismatch");
  require_positive(d0, errc::nonpositive_scaling,
                   "scaling vector must be strictly positive");
  tol = resolve_tol(h, tol);
  const int n = h.dim();
  if (max_iters < 0) max_iters = n;

  ScalingState state;
  state.d = d0;

  for (;;) {
    const RowValues rv = row_values(h, state.d);
    const auto [hd_min, hd_max] =
        std::minmax_element(rv.hd.begin(), rv.hd.end());
    if (*hd_max <= tol) {
      state.status = ScalingStatus::all_saturated;
      return state;
    }
    if (*hd_min >= -tol) {
      state.status = ScalingStatus::convex;
      return state;
    }
    if (state.iterations() >= max_iters) {
      state.status = ScalingStatus::iteration_cap;
      return state;
    }
    if (state.iterations() >= n - 1)
      throw Error(errc::iteration_anomaly,
                  "subsystem updates exceeded the n-1 bound");

    const std::vector<int> set = identify_unsaturated(h, state.d, tol);
    const Subsystem sub = make_subsystem(h, state.d, set, tol);
    const std::vector<double> x = solve_subsystem(sub);
    for (std::size_t k = 0; k < set.size(); ++k) {
      // The exact solution never exceeds the current value; min() guards
      // the monotonicity of d against roundoff.
      state.d[set[k]] = std::min(state.d[set[k]], x[k]);
    }
    TraceStep step;
    step.kind = TraceStep::Kind::subsystem_update;
    step.indices = set;
    step.d_after = state.d;
    step.deficit_objective_after = unit_deficit_objective(h, state.d);
    state.trace.push_back(std::move(step));
  }
}

}  // namespace ag
