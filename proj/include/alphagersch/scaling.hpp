#ifndef ALPHAGERSCH_SCALING_HPP
#define ALPHAGERSCH_SCALING_HPP

#include <vector>

#include "alphagersch/gersch.hpp"
#include "alphagersch/matrix.hpp"

namespace ag {

enum class ScalingStatus {
  all_saturated,   // Hd <= 0: no row improvable, alpha as small as it gets
  convex,          // Hd >= 0: every matrix in the enclosure is PSD, alpha = 0
  tolerance_stop,  // objective improvement fell below the relative threshold
  iteration_cap,   // caller-imposed sweep/iteration budget exhausted
};

const char* scaling_status_name(ScalingStatus status);

struct TraceStep {
  enum class Kind { row_update, subsystem_update };
  Kind kind = Kind::row_update;
  std::vector<int> indices;  // one row, or the subsystem index set
  std::vector<double> d_after;
  double deficit_objective_after = 0.0;  // unit radii, i.e. sum of deficits
};

struct ScalingState {
  std::vector<double> d;
  std::vector<TraceStep> trace;
  ScalingStatus status = ScalingStatus::all_saturated;

  int iterations() const { return static_cast<int>(trace.size()); }
};

// Validated copy of the box radius vector, the recommended starting point.
// Rejects zero-width components: eliminate fixed variables before scaling.
std::vector<double> initial_d(const std::vector<double>& rad);

// Smallest admissible d_i for an unsaturated row:
// d_i := -(1/h_ii) sum_{j != i} h_ij d_j. Afterwards the row is exactly
// saturated. tol < 0 means default_tolerance(h).
double li1_row_update(const PointMatrix& h, const std::vector<double>& d,
                      int row, double tol = -1.0);

// Local improvement I: sweep rows in ascending order, applying the row
// update immediately wherever hd_over_d_i > tol. Stops when all rows are
// saturated (all_saturated), when every row has hd_over_d_i >= -tol
// (convex), when a sweep's relative objective improvement drops below 1e-12
// (tolerance_stop), or after max_sweeps (iteration_cap). The trace records
// every row update. May need many sweeps: on oscillating instances the pure
// method converges only geometrically.
ScalingState li1(const PointMatrix& h, const std::vector<double>& d0,
                 double tol = -1.0, int max_sweeps = 1000);

// Index set for the subsystem update: the strictly unsaturated rows
// { i : (Hd)_i > tol }, closed under adding any row with |(Hd)_i| <= tol
// that touches the set (h_ij != 0 for some member j), repeated to a
// fixpoint. Empty iff no row is strictly unsaturated.
std::vector<int> identify_unsaturated(const PointMatrix& h,
                                      const std::vector<double>& d,
                                      double tol);

// The linear system the subsystem update solves: H_I d_I = a with
// a_i = -sum_{j not in I} h_ij d_j >= 0. H_I is an M-matrix whenever the
// full matrix is irreducible, which makes the solution strictly positive.
struct Subsystem {
  std::vector<int> indices;  // against the parent matrix; may be empty when
                             // constructed directly from (H_I, a)
  PointMatrix h_sub;
  std::vector<double> a;
  double tol = 0.0;  // positivity threshold for the solution

  Subsystem(PointMatrix h_sub, std::vector<double> a,
            std::vector<int> indices = {}, double tol = -1.0);
};

Subsystem make_subsystem(const PointMatrix& h, const std::vector<double>& d,
                         const std::vector<int>& indices, double tol = -1.0);

// Direct LU solve with partial pivoting. Throws singular_subsystem when a
// pivot falls below 1e-12 * ||H_I||_inf and nonpositive_solution when a
// solution component is <= tol; both indicate block-diagonal or numerically
// degenerate input.
std::vector<double> solve_subsystem(const Subsystem& s);

// Local improvement II: while neither Hd <= tol nor Hd >= -tol holds,
// identify the unsaturated set, solve the subsystem, and replace d_I.
// Requires irreducible h (decompose blocks first). At most n-1 iterations
// are ever needed; running past that bound throws iteration_anomaly instead
// of silently continuing. max_iters < 0 means n.
ScalingState li2(const PointMatrix& h, const std::vector<double>& d0,
                 double tol = -1.0, int max_iters = -1);

}  // namespace ag

#endif
