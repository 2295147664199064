#ifndef ALPHAGERSCH_EXPERIMENT_HPP
#define ALPHAGERSCH_EXPERIMENT_HPP

#include <cstdint>
#include <optional>

#include "alphagersch/matrix.hpp"
#include "alphagersch/rng.hpp"

namespace ag {

enum class MatrixFamily { general, tridiagonal };

const char* family_name(MatrixFamily family);

// Random test matrices. general: diagonal and strict upper triangle drawn
// as uniform integers in [-10, 10] (row-major), mirrored to symmetry, n
// added to the diagonal; tridiagonal: only the |i-j| <= 1 band is drawn, no
// diagonal increment. Off-diagonals are then replaced by -|h_ij| so the
// point-matrix preconditions hold; the magnitudes are what the bound uses.
PointMatrix gen_matrix(int n, MatrixFamily family, SplitMix64& rng);

struct TrialOutcome {
  bool skipped = false;
  int iterations = 0;
};

// One local-improvement-II run at unit radii. Skips matrices that need no
// iteration: Gerschgorin-PSD ones (Hd >= -tol) and ones with no unsaturated
// row (Hd <= tol). Reducible matrices run per block; the outcome is the
// maximum block iteration count, and a trial none of whose blocks iterate
// is skipped as well.
TrialOutcome run_trial(const PointMatrix& h);

struct TrialStats {
  int n = 0;
  MatrixFamily family = MatrixFamily::general;
  int trials_requested = 0;
  int trials_counted = 0;
  int skipped = 0;
  std::optional<double> average_iterations;  // over counted trials
  std::optional<int> max_iterations;         // over counted trials
  std::uint64_t seed = 0;
};

// Iteration statistics over `trials` independent matrices. Trial t draws
// from SplitMix64(derive_seed(seed, t)), so results are identical for any
// worker count. jobs <= 1 runs serially.
TrialStats run_experiment(int n, MatrixFamily family, int trials,
                          std::uint64_t seed, int jobs = 1);

}  // namespace ag

#endif
