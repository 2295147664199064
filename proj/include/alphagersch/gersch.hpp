#ifndef ALPHAGERSCH_GERSCH_HPP
#define ALPHAGERSCH_GERSCH_HPP

#include <vector>

#include "alphagersch/matrix.hpp"

namespace ag {

// The one saturation tolerance used to classify rows as unsaturated,
// exactly saturated, or strictly negative everywhere in the library:
// 1e-9 * max(1, ||H||_inf).
double default_tolerance(const PointMatrix& h);

// Per-row saturation values for a scaling vector d > 0.
//   hd_over_d[i] = h_ii + sum_{j != i} h_ij d_j / d_i
//   deficit[i]   = max(0, -hd_over_d[i])            (= 2 alpha_i)
//   hd[i]        = hd_over_d[i] * d_i               (same sign as (Hd)_i)
// Ratios d_j/d_i are formed directly, so the values are invariant under
// uniform scaling of d whenever the scaled entries are exactly
// representable.
struct RowValues {
  std::vector<double> hd_over_d;
  std::vector<double> deficit;
  std::vector<double> hd;
};

RowValues row_values(const PointMatrix& h, const std::vector<double>& d);

// Scaled Gerschgorin alpha: alpha_i = max(0, -hd_over_d_i / 2).
std::vector<double> alpha(const PointMatrix& h, const std::vector<double>& d);

// Maximum separation between f and its underestimator, attained at the box
// midpoint: sum_i alpha_i * rad_i^2.
double separation_objective(const std::vector<double>& alpha,
                            const std::vector<double>& rad);

// D(d) = sum_i rad_i^2 * deficit_i. The alpha objective equals D(d)/2; both
// are exposed because worked iterations are naturally tracked in deficit
// units while the separation bound uses alpha units.
double deficit_objective(const PointMatrix& h, const std::vector<double>& d,
                         const std::vector<double>& rad);
double alpha_objective(const PointMatrix& h, const std::vector<double>& d,
                       const std::vector<double>& rad);

// Row-wise certificate that every matrix in the enclosure plus 2*diag(alpha)
// is positive semidefinite: h_ii + 2 alpha_i + sum_{j != i} h_ij d_j/d_i
// >= -tol for every row.
bool psd_certificate(const PointMatrix& h, const std::vector<double>& alpha,
                     const std::vector<double>& d, double tol);

}  // namespace ag

#endif
