#include "alphagersch/gersch.hpp"

#include <algorithm>
#include <cstddef>

#include "alphagersch/errors.hpp"

namespace ag {

namespace {

void require_positive_scaling(const PointMatrix& h,
                              const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != h.dim())
    throw Error(errc::invalid_argument, "scaling vector length mismatch");
  for (double v : d)
    if (!(v > 0.0))
      throw Error(errc::nonpositive_scaling,
                  "scaling vector must be strictly positive");
}

}  // namespace

double default_tolerance(const PointMatrix& h) {
  return 1e-9 * std::max(1.0, h.norm_inf());
}

RowValues row_values(const PointMatrix& h, const std::vector<double>& d) {
  require_positive_scaling(h, d);
  const int n = h.dim();
  RowValues rv;
  rv.hd_over_d.resize(n);
  rv.deficit.resize(n);
  rv.hd.resize(n);
  for (int i = 0; i < n; ++i) {
    // Ratio form: uniform rescaling of d that keeps the ratios exactly
    // representable leaves every value here bit-identical.
    double q = h.at(i, i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      q += h.at(i, j) * (d[j] / d[i]);
    }
    rv.hd_over_d[i] = q;
    rv.deficit[i] = std::max(0.0, -q);
    rv.hd[i] = q * d[i];
  }
  return rv;
}

std::vector<double> alpha(const PointMatrix& h, const std::vector<double>& d) {
  RowValues rv = row_values(h, d);
  std::vector<double> a(rv.deficit.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = 0.5 * rv.deficit[i];
  return a;
}

double separation_objective(const std::vector<double>& alpha,
                            const std::vector<double>& rad) {
  if (alpha.size() != rad.size())
    throw Error(errc::invalid_argument, "alpha/radius length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    s += alpha[i] * rad[i] * rad[i];
  return s;
}

double deficit_objective(const PointMatrix& h, const std::vector<double>& d,
                         const std::vector<double>& rad) {
  if (rad.size() != d.size())
    throw Error(errc::invalid_argument, "radius length mismatch");
  RowValues rv = row_values(h, d);
  double s = 0.0;
  for (std::size_t i = 0; i < rv.deficit.size(); ++i)
    s += rad[i] * rad[i] * rv.deficit[i];
  return s;
}

double alpha_objective(const PointMatrix& h, const std::vector<double>& d,
                       const std::vector<double>& rad) {
  return separation_objective(alpha(h, d), rad);
}

bool psd_certificate(const PointMatrix& h, const std::vector<double>& alpha,
                     const std::vector<double>& d, double tol) {
  if (static_cast<int>(alpha.size()) != h.dim())
    throw Error(errc::invalid_argument, "alpha length mismatch");
  if (tol < 0.0)
    throw Error(errc::invalid_argument, "certificate tolerance must be >= 0");
  RowValues rv = row_values(h, d);
  for (int i = 0; i < h.dim(); ++i)
    if (rv.hd_over_d[i] + 2.0 * alpha[i] < -tol) return false;
  return true;
}

}  // namespace ag
