#include "alphagersch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "alphagersch/errors.hpp"

namespace ag::detail {

std::vector<double> lu_solve(int n, std::vector<double> a,
                             std::vector<double> b, double pivot_tol) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) pivot = r;
    if (std::fabs(a[pivot * n + col]) <= pivot_tol)
      throw Error(errc::singular_subsystem,
                  "subsystem matrix is singular to working precision");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r * n + col] / a[col * n + col];
      if (m == 0.0) continue;
      a[r * n + col] = 0.0;
      for (int c = col + 1; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

double min_eigenvalue_symmetric(int n, std::vector<double> a) {
  if (n == 1) return a[0];
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0) return 0.0;
  const double stop = 1e-13 * scale;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::fabs(a[i * n + j]));
    if (off <= stop) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) <= stop) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  double min_eig = a[0];
  for (int i = 1; i < n; ++i) min_eig = std::min(min_eig, a[i * n + i]);
  return min_eig;
}

}  // namespace ag::detail
