#include "alphagersch/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "alphagersch/errors.hpp"

namespace ag {

SymmetricIntervalMatrix::SymmetricIntervalMatrix(int n,
                                                 std::vector<Interval> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw Error(errc::invalid_argument, "matrix dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(errc::invalid_argument, "interval matrix entry count mismatch");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!(at(i, j) == at(j, i)))
        throw Error(errc::asymmetric_input, "interval matrix is not symmetric");
}

PointMatrix::PointMatrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw Error(errc::invalid_argument, "matrix dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(errc::invalid_argument, "point matrix entry count mismatch");
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i))
        throw Error(errc::asymmetric_input, "point matrix is not symmetric");
      if (at(i, j) > 0.0)
        throw Error(errc::invalid_matrix,
                    "point matrix off-diagonal entries must be <= 0");
    }
  }
}

double PointMatrix::norm_inf() const {
  double norm = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::fabs(at(i, j));
    norm = std::max(norm, row);
  }
  return norm;
}

PointMatrix point_matrix(const SymmetricIntervalMatrix& im) {
  const int n = im.dim();
  std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    h[i * n + i] = im.at(i, i).lo;
    for (int j = i + 1; j < n; ++j) {
      const Interval e = im.at(i, j);
      const double mag = std::max(std::fabs(e.lo), std::fabs(e.hi));
      h[i * n + j] = h[j * n + i] = -mag;
    }
  }
  return PointMatrix(n, std::move(h));
}

PointMatrix submatrix(const PointMatrix& h, const std::vector<int>& idx) {
  const int m = static_cast<int>(idx.size());
  if (m < 1) throw Error(errc::invalid_argument, "empty index set");
  for (int k = 0; k < m; ++k) {
    if (idx[k] < 0 || idx[k] >= h.dim())
      throw Error(errc::invalid_argument, "submatrix index out of range");
    if (k > 0 && idx[k] <= idx[k - 1])
      throw Error(errc::invalid_argument, "submatrix indices must increase");
  }
  std::vector<double> e(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) e[r * m + c] = h.at(idx[r], idx[c]);
  return PointMatrix(m, std::move(e));
}

std::vector<std::vector<int>> decompose_blocks(const PointMatrix& h) {
  const int n = h.dim();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> component;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      component.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (!seen[j] && j != i && h.at(i, j) != 0.0) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(component.begin(), component.end());
    blocks.push_back(std::move(component));
  }
  return blocks;
}

PointMatrix normalize(const PointMatrix& h, const std::vector<double>& rad) {
  const int n = h.dim();
  if (static_cast<int>(rad.size()) != n)
    throw Error(errc::invalid_argument, "radius length mismatch");
  for (double r : rad)
    if (!(r > 0.0))
      throw Error(errc::nonpositive_radius,
                  "normalization requires strictly positive radii");
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i * n + j] = rad[i] * rad[j] * h.at(i, j);
  return PointMatrix(n, std::move(e));
}

}  // namespace ag
