#ifndef ALPHAGERSCH_MATRIX_HPP
#define ALPHAGERSCH_MATRIX_HPP

#include <vector>

#include "alphagersch/interval.hpp"

namespace ag {

// Symmetric matrix of intervals (a Hessian enclosure). Entries are stored
// row-major; construction rejects asymmetric input.
class SymmetricIntervalMatrix {
 public:
  SymmetricIntervalMatrix(int n, std::vector<Interval> entries);

  int dim() const { return n_; }
  const Interval& at(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<Interval>& entries() const { return entries_; }

 private:
  int n_;
  std::vector<Interval> entries_;
};

// Real symmetric matrix with nonpositive off-diagonal entries — the point
// reduction of an interval Hessian enclosure. It keeps the diagonal lower
// endpoints and the negated largest off-diagonal magnitudes, which is
// everything the scaled Gerschgorin bound looks at.
class PointMatrix {
 public:
  PointMatrix(int n, std::vector<double> entries);

  int dim() const { return n_; }
  double at(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

  // max_i sum_j |h_ij|
  double norm_inf() const;

 private:
  int n_;
  std::vector<double> entries_;
};

// Point reduction: diagonal = lower endpoints, off-diagonal
// h_ij = -max(|lo_ij|, |hi_ij|).
PointMatrix point_matrix(const SymmetricIntervalMatrix& im);

// Principal submatrix on the given (strictly increasing) index set.
PointMatrix submatrix(const PointMatrix& h, const std::vector<int>& idx);

// Connected components of the off-diagonal nonzero pattern, each sorted
// ascending, ordered by smallest member. A block-diagonal matrix can be
// processed one block at a time; most callers should decompose first.
std::vector<std::vector<int>> decompose_blocks(const PointMatrix& h);

// Congruence scaling h'_ij = rad_i * rad_j * h_ij. Reduces a problem with
// general box radii to one with unit radii: alpha_i(h, rad.*c) * rad_i^2 =
// alpha_i(normalize(h, rad), c).
PointMatrix normalize(const PointMatrix& h, const std::vector<double>& rad);

}  // namespace ag

#endif
