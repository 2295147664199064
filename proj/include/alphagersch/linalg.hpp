#ifndef ALPHAGERSCH_LINALG_HPP
#define ALPHAGERSCH_LINALG_HPP

#include <vector>

namespace ag::detail {

// x = A \ b by LU with partial pivoting; a is row-major n*n and consumed.
// Throws errc::singular_subsystem when a pivot magnitude is <= pivot_tol.
std::vector<double> lu_solve(int n, std::vector<double> a,
                             std::vector<double> b, double pivot_tol);

// Smallest eigenvalue of a symmetric matrix, cyclic Jacobi rotations.
double min_eigenvalue_symmetric(int n, std::vector<double> a);

}  // namespace ag::detail

#endif
