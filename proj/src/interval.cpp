#include "alphagersch/interval.hpp"

#include <algorithm>
#include <cmath>

namespace ag {

namespace {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Interval operator+(Interval a, Interval b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(Interval a, Interval b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(Interval a) { return Interval(-a.hi, -a.lo); }

Interval operator*(Interval a, Interval b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval int_pow(Interval a, int k) {
  if (k < 0)
    throw Error(errc::invalid_argument, "int_pow exponent must be >= 0");
  if (k == 0) return Interval(1.0, 1.0);
  if (k % 2 == 1) return Interval(ipow(a.lo, k), ipow(a.hi, k));
  // even power
  if (a.lo >= 0.0) return Interval(ipow(a.lo, k), ipow(a.hi, k));
  if (a.hi <= 0.0) return Interval(ipow(a.hi, k), ipow(a.lo, k));
  return Interval(0.0, ipow(std::max(-a.lo, a.hi), k));
}

Interval intersect(Interval a, Interval b) {
  const double lo = std::max(a.lo, b.lo);
  const double hi = std::min(a.hi, b.hi);
  if (lo > hi) throw Error(errc::invalid_argument, "empty intersection");
  return Interval(lo, hi);
}

Box::Box(std::vector<Interval> components) : components_(std::move(components)) {
  if (components_.empty())
    throw Error(errc::invalid_argument, "box must have at least one component");
}

std::vector<double> Box::radius() const {
  std::vector<double> r(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    r[i] = components_[i].rad();
  return r;
}

std::vector<double> Box::midpoint() const {
  std::vector<double> m(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    m[i] = components_[i].mid();
  return m;
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::syntax: return "SyntaxError";
    case errc::index: return "IndexError";
    case errc::schema: return "SchemaError";
    case errc::asymmetric_input: return "AsymmetricInput";
    case errc::invalid_matrix: return "InvalidPointMatrix";
    case errc::nonpositive_radius: return "NonpositiveRadius";
    case errc::nonpositive_scaling: return "NonpositiveScaling";
    case errc::row_saturated: return "RowSaturated";
    case errc::degenerate_row: return "DegenerateRow";
    case errc::singular_subsystem: return "SingularSubsystem";
    case errc::nonpositive_solution: return "NonpositiveSolution";
    case errc::iteration_anomaly: return "IterationAnomaly";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::negative_alpha: return "NegativeAlpha";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace ag
