#ifndef ALPHAGERSCH_INTERVAL_HPP
#define ALPHAGERSCH_INTERVAL_HPP

#include <vector>

#include "alphagersch/errors.hpp"

namespace ag {

// Closed interval arithmetic in plain double precision. No directed
// rounding: enclosures are mathematically tight and correct up to roundoff,
// which is all the scaling algorithms need (see README, "Numerics").
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double point) : lo(point), hi(point) {}
  Interval(double lower, double upper) : lo(lower), hi(upper) {
    if (!(lo <= hi))
      throw Error(errc::invalid_argument, "interval endpoints out of order");
  }

  double rad() const { return (hi - lo) / 2.0; }
  double mid() const { return (hi + lo) / 2.0; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool degenerate() const { return lo == hi; }
};

inline bool operator==(Interval a, Interval b) {
  return a.lo == b.lo && a.hi == b.hi;
}

Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator-(Interval a);
Interval operator*(Interval a, Interval b);

// Tight image of x^k over the interval, k >= 0. Handles the even-power
// kink at zero; k = 0 gives [1, 1].
Interval int_pow(Interval a, int k);

// Intersection; throws invalid_argument when empty.
Interval intersect(Interval a, Interval b);

// Vector of variable domains.
class Box {
 public:
  explicit Box(std::vector<Interval> components);

  int dim() const { return static_cast<int>(components_.size()); }
  const Interval& operator[](int i) const { return components_[i]; }
  const std::vector<Interval>& components() const { return components_; }

  // (hi - lo)/2 per component; >= 0, zero for degenerate components.
  std::vector<double> radius() const;
  // (hi + lo)/2 per component.
  std::vector<double> midpoint() const;

 private:
  std::vector<Interval> components_;
};

}  // namespace ag

#endif
