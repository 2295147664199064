#ifndef ALPHAGERSCH_ERRORS_HPP
#define ALPHAGERSCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ag {

// Every failure mode the library reports. The C API maps these 1:1 onto
// ag_status codes, so additions here must be mirrored in alphagersch.h.
enum class errc {
  syntax,                // malformed expression text
  index,                 // variable index outside 1..n
  schema,                // malformed JSON input
  asymmetric_input,      // interval/point matrix not symmetric
  invalid_matrix,        // point matrix with positive off-diagonal
  nonpositive_radius,    // a box radius (or normalization weight) <= 0
  nonpositive_scaling,   // a scaling vector entry <= 0
  row_saturated,         // row update requested on a saturated row
  degenerate_row,        // row update would drive d_i to zero
  singular_subsystem,    // pivot collapse in the subsystem solve
  nonpositive_solution,  // subsystem solution not strictly positive
  iteration_anomaly,     // scaling loop exceeded the n-1 iteration bound
  dimension_too_large,   // brute-force oracle refused (n > 4)
  negative_alpha,        // underestimator check given a negative alpha
  invalid_argument,      // anything else (dimension mismatch, bad flag value)
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ag

#endif
