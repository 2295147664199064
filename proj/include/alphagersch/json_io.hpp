#ifndef ALPHAGERSCH_JSON_IO_HPP
#define ALPHAGERSCH_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "alphagersch/experiment.hpp"
#include "alphagersch/expr.hpp"
#include "alphagersch/interval.hpp"
#include "alphagersch/matrix.hpp"
#include "alphagersch/scaling.hpp"
#include "alphagersch/verify.hpp"

// The file schemas shared with the CLI. Index sets and row numbers are
// serialized 1-based, matching the x1..xn variable syntax; the C++ API is
// zero-based throughout. Schema violations throw errc::schema; asymmetric
// matrices throw errc::asymmetric_input.
namespace ag {

// {"box": [[lo, hi], ...]}
Box box_from_json(const nlohmann::json& j);
nlohmann::json box_to_json(const Box& box);

// {"n": k, "lower": [[...]], "upper": [[...]]}
SymmetricIntervalMatrix ivmat_from_json(const nlohmann::json& j);
nlohmann::json ivmat_to_json(const SymmetricIntervalMatrix& m);

// {"n": k, "h": [[...]]}
PointMatrix pointmat_from_json(const nlohmann::json& j);
nlohmann::json pointmat_to_json(const PointMatrix& h);

// Accepts either matrix form; interval form is reduced via point_matrix.
PointMatrix matrix_from_json(const nlohmann::json& j);

// {"<key>": [x, ...]} with the expected length.
std::vector<double> dvec_from_json(const nlohmann::json& j,
                                   const std::string& key, int expected_n);

nlohmann::json trace_to_json(const ScalingState& state);
nlohmann::json report_to_json(const OptimalityReport& report);
nlohmann::json oracle_to_json(const OracleResult& result);
nlohmann::json conjecture_to_json(const ConjectureReport& report);
nlohmann::json underest_to_json(const UnderestimationReport& report);
nlohmann::json stats_to_json(const TrialStats& stats);

nlohmann::json parse_json_text(const std::string& text);

}  // namespace ag

#endif
