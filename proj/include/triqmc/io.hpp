#pragma once

#include "triqmc/discrepancy.hpp"
#include "triqmc/quadrature.hpp"
#include "triqmc/sample_set.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace triqmc {

/// Shortest-round-trip-safe rendering (17 significant digits).
std::string format_real(double v);

/// Header `x,y`, then one point per line.
void write_points_csv(std::ostream& out, std::span<const Point> points);

/// Accepts the format written by write_points_csv; throws ParseError.
std::vector<Point> read_points_csv(std::istream& in);

/// {family, value, witness:{corner,t,u,incl_t,incl_u}, approximate, n_points}
nlohmann::ordered_json to_json(const DiscrepancyReport& r);

/// Header `N,mean,abs_err,rmse,R,seed`.
void write_rows_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
nlohmann::ordered_json to_json(std::span<const ConvergenceRow> rows);

} // namespace triqmc
