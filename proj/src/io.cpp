#include "triqmc/io.hpp"

#include "triqmc/errors.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include <fmt/format.h>

namespace triqmc {

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

void write_points_csv(std::ostream& out, std::span<const Point> points)
{
    out << "x,y\n";
    for (const Point& p : points) {
        out << format_real(p.x) << ',' << format_real(p.y) << '\n';
    }
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view s, std::size_t line)
{
    s = trim(s);
    // strtod rather than from_chars: libstdc++ 11 lacks floating from_chars.
    std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) {
        throw ParseError(fmt::format("line {}: '{}' is not a number", line, s));
    }
    return v;
}

} // namespace

std::vector<Point> read_points_csv(std::istream& in)
{
    std::vector<Point> points;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view row = trim(line);
        if (row.empty()) {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (row == "x,y") {
                continue;
            }
        }
        const std::size_t comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(fmt::format("line {}: expected two comma-separated values", lineno));
        }
        points.push_back({parse_real(row.substr(0, comma), lineno), parse_real(row.substr(comma + 1), lineno)});
    }
    return points;
}

nlohmann::ordered_json to_json(const DiscrepancyReport& r)
{
    nlohmann::ordered_json j;
    j["family"] = std::string(family_name(r.family));
    j["value"] = r.value;
    j["witness"] = {{"corner", std::string(1, corner_name(r.witness.corner))},
                    {"t", r.witness.t},
                    {"u", r.witness.u},
                    {"incl_t", r.witness.incl_t},
                    {"incl_u", r.witness.incl_u}};
    j["approximate"] = r.approximate;
    j["n_points"] = r.n_points;
    return j;
}

void write_rows_csv(std::ostream& out, std::span<const ConvergenceRow> rows)
{
    out << "N,mean,abs_err,rmse,R,seed\n";
    for (const ConvergenceRow& r : rows) {
        out << r.n << ',' << format_real(r.mean) << ',' << format_real(r.abs_err) << ',' << format_real(r.rmse)
            << ',' << r.replicates << ',' << r.seed << '\n';
    }
}

nlohmann::ordered_json to_json(std::span<const ConvergenceRow> rows)
{
    auto arr = nlohmann::ordered_json::array();
    for (const ConvergenceRow& r : rows) {
        arr.push_back({{"N", r.n},
                       {"mean", r.mean},
                       {"abs_err", r.abs_err},
                       {"rmse", r.rmse},
                       {"R", r.replicates},
                       {"seed", r.seed}});
    }
    return arr;
}

} // namespace triqmc
