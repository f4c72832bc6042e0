#pragma once

#include "triqmc/geometry.hpp"

#include <string>
#include <vector>

namespace triqmc {

/// Ordered point list tied to its domain triangle. `meta` describes the
/// generator that produced it.
struct SampleSet {
    Triangle domain;
    std::vector<Point> points;
    std::string meta;

    std::size_t size() const { return points.size(); }
};

/// True when every point lies in the closed domain (classify tolerance).
bool all_inside(const SampleSet& ps);

/// Applies m to the domain and every point.
SampleSet transform(const SampleSet& ps, const AffineMap& m);

} // namespace triqmc
