#include "triqmc/sample_set.hpp"

#include <algorithm>

namespace triqmc {

bool all_inside(const SampleSet& ps)
{
    return std::all_of(ps.points.begin(), ps.points.end(),
                       [&](Point p) { return classify(ps.domain, p).tag != FaceTag::outside; });
}

SampleSet transform(const SampleSet& ps, const AffineMap& m)
{
    SampleSet out{apply(m, ps.domain), {}, ps.meta};
    out.points.reserve(ps.size());
    for (const Point& p : ps.points) {
        out.points.push_back(apply(m, p));
    }
    return out;
}

} // namespace triqmc
