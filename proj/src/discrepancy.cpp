#include "triqmc/discrepancy.hpp"

#include "triqmc/errors.hpp"
#include "triqmc/vdc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <thread>
#include <vector>

#include <fmt/format.h>

namespace triqmc {

std::string_view family_name(DiscrepancyFamily f)
{
    switch (f) {
    case DiscrepancyFamily::parallelogram:
        return "parallelogram";
    case DiscrepancyFamily::anchored_box:
        return "anchored_box";
    case DiscrepancyFamily::subtriangle:
        return "subtriangle";
    }
    return "unknown";
}

namespace {

struct AxisPair {
    std::vector<double> p;
    std::vector<double> q;
};

// The two non-anchor weights of every point, clamped to [0,1].
AxisPair anchor_weights(const SampleSet& ps, Corner corner)
{
    AxisPair out;
    out.p.reserve(ps.size());
    out.q.reserve(ps.size());
    for (const Point& x : ps.points) {
        const Barycentric w = to_barycentric(ps.domain, x);
        double first = 0.0;
        double second = 0.0;
        switch (corner) {
        case Corner::A:
            first = w.w2;
            second = w.w3;
            break;
        case Corner::B:
            first = w.w1;
            second = w.w3;
            break;
        case Corner::C:
            first = w.w1;
            second = w.w2;
            break;
        }
        out.p.push_back(std::clamp(first, 0.0, 1.0));
        out.q.push_back(std::clamp(second, 0.0, 1.0));
    }
    return out;
}

bool counted(double w, double bound, bool inclusive) { return inclusive ? w <= bound : w < bound; }

struct Best {
    double abs = -1.0;
    double signed_value = 0.0;
    Witness witness;

    void offer(double delta, Corner corner, double t, double u, bool incl_t, bool incl_u)
    {
        if (std::abs(delta) > abs) {
            abs = std::abs(delta);
            signed_value = delta;
            witness = {corner, t, u, incl_t, incl_u};
        }
    }
};

std::vector<double> candidates(std::vector<double> values)
{
    values.push_back(1.0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

// Exact sweep over every candidate (t, u) pair. `closed_at_one` controls
// whether the closed variant is evaluated at parameter 1.0 (the parallelogram
// family allows it; anchored boxes [0,a) with a < 1 do not).
template <class Volume>
Best exact_sweep(const AxisPair& w, Corner corner, Volume volume, bool closed_at_one)
{
    const std::size_t n = w.p.size();
    const auto n_real = static_cast<double>(n);
    const std::vector<double> tvals = candidates(w.p);
    const std::vector<double> uvals = candidates(w.q);

    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = static_cast<std::size_t>(std::lower_bound(uvals.begin(), uvals.end(), w.q[i]) - uvals.begin());
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return w.p[l] < w.p[r]; });

    std::vector<std::size_t> hist(uvals.size(), 0);
    Best best;
    auto scan_u = [&](double t, bool incl_t) {
        std::size_t below = 0;
        for (std::size_t k = 0; k < uvals.size(); ++k) {
            const double u = uvals[k];
            const double vol = volume(t, u);
            best.offer(vol - static_cast<double>(below) / n_real, corner, t, u, incl_t, false);
            below += hist[k];
            if (u < 1.0 || closed_at_one) {
                best.offer(vol - static_cast<double>(below) / n_real, corner, t, u, incl_t, true);
            }
        }
    };

    std::size_t next = 0;
    for (const double t : tvals) {
        while (next < n && w.p[order[next]] < t) {
            ++hist[rank[order[next]]];
            ++next;
        }
        scan_u(t, false);
        while (next < n && w.p[order[next]] == t) {
            ++hist[rank[order[next]]];
            ++next;
        }
        if (t < 1.0 || closed_at_one) {
            scan_u(t, true);
        }
    }
    return best;
}

Best merge(const std::array<Best, 3>& per_corner)
{
    Best best = per_corner[0];
    for (std::size_t k = 1; k < per_corner.size(); ++k) {
        if (per_corner[k].abs > best.abs) {
            best = per_corner[k];
        }
    }
    return best;
}

DiscrepancyReport make_report(DiscrepancyFamily family, const Best& best, bool approximate, std::size_t n)
{
    DiscrepancyReport r;
    r.family = family;
    r.value = best.abs;
    r.signed_value = best.signed_value;
    r.witness = best.witness;
    r.approximate = approximate;
    r.n_points = n;
    return r;
}

void require_points(const SampleSet& ps)
{
    if (ps.points.empty()) {
        throw EmptySampleSet("discrepancy of an empty sample set");
    }
}

constexpr std::array<Corner, 3> kCorners{Corner::A, Corner::B, Corner::C};

} // namespace

double signed_discrepancy(const SampleSet& ps, Corner corner, double t, double u, bool incl_t, bool incl_u)
{
    require_points(ps);
    const double vol = corner_box_fraction(t, u);
    const AxisPair w = anchor_weights(ps, corner);
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.p.size(); ++i) {
        if (counted(w.p[i], t, incl_t) && counted(w.q[i], u, incl_u)) {
            ++count;
        }
    }
    return vol - static_cast<double>(count) / static_cast<double>(ps.size());
}

double signed_discrepancy(const SampleSet& ps, const Witness& w)
{
    return signed_discrepancy(ps, w.corner, w.t, w.u, w.incl_t, w.incl_u);
}

DiscrepancyReport parallelogram_discrepancy(const SampleSet& ps, unsigned threads)
{
    require_points(ps);
    std::array<Best, 3> per_corner;
    auto run = [&](std::size_t k) {
        per_corner[k] = exact_sweep(anchor_weights(ps, kCorners[k]), kCorners[k], corner_box_fraction, true);
    };
    if (threads <= 1) {
        for (std::size_t k = 0; k < 3; ++k) {
            run(k);
        }
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t k = 1; k < 3 && k < threads; ++k) {
            workers.emplace_back(run, k);
        }
        run(0);
        for (std::size_t k = threads; k < 3; ++k) {
            run(k);
        }
    }
    return make_report(DiscrepancyFamily::parallelogram, merge(per_corner), false, ps.size());
}

DiscrepancyReport parallelogram_discrepancy_grid(const SampleSet& ps, std::size_t resolution)
{
    require_points(ps);
    if (resolution < 2) {
        throw OutOfRange(fmt::format("grid resolution must be at least 2, got {}", resolution));
    }
    const std::size_t r = resolution;
    const double denom = static_cast<double>(r - 1);
    auto grid_value = [&](std::size_t j) { return static_cast<double>(j) / denom; };
    // Smallest grid index whose value admits w (closed: >= w, open: > w); r if none.
    auto first_index = [&](double w, bool inclusive) {
        auto j = static_cast<std::size_t>(std::clamp(std::floor(w * denom), 0.0, denom));
        while (j < r && !counted(w, grid_value(j), inclusive)) {
            ++j;
        }
        while (j > 0 && counted(w, grid_value(j - 1), inclusive)) {
            --j;
        }
        return j;
    };
    const auto n_real = static_cast<double>(ps.size());
    std::vector<std::uint32_t> cum(r * r);
    std::array<Best, 3> per_corner;
    for (std::size_t c = 0; c < 3; ++c) {
        const AxisPair w = anchor_weights(ps, kCorners[c]);
        for (const bool incl_t : {false, true}) {
            for (const bool incl_u : {false, true}) {
                std::fill(cum.begin(), cum.end(), 0U);
                for (std::size_t i = 0; i < w.p.size(); ++i) {
                    const std::size_t jt = first_index(w.p[i], incl_t);
                    const std::size_t ju = first_index(w.q[i], incl_u);
                    if (jt < r && ju < r) {
                        ++cum[jt * r + ju];
                    }
                }
                for (std::size_t j = 0; j < r; ++j) {
                    for (std::size_t k = 0; k < r; ++k) {
                        std::uint32_t v = cum[j * r + k];
                        if (j > 0) {
                            v += cum[(j - 1) * r + k];
                        }
                        if (k > 0) {
                            v += cum[j * r + k - 1];
                        }
                        if (j > 0 && k > 0) {
                            v -= cum[(j - 1) * r + k - 1];
                        }
                        cum[j * r + k] = v;
                        const double t = grid_value(j);
                        const double u = grid_value(k);
                        per_corner[c].offer(corner_box_fraction(t, u) - v / n_real, kCorners[c], t, u, incl_t,
                                            incl_u);
                    }
                }
            }
        }
    }
    return make_report(DiscrepancyFamily::parallelogram, merge(per_corner), true, ps.size());
}

double pc_box_fraction(double a1, double a2)
{
    if (!(a1 >= 0.0 && a1 <= 1.0 && a2 >= 0.0 && a2 <= 1.0)) {
        throw OutOfRange(fmt::format("pc_box_fraction: ({}, {}) outside [0,1]^2", a1, a2));
    }
    // T_PC = {0 <= x <= y <= 1}; area of {x < a1, y < a2, x <= y} over area 1/2.
    const double area = a1 <= a2 ? a1 * a2 - 0.5 * a1 * a1 : 0.5 * a2 * a2;
    return 2.0 * area;
}

DiscrepancyReport pc_discrepancy(const SampleSet& ps)
{
    if (!(ps.domain == reference_triangle(ReferenceTriangle::pillards_cools))) {
        throw WrongDomain("anchored-box discrepancy requires the domain (0,0),(0,1),(1,1)");
    }
    require_points(ps);
    AxisPair xy;
    for (const Point& p : ps.points) {
        xy.p.push_back(std::clamp(p.x, 0.0, 1.0));
        xy.q.push_back(std::clamp(p.y, 0.0, 1.0));
    }
    const Best best = exact_sweep(xy, Corner::A, pc_box_fraction, false);
    return make_report(DiscrepancyFamily::anchored_box, best, false, ps.size());
}

double subtriangle_discrepancy(const SampleSet& ps, int k)
{
    require_points(ps);
    if (k < 0 || k > 8) {
        throw OutOfRange(fmt::format("subtriangle depth must be in [0, 8], got {}", k));
    }
    const std::size_t cells = std::size_t{1} << (2 * k);
    std::vector<std::size_t> counts(cells, 0);
    for (const Point& p : ps.points) {
        ++counts[from_base4_digits(locate_cell(ps.domain, p, k))];
    }
    const double share = 1.0 / static_cast<double>(cells);
    const double inv_n = 1.0 / static_cast<double>(ps.size());
    double worst = 0.0;
    for (std::size_t c : counts) {
        worst = std::max(worst, std::abs(share - static_cast<double>(c) * inv_n));
    }
    return worst;
}

} // namespace triqmc
