#include "triqmc/quadrature.hpp"

#include "triqmc/errors.hpp"
#include "triqmc/hashing.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/format.h>

namespace triqmc {

double face_weight(const Triangle& t, Point p)
{
    switch (classify(t, p).tag) {
    case FaceTag::outside:
        return 0.0;
    case FaceTag::vertex:
        return 0.25;
    case FaceTag::edge:
        return 0.5;
    case FaceTag::interior:
        return 1.0;
    }
    return 0.0;
}

namespace {

struct Box {
    double min_x, max_x, min_y, max_y;
};

Box bounding_box(const Triangle& t)
{
    const auto& v = t.corners();
    return {std::min({v[0].x, v[1].x, v[2].x}), std::max({v[0].x, v[1].x, v[2].x}),
            std::min({v[0].y, v[1].y, v[2].y}), std::max({v[0].y, v[1].y, v[2].y})};
}

} // namespace

bool fits_unit_cell(const Triangle& t)
{
    const Box b = bounding_box(t);
    return b.max_x - b.min_x <= 1.0 && b.max_y - b.min_y <= 1.0;
}

double weighted_mean(const SampleSet& ps, const Integrand& f)
{
    if (ps.points.empty()) {
        throw EmptySampleSet("weighted_mean of an empty sample set");
    }
    const Triangle& dom = ps.domain;
    const bool shifts = fits_unit_cell(dom);
    const Box b = bounding_box(dom);
    const double tol = default_classify_tolerance(dom);
    double sum = 0.0;
    for (const Point& x : ps.points) {
        if (!shifts) {
            const double w = face_weight(dom, x);
            if (w > 0.0) {
                sum += w * f.eval(x);
            }
            continue;
        }
        const auto mx0 = static_cast<long>(std::ceil(b.min_x - x.x - tol));
        const auto mx1 = static_cast<long>(std::floor(b.max_x - x.x + tol));
        const auto my0 = static_cast<long>(std::ceil(b.min_y - x.y - tol));
        const auto my1 = static_cast<long>(std::floor(b.max_y - x.y + tol));
        for (long mx = mx0; mx <= mx1; ++mx) {
            for (long my = my0; my <= my1; ++my) {
                const Point y{x.x + static_cast<double>(mx), x.y + static_cast<double>(my)};
                const double w = face_weight(dom, y);
                if (w > 0.0) {
                    sum += w * f.eval(y);
                }
            }
        }
    }
    return sum / static_cast<double>(ps.size());
}

double integrate(const SampleSet& ps, const Integrand& f) { return ps.domain.area() * weighted_mean(ps, f); }

std::string_view generator_name(GeneratorKind k)
{
    switch (k) {
    case GeneratorKind::vdc:
        return "vdc";
    case GeneratorKind::vdc_scrambled:
        return "vdc-scrambled";
    case GeneratorKind::lattice:
        return "lattice";
    case GeneratorKind::lattice_shifted:
        return "lattice-shifted";
    }
    return "unknown";
}

bool is_randomized(GeneratorKind k)
{
    return k == GeneratorKind::vdc_scrambled || k == GeneratorKind::lattice_shifted;
}

SampleSet generate(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed)
{
    switch (spec.kind) {
    case GeneratorKind::vdc:
        return vdc_sequence(spec.domain, n, spec.start);
    case GeneratorKind::vdc_scrambled:
        return scrambled_vdc(spec.domain, n, ScrambleSeed{seed, spec.scramble_depth}, spec.leaf);
    case GeneratorKind::lattice:
    case GeneratorKind::lattice_shifted: {
        LatticeConfig cfg;
        cfg.n = n;
        cfg.angle = spec.angle;
        cfg.exact_count = spec.exact_count;
        if (spec.kind == GeneratorKind::lattice_shifted) {
            cfg.random_shift = true;
            cfg.seed = seed;
        }
        return kronecker_on_triangle(cfg, spec.domain);
    }
    }
    throw OutOfRange("unknown generator kind");
}

std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t r) { return seed ^ mix64(r); }

std::vector<ConvergenceRow> convergence_study(const GeneratorSpec& spec, const Integrand& f,
                                              std::span<const std::size_t> ns, std::size_t replicates,
                                              std::uint64_t seed, unsigned threads)
{
    if (!f.exact_integral) {
        throw MissingExactIntegral(fmt::format("integrand '{}' has no exact integral", f.name));
    }
    if (replicates < 1) {
        throw OutOfRange("convergence_study needs at least one replicate");
    }
    const double exact = *f.exact_integral;
    const std::size_t reps = is_randomized(spec.kind) ? replicates : 1;
    std::vector<ConvergenceRow> rows;
    rows.reserve(ns.size());
    std::vector<double> estimates(reps);
    std::vector<std::size_t> sorted(ns.begin(), ns.end());
    std::stable_sort(sorted.begin(), sorted.end());
    for (const std::size_t n : sorted) {
        auto run = [&](std::size_t first, std::size_t stride) {
            for (std::size_t r = first; r < reps; r += stride) {
                estimates[r] = integrate(generate(spec, n, replicate_seed(seed, r)), f);
            }
        };
        const std::size_t workers = std::clamp<std::size_t>(threads, 1, reps);
        if (workers == 1) {
            run(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 1; w < workers; ++w) {
                pool.emplace_back(run, w, workers);
            }
            run(0, workers);
        }
        ConvergenceRow row;
        row.n = n;
        row.replicates = reps;
        row.seed = seed;
        double sum = 0.0;
        double abs_sum = 0.0;
        double sq_sum = 0.0;
        for (const double e : estimates) {
            sum += e;
            abs_sum += std::abs(e - exact);
            sq_sum += (e - exact) * (e - exact);
        }
        const auto count = static_cast<double>(reps);
        row.mean = sum / count;
        row.abs_err = abs_sum / count;
        row.rmse = std::sqrt(sq_sum / count);
        rows.push_back(row);
    }
    return rows;
}

double loglog_slope(std::span<const ConvergenceRow> rows)
{
    if (rows.size() < 2) {
        throw OutOfRange("slope needs at least two rows");
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const ConvergenceRow& r : rows) {
        const double lx = std::log(static_cast<double>(r.n));
        const double ly = std::log(r.rmse);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const auto m = static_cast<double>(rows.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace triqmc
