#include "triqmc/lattice.hpp"

#include "triqmc/errors.hpp"
#include "triqmc/hashing.hpp"
#include "triqmc/vdc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

namespace triqmc {

namespace {

using i128 = __int128;

bool is_perfect_square(std::int64_t c)
{
    if (c < 0) {
        return false;
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(c)));
    while (r > 0 && r * r > c) {
        --r;
    }
    while ((r + 1) * (r + 1) <= c) {
        ++r;
    }
    return r * r == c;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 x, i128 y)
{
    x = abs128(x);
    y = abs128(y);
    while (y != 0) {
        const i128 r = x % y;
        x = y;
        y = r;
    }
    return x;
}

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw NotAdmissible("derived tangent coefficient overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

QuadraticIrrational reduced(i128 a, i128 b, std::int64_t c, i128 d)
{
    if (d == 0) {
        throw NotAdmissible("derived tangent has a zero denominator");
    }
    if (d < 0) {
        a = -a;
        b = -b;
        d = -d;
    }
    const i128 g = gcd128(gcd128(a, b), d);
    return QuadraticIrrational(narrow(a / g), narrow(b / g), c, narrow(d / g));
}

} // namespace

QuadraticIrrational::QuadraticIrrational(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d)
{
    if (b == 0 || d == 0 || c <= 0 || is_perfect_square(c)) {
        throw InvalidTangent(fmt::format(
            "({} + {}*sqrt({}))/{} is not a quadratic irrational: need b != 0, d != 0, "
            "c > 0 and c not a perfect square",
            a, b, c, d));
    }
}

double QuadraticIrrational::value() const
{
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(c_))) /
           static_cast<double>(d_);
}

double QuadraticIrrational::angle() const
{
    const double theta = std::atan(value());
    return theta > 0.0 ? theta : theta + std::numbers::pi;
}

QuadraticIrrational default_angle() { return QuadraticIrrational(1, 1, 2, 1); }

AdmissibleTangents check_admissible(const QuadraticIrrational& q)
{
    const i128 a = q.a();
    const i128 b = q.b();
    const i128 c = q.c();
    const i128 d = q.d();
    // tan(alpha - pi/2) = -cot(alpha) = (da - bd sqrt c) / (a^2 - b^2 c)
    const i128 den_half = a * a - b * b * c;
    // tan(alpha - 3pi/4) = ((d-a)^2 + b^2 c + 2bd sqrt c) / ((d-a)^2 - b^2 c)
    const i128 dma = d - a;
    const i128 den_three_quarter = dma * dma - b * b * c;
    if (den_half == 0 || den_three_quarter == 0) {
        throw NotAdmissible("tangent is not admissible: a derived denominator vanishes");
    }
    return {reduced(a, b, q.c(), d), reduced(d * a, -b * d, q.c(), den_half),
            reduced(dma * dma + b * b * c, 2 * b * d, q.c(), den_three_quarter)};
}

double angle_radians(const LatticeAngle& angle)
{
    if (const auto* q = std::get_if<QuadraticIrrational>(&angle)) {
        return q->angle();
    }
    return std::get<RawAngle>(angle).radians;
}

Point shift_from_seed(std::uint64_t seed)
{
    CounterRng rng(hash_combine(seed, 0x5A1F7ULL));
    const double sx = rng.next_unit() - 0.5;
    const double sy = rng.next_unit() - 0.5;
    return {sx, sy};
}

std::vector<Point> rotated_grid(const LatticeConfig& cfg, Point shift)
{
    const double two_n = 2.0 * static_cast<double>(cfg.n);
    const auto half_width = static_cast<int>(std::ceil(std::sqrt(two_n))) + 1;
    const double scale = 1.0 / std::sqrt(two_n);
    const double alpha = angle_radians(cfg.angle);
    const double cs = std::cos(alpha);
    const double sn = std::sin(alpha);
    std::vector<Point> grid;
    grid.reserve(static_cast<std::size_t>(2 * half_width + 1) * static_cast<std::size_t>(2 * half_width + 1));
    for (int i = -half_width; i <= half_width; ++i) {
        for (int j = -half_width; j <= half_width; ++j) {
            const double x = (i + shift.x) * scale;
            const double y = (j + shift.y) * scale;
            grid.push_back({cs * x - sn * y, sn * x + cs * y});
        }
    }
    return grid;
}

namespace {

void trim_to(std::vector<Point>& pts, std::size_t n)
{
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return pts[l].x < pts[r].x || (pts[l].x == pts[r].x && pts[l].y < pts[r].y);
    });
    std::vector<bool> drop(pts.size(), false);
    for (std::size_t k = n; k < order.size(); ++k) {
        drop[order[k]] = true;
    }
    std::vector<Point> kept;
    kept.reserve(n);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (!drop[k]) {
            kept.push_back(pts[k]);
        }
    }
    pts = std::move(kept);
}

void pad_to(std::vector<Point>& pts, std::size_t n, const Triangle& r)
{
    for (std::uint64_t i = 0; pts.size() < n; ++i) {
        const Point p = vdc_point(r, i);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
            pts.push_back(p);
        }
    }
}

} // namespace

SampleSet kronecker_lattice(const LatticeConfig& cfg)
{
    if (cfg.n < 2) {
        throw OutOfRange(fmt::format("lattice target size must exceed 1, got {}", cfg.n));
    }
    Point shift{};
    if (cfg.shift) {
        shift = *cfg.shift;
    } else if (cfg.random_shift) {
        shift = shift_from_seed(cfg.seed.value_or(0));
    }
    if (!(shift.x >= -0.5 && shift.x < 0.5 && shift.y >= -0.5 && shift.y < 0.5)) {
        throw OutOfRange(fmt::format("lattice shift ({}, {}) outside [-1/2, 1/2)^2", shift.x, shift.y));
    }
    const Triangle r = reference_triangle(ReferenceTriangle::right_unit);
    std::vector<Point> pts;
    for (const Point& p : rotated_grid(cfg, shift)) {
        if (classify(r, p, 1e-12).tag != FaceTag::outside) {
            pts.push_back(p);
        }
    }
    if (cfg.exact_count) {
        if (pts.size() > cfg.n) {
            trim_to(pts, cfg.n);
        } else if (pts.size() < cfg.n) {
            pad_to(pts, cfg.n, r);
        }
    }
    const bool unsafe = std::holds_alternative<RawAngle>(cfg.angle);
    std::string meta = fmt::format("lattice n={} alpha={:.17g}{} shift=({:.17g},{:.17g}){}", cfg.n,
                                   angle_radians(cfg.angle), unsafe ? " unsafe-angle" : "", shift.x,
                                   shift.y, cfg.exact_count ? " exact-count" : "");
    return SampleSet{r, std::move(pts), std::move(meta)};
}

SampleSet kronecker_on_triangle(const LatticeConfig& cfg, const Triangle& target)
{
    const Triangle checked = make_triangle(target.a(), target.b(), target.c());
    SampleSet base = kronecker_lattice(cfg);
    const AffineMap m = affine_map(base.domain, checked);
    for (Point& p : base.points) {
        p = apply(m, p);
    }
    base.domain = target;
    return base;
}

} // namespace triqmc
