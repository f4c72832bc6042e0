#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triqmc/discrepancy.hpp"
#include "triqmc/errors.hpp"
#include "triqmc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace triqmc;

TEST_CASE("default angle")
{
    const QuadraticIrrational q = default_angle();
    CHECK(q == QuadraticIrrational(1, 1, 2, 1));
    CHECK(q.value() == doctest::Approx(2.41421356).epsilon(1e-9));
    CHECK(q.angle() == doctest::Approx(3.0 * std::numbers::pi / 8.0).epsilon(1e-15));
    CHECK_NOTHROW(check_admissible(q));
}

TEST_CASE("quadratic irrational constraints")
{
    CHECK_THROWS_AS(QuadraticIrrational(1, 0, 2, 1), InvalidTangent);
    CHECK_THROWS_AS(QuadraticIrrational(1, 1, 2, 0), InvalidTangent);
    CHECK_THROWS_AS(QuadraticIrrational(1, 1, 4, 1), InvalidTangent);
    CHECK_THROWS_AS(QuadraticIrrational(1, 1, 0, 1), InvalidTangent);
    CHECK_THROWS_AS(QuadraticIrrational(1, 1, -3, 1), InvalidTangent);
    CHECK_NOTHROW(QuadraticIrrational(3, -2, 5, 7));
    // 5pi/8 has tangent -(1 + sqrt 2).
    CHECK(QuadraticIrrational(-1, -1, 2, 1).angle() == doctest::Approx(5.0 * std::numbers::pi / 8.0));
}

TEST_CASE("derived tangents")
{
    const AdmissibleTangents t = check_admissible(default_angle());
    CHECK(t.tan_alpha == default_angle());
    // (1 - sqrt 2)/(1 - 2) = -1 + sqrt 2
    CHECK(t.tan_minus_half_pi == QuadraticIrrational(-1, 1, 2, 1));
    // (0 + 2 + 2 sqrt 2)/(0 - 2) = -1 - sqrt 2
    CHECK(t.tan_minus_three_quarter_pi == QuadraticIrrational(-1, -1, 2, 1));

    for (const QuadraticIrrational& q :
         {QuadraticIrrational(3, -2, 5, 7), QuadraticIrrational(-4, 1, 3, 2), QuadraticIrrational(0, 1, 7, -3)}) {
        const AdmissibleTangents d = check_admissible(q);
        const double a = double(q.a()), b = double(q.b()), c = double(q.c()), dd = double(q.d());
        const double r = std::sqrt(c);
        CHECK(d.tan_minus_half_pi.value() == doctest::Approx((dd * a - b * dd * r) / (a * a - b * b * c)));
        CHECK(d.tan_minus_three_quarter_pi.value() ==
              doctest::Approx(((dd - a) * (dd - a) + b * b * c + 2 * b * dd * r) / ((dd - a) * (dd - a) - b * b * c)));
        // Up to sign the first is cot(alpha).
        CHECK(std::abs(d.tan_minus_half_pi.value()) == doctest::Approx(1.0 / std::abs(q.value())));
        CHECK(d.tan_minus_half_pi.d() > 0);
    }
}

TEST_CASE("lattice at N = 64 and the default angle")
{
    LatticeConfig cfg;
    cfg.n = 64;
    const SampleSet ps = kronecker_lattice(cfg);
    // Golden count from the first run: the closed triangle keeps the origin.
    CHECK(ps.size() == 65);
    CHECK(std::abs(static_cast<double>(ps.size()) - 64.0) <= 4.0 * std::log(128.0));
    CHECK(std::find(ps.points.begin(), ps.points.end(), Point{0, 0}) != ps.points.end());
    CHECK(all_inside(ps));
    CHECK(ps.domain == reference_triangle(ReferenceTriangle::right_unit));
    CHECK_THROWS_AS(kronecker_lattice(LatticeConfig{1}), OutOfRange);
}

TEST_CASE("origin is kept for any angle without a shift")
{
    for (double a : {0.3, 1.0, 2.0, 3.0}) {
        LatticeConfig cfg;
        cfg.n = 50;
        cfg.angle = RawAngle{a};
        const SampleSet ps = kronecker_lattice(cfg);
        CHECK(std::find(ps.points.begin(), ps.points.end(), Point{0, 0}) != ps.points.end());
    }
}

TEST_CASE("angle pi/2 aligns points in columns")
{
    LatticeConfig cfg;
    cfg.n = 64;
    cfg.angle = RawAngle{std::numbers::pi / 2};
    const SampleSet ps = kronecker_lattice(cfg);
    const double spacing = 1.0 / std::sqrt(128.0);
    std::set<long> columns;
    for (const Point& p : ps.points) {
        const double k = p.x / spacing;
        CHECK(std::abs(k - std::round(k)) <= 1e-9);
        columns.insert(std::lround(k));
    }
    // Only floor(sqrt(2N)) + 1 distinct abscissae.
    CHECK(columns.size() == 12);
}

TEST_CASE("point count stays within 4 log(2N) of N")
{
    for (std::size_t n = 16; n <= 4096; n *= 2) {
        LatticeConfig cfg;
        cfg.n = n;
        const std::size_t count = kronecker_lattice(cfg).size();
        INFO("N = ", n, " count = ", count);
        CHECK(std::abs(static_cast<double>(count) - static_cast<double>(n)) <= 4.0 * std::log(2.0 * n));
    }
}

TEST_CASE("rotation is an isometry")
{
    LatticeConfig cfg;
    cfg.n = 40;
    const Point shift{0.125, -0.375};
    const std::vector<Point> rotated = rotated_grid(cfg, shift);
    LatticeConfig unrotated = cfg;
    unrotated.angle = RawAngle{0.0};
    const std::vector<Point> plain = rotated_grid(unrotated, shift);
    REQUIRE(rotated.size() == plain.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < plain.size(); i += 3) {
        for (std::size_t j = i + 1; j < plain.size(); j += 5) {
            worst = std::max(worst, std::abs(norm(rotated[i] - rotated[j]) - norm(plain[i] - plain[j])));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("random shifts")
{
    LatticeConfig cfg;
    cfg.n = 128;
    cfg.random_shift = true;
    cfg.seed = 99;
    CHECK(kronecker_lattice(cfg).points == kronecker_lattice(cfg).points);
    const Point s = shift_from_seed(99);
    CHECK(s.x >= -0.5);
    CHECK(s.x < 0.5);

    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        cfg.seed = seed;
        total += static_cast<double>(kronecker_lattice(cfg).size());
    }
    CHECK(std::abs(total / 200.0 - 128.0) <= 1.0);

    cfg.shift = Point{0.5, 0.0};
    CHECK_THROWS_AS(kronecker_lattice(cfg), OutOfRange);
}

TEST_CASE("exact count trims and pads deterministically")
{
    LatticeConfig cfg;
    cfg.n = 64;
    const SampleSet full = kronecker_lattice(cfg);
    cfg.exact_count = true;
    const SampleSet trimmed = kronecker_lattice(cfg);
    REQUIRE(trimmed.size() == 64);
    // The dropped point is the lexicographically largest one.
    const Point largest = *std::max_element(full.points.begin(), full.points.end(), [](Point l, Point r) {
        return l.x < r.x || (l.x == r.x && l.y < r.y);
    });
    CHECK(std::find(trimmed.points.begin(), trimmed.points.end(), largest) == trimmed.points.end());

    // Find a shifted lattice that falls short and pad it.
    LatticeConfig shifted;
    shifted.n = 64;
    shifted.random_shift = true;
    bool padded = false;
    for (std::uint64_t seed = 0; seed < 100 && !padded; ++seed) {
        shifted.seed = seed;
        shifted.exact_count = false;
        const SampleSet raw = kronecker_lattice(shifted);
        if (raw.size() >= 64) {
            continue;
        }
        shifted.exact_count = true;
        const SampleSet fixed = kronecker_lattice(shifted);
        CHECK(fixed.size() == 64);
        for (const Point& p : raw.points) {
            CHECK(std::find(fixed.points.begin(), fixed.points.end(), p) != fixed.points.end());
        }
        const std::set<std::pair<double, double>> distinct = [&] {
            std::set<std::pair<double, double>> s;
            for (const Point& p : fixed.points) {
                s.insert({p.x, p.y});
            }
            return s;
        }();
        CHECK(distinct.size() == 64);
        padded = true;
    }
    CHECK(padded);
}

TEST_CASE("mapping onto a target triangle")
{
    LatticeConfig cfg;
    cfg.n = 100;
    const SampleSet base = kronecker_lattice(cfg);
    const Triangle r = reference_triangle(ReferenceTriangle::right_unit);
    CHECK(kronecker_on_triangle(cfg, r).points == base.points);

    const Triangle target = make_triangle({1, 1}, {2, 4}, {-2, 3});
    const AffineMap m = affine_map(r, target);
    CHECK(norm(apply(m, {0, 0}) - target.a()) <= 1e-14);
    CHECK(norm(apply(m, {0, 1}) - target.b()) <= 1e-14);
    CHECK(norm(apply(m, {1, 0}) - target.c()) <= 1e-14);

    const SampleSet mapped = kronecker_on_triangle(cfg, target);
    CHECK(mapped.domain == target);
    REQUIRE(mapped.size() == base.size());
    CHECK(all_inside(mapped));
    CHECK(std::abs(parallelogram_discrepancy(mapped).value - parallelogram_discrepancy(base).value) <= 1e-9);
    CHECK_THROWS_AS(kronecker_on_triangle(cfg, make_triangle_unchecked({0, 0}, {1, 1}, {2, 2})),
                    DegenerateTriangle);
}
