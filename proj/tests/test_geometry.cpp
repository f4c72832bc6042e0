#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triqmc/errors.hpp"
#include "triqmc/geometry.hpp"

#include <cmath>
#include <random>

using namespace triqmc;

namespace {

Triangle random_triangle(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (;;) {
        try {
            const Point a{coord(rng), coord(rng)};
            const Point b{coord(rng), coord(rng)};
            const Point c{coord(rng), coord(rng)};
            const Triangle t = make_triangle(a, b, c);
            if (t.area() > 0.05 * t.diameter() * t.diameter()) {
                return t;
            }
        } catch (const DegenerateTriangle&) {
        }
    }
}

// Cartesian membership in the parallelogram C + s(A-C) + r(B-C), s in [0,t], r in [0,u],
// solved without barycentric coordinates of the triangle.
bool in_parallelogram(Point p, Point anchor, Point e1, Point e2, double t, double u)
{
    const double det = cross(e1, e2);
    const Point d = p - anchor;
    const double s = cross(d, e2) / det;
    const double r = cross(e1, d) / det;
    return s >= 0.0 && s <= t && r >= 0.0 && r <= u;
}

// Rejection-sampling estimate of vol(P ∩ T)/vol(T) on the unit right triangle.
struct McEstimate {
    double value;
    double stderr_;
};

McEstimate mc_corner_fraction(double t, double u, std::size_t draws, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Point a{0.0, 0.0};
    const Point b{1.0, 0.0};
    const Point c{0.0, 1.0};
    std::size_t inside = 0;
    std::size_t hits = 0;
    while (inside < draws) {
        const Point p{unit(rng), unit(rng)};
        if (p.x + p.y > 1.0) {
            continue;
        }
        ++inside;
        if (in_parallelogram(p, c, a - c, b - c, t, u)) {
            ++hits;
        }
    }
    const double f = static_cast<double>(hits) / static_cast<double>(draws);
    return {f, std::sqrt(f * (1.0 - f) / static_cast<double>(draws))};
}

} // namespace

TEST_CASE("make_triangle")
{
    const Triangle r = make_triangle({0, 0}, {1, 0}, {0, 1});
    CHECK(r.area() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(make_triangle({0, 0}, {1, 0}, {2, 0}), DegenerateTriangle);
    const Triangle e = make_triangle({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0});
    CHECK(e.area() == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-15));

    SUBCASE("tolerance is relative to the squared diameter")
    {
        const double s = 1e-8;
        CHECK_NOTHROW(make_triangle({0, 0}, {s, 0}, {0, s}));
        CHECK_NOTHROW(make_triangle({0, 0}, {1e8, 0}, {0, 1e8}));
        CHECK_THROWS_AS(make_triangle({0, 0}, {1, 0}, {0.5, 1e-14}), DegenerateTriangle);
    }
}

TEST_CASE("reference triangles")
{
    const Triangle pc = reference_triangle(ReferenceTriangle::pillards_cools);
    CHECK(pc.a() == Point{0, 0});
    CHECK(pc.b() == Point{0, 1});
    CHECK(pc.c() == Point{1, 1});
    const Triangle r = reference_triangle(ReferenceTriangle::right_unit);
    CHECK(r.a() == Point{0, 0});
    CHECK(r.b() == Point{0, 1});
    CHECK(r.c() == Point{1, 0});
    const Triangle e = reference_triangle(ReferenceTriangle::equilateral_unit_area);
    CHECK(std::abs(e.area() - 1.0) <= 1e-12);
    CHECK(norm(e.b() - e.a()) == doctest::Approx(2.0 / std::pow(3.0, 0.25)));
}

TEST_CASE("barycentric coordinates")
{
    const Triangle r = make_triangle({0, 0}, {1, 0}, {0, 1});
    const Barycentric g = to_barycentric(r, r.centroid());
    CHECK(g.w1 == doctest::Approx(1.0 / 3.0));
    CHECK(g.w2 == doctest::Approx(1.0 / 3.0));
    CHECK(g.w3 == doctest::Approx(1.0 / 3.0));

    const Barycentric a = to_barycentric(r, r.a());
    CHECK(a.w1 == 1.0);
    CHECK(a.w2 == 0.0);
    CHECK(a.w3 == 0.0);

    // Hand solution of 0.25 = w2 * 1, 0.25 = w3 * 1.
    const Barycentric q = to_barycentric(r, {0.25, 0.25});
    CHECK(q.w1 == doctest::Approx(0.5));
    CHECK(q.w2 == doctest::Approx(0.25));
    CHECK(q.w3 == doctest::Approx(0.25));

    CHECK(from_barycentric(r, {1, 0, 0}) == r.a());
    CHECK(from_barycentric(r, {0, 0, 1}) == r.c());
    const Point c = from_barycentric(r, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK(c.x == doctest::Approx(1.0 / 3.0));
    CHECK(c.y == doctest::Approx(1.0 / 3.0));

    // Outside points get negative weights.
    CHECK(to_barycentric(r, {1, 1}).w1 < 0.0);
}

TEST_CASE("barycentric round trip on random triangles")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(-0.5, 1.5);
    for (int k = 0; k < 1000; ++k) {
        const Triangle t = random_triangle(rng);
        const Barycentric w{unit(rng), unit(rng), 0.0};
        const Point p = from_barycentric(t, {w.w1, w.w2, 1.0 - w.w1 - w.w2});
        const Barycentric back = to_barycentric(t, p);
        CHECK(back.w1 == 1.0 - back.w2 - back.w3);
        const Point again = from_barycentric(t, back);
        CHECK(norm(again - p) <= 1e-10 * t.diameter());
    }
}

TEST_CASE("affine maps")
{
    const Triangle r = reference_triangle(ReferenceTriangle::right_unit);
    const Triangle e = reference_triangle(ReferenceTriangle::equilateral_unit_area);

    const AffineMap id = affine_map(e, e);
    CHECK(id.linear[0] == doctest::Approx(1.0));
    CHECK(id.linear[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(id.linear[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(id.linear[3] == doctest::Approx(1.0));

    const AffineMap m = affine_map(r, e);
    const Point g = apply(m, r.centroid());
    CHECK(norm(g - e.centroid()) <= 1e-14);
    for (int k = 0; k < 3; ++k) {
        CHECK(norm(apply(m, r.corners()[k]) - e.corners()[k]) <= 1e-14);
    }

    // (x1, x2) in R goes to A + (C - A) x1 + (B - A) x2.
    const Triangle target = make_triangle({1, 2}, {-3, 0.5}, {4, 7});
    const AffineMap to_target = affine_map(r, target);
    const Point p{0.3, 0.45};
    const Point expected = target.a() + p.x * (target.c() - target.a()) + p.y * (target.b() - target.a());
    CHECK(norm(apply(to_target, p) - expected) <= 1e-13);

    CHECK_THROWS_AS(affine_map(make_triangle_unchecked({0, 0}, {1, 1}, {2, 2}), e), DegenerateTriangle);
}

TEST_CASE("barycentric coordinates are affine invariant")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(-0.2, 1.2);
    for (int k = 0; k < 200; ++k) {
        const Triangle src = random_triangle(rng);
        const Triangle dst = random_triangle(rng);
        const AffineMap m = affine_map(src, dst);
        const Point p = from_barycentric(src, {unit(rng), unit(rng), 0.0});
        const Barycentric a = to_barycentric(src, p);
        const Barycentric b = to_barycentric(dst, apply(m, p));
        CHECK(std::abs(a.w1 - b.w1) <= 1e-10);
        CHECK(std::abs(a.w2 - b.w2) <= 1e-10);
        CHECK(std::abs(a.w3 - b.w3) <= 1e-10);
    }
}

TEST_CASE("classify")
{
    const Triangle t = make_triangle({0, 0}, {2, 0}, {0, 2});
    CHECK(classify(t, t.centroid()).tag == FaceTag::interior);
    CHECK(classify(t, t.centroid()).dimension == 2);
    CHECK(classify(t, t.a()).tag == FaceTag::vertex);
    CHECK(classify(t, t.a()).dimension == 0);
    CHECK(classify(t, {1, 0}).tag == FaceTag::edge);
    CHECK(classify(t, {1, 0}).dimension == 1);
    CHECK(classify(t, {1, 1}).tag == FaceTag::edge);
    CHECK(classify(t, {3, 3}).tag == FaceTag::outside);
    CHECK(classify(t, {3, 3}).dimension == -1);
    // Within tolerance of a corner beats within tolerance of an edge.
    CHECK(classify(t, {1e-3, 0}, 1e-2).tag == FaceTag::vertex);
    CHECK(classify(t, {1, -1e-3}, 1e-2).tag == FaceTag::edge);
    CHECK(classify(t, {1, -1e-3}, 1e-6).tag == FaceTag::outside);
}

TEST_CASE("corner_box_fraction closed form")
{
    CHECK(corner_box_fraction(1, 1) == 1.0);
    CHECK(corner_box_fraction(1.0 / 3, 1.0 / 3) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(corner_box_fraction(0.75, 0.75) == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
    CHECK(corner_box_fraction(0, 0.7) == 0.0);
    CHECK_THROWS_AS(corner_box_fraction(-0.1, 0.5), OutOfRange);
    CHECK_THROWS_AS(corner_box_fraction(0.5, 1.01), OutOfRange);
}

TEST_CASE("corner_box_fraction is symmetric and monotone on a 101x101 grid")
{
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double t = i / 100.0;
            const double u = j / 100.0;
            const double v = corner_box_fraction(t, u);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(v == corner_box_fraction(u, t));
            if (i > 0) {
                CHECK(v >= corner_box_fraction((i - 1) / 100.0, u));
            }
            if (j > 0) {
                CHECK(v >= corner_box_fraction(t, (j - 1) / 100.0));
            }
        }
    }
}

TEST_CASE("corner_box_fraction agrees with a Monte Carlo oracle")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const McEstimate third = mc_corner_fraction(1.0 / 3, 1.0 / 3, 1'000'000, rng);
    CHECK(std::abs(third.value - 2.0 / 9.0) <= 4.0 * third.stderr_);
    const McEstimate three_quarters = mc_corner_fraction(0.75, 0.75, 1'000'000, rng);
    CHECK(std::abs(three_quarters.value - 7.0 / 8.0) <= 4.0 * three_quarters.stderr_);

    for (int k = 0; k < 20; ++k) {
        const double t = unit(rng);
        const double u = unit(rng);
        const McEstimate est = mc_corner_fraction(t, u, 1'000'000, rng);
        INFO("t=", t, " u=", u);
        CHECK(std::abs(est.value - corner_box_fraction(t, u)) <= 4.0 * est.stderr_ + 1e-12);
    }
}
