#include "triqmc/geometry.hpp"

#include "triqmc/errors.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace triqmc {

double norm(Point p) { return std::hypot(p.x, p.y); }

char corner_name(Corner c) { return "ABC"[static_cast<int>(c)]; }

double Triangle::signed_area2() const { return cross(b() - a(), c() - a()); }

double Triangle::area() const { return 0.5 * std::abs(signed_area2()); }

double Triangle::diameter() const
{
    return std::max({norm(b() - a()), norm(c() - b()), norm(a() - c())});
}

Point Triangle::centroid() const
{
    return {(a().x + b().x + c().x) / 3.0, (a().y + b().y + c().y) / 3.0};
}

Triangle make_triangle(Point a, Point b, Point c)
{
    for (Point p : {a, b, c}) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw DegenerateTriangle("triangle corner has a non-finite coordinate");
        }
    }
    Triangle t({a, b, c});
    const double diam = t.diameter();
    if (!(std::abs(t.signed_area2()) > 1e-12 * diam * diam)) {
        throw DegenerateTriangle(fmt::format(
            "degenerate triangle ({},{}) ({},{}) ({},{})", a.x, a.y, b.x, b.y, c.x, c.y));
    }
    return t;
}

Triangle make_triangle_unchecked(Point a, Point b, Point c) { return Triangle({a, b, c}); }

Triangle reference_triangle(ReferenceTriangle kind)
{
    switch (kind) {
    case ReferenceTriangle::equilateral_unit_area: {
        const double side = 2.0 / std::pow(3.0, 0.25);
        return make_triangle({0.0, 0.0}, {side, 0.0}, {0.5 * side, 0.5 * std::sqrt(3.0) * side});
    }
    case ReferenceTriangle::pillards_cools:
        return make_triangle({0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0});
    case ReferenceTriangle::right_unit:
        return make_triangle({0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0});
    }
    throw OutOfRange("unknown reference triangle");
}

double Barycentric::min() const { return std::min({w1, w2, w3}); }

Barycentric to_barycentric(const Triangle& t, Point p)
{
    const Point e1 = t.b() - t.a();
    const Point e2 = t.c() - t.a();
    const Point r = p - t.a();
    const double det = cross(e1, e2);
    const double w2 = cross(r, e2) / det;
    const double w3 = cross(e1, r) / det;
    return {1.0 - w2 - w3, w2, w3};
}

Point from_barycentric(const Triangle& t, const Barycentric& w)
{
    return {w.w1 * t.a().x + w.w2 * t.b().x + w.w3 * t.c().x,
            w.w1 * t.a().y + w.w2 * t.b().y + w.w3 * t.c().y};
}

AffineMap affine_map(const Triangle& src, const Triangle& dst)
{
    const Point s1 = src.b() - src.a();
    const Point s2 = src.c() - src.a();
    const double det = cross(s1, s2);
    const double diam = src.diameter();
    if (!(std::abs(det) > 1e-12 * diam * diam)) {
        throw DegenerateTriangle("affine_map: degenerate source triangle");
    }
    const Point d1 = dst.b() - dst.a();
    const Point d2 = dst.c() - dst.a();
    // linear = [d1 d2] * inverse([s1 s2])
    const double i00 = s2.y / det;
    const double i01 = -s2.x / det;
    const double i10 = -s1.y / det;
    const double i11 = s1.x / det;
    AffineMap m;
    m.linear = {d1.x * i00 + d2.x * i10, d1.x * i01 + d2.x * i11,
                d1.y * i00 + d2.y * i10, d1.y * i01 + d2.y * i11};
    const Point la = {m.linear[0] * src.a().x + m.linear[1] * src.a().y,
                      m.linear[2] * src.a().x + m.linear[3] * src.a().y};
    m.offset = dst.a() - la;
    return m;
}

Point apply(const AffineMap& m, Point p)
{
    return {m.linear[0] * p.x + m.linear[1] * p.y + m.offset.x,
            m.linear[2] * p.x + m.linear[3] * p.y + m.offset.y};
}

Triangle apply(const AffineMap& m, const Triangle& t)
{
    return make_triangle(apply(m, t.a()), apply(m, t.b()), apply(m, t.c()));
}

namespace {

double segment_distance(Point p, Point s0, Point s1)
{
    const Point d = s1 - s0;
    const double len2 = dot(d, d);
    double h = len2 > 0.0 ? dot(p - s0, d) / len2 : 0.0;
    h = std::clamp(h, 0.0, 1.0);
    return norm(p - (s0 + h * d));
}

} // namespace

double default_classify_tolerance(const Triangle& t) { return 1e-9 * t.diameter(); }

FaceClass classify(const Triangle& t, Point p, double tol)
{
    for (const Point& c : t.corners()) {
        if (norm(p - c) <= tol) {
            return {FaceTag::vertex, 0};
        }
    }
    const auto& v = t.corners();
    for (int k = 0; k < 3; ++k) {
        if (segment_distance(p, v[k], v[(k + 1) % 3]) <= tol) {
            return {FaceTag::edge, 1};
        }
    }
    if (to_barycentric(t, p).min() > 0.0) {
        return {FaceTag::interior, 2};
    }
    return {FaceTag::outside, -1};
}

FaceClass classify(const Triangle& t, Point p) { return classify(t, p, default_classify_tolerance(t)); }

double corner_box_fraction(double t_frac, double u_frac)
{
    if (!(t_frac >= 0.0 && t_frac <= 1.0 && u_frac >= 0.0 && u_frac <= 1.0)) {
        throw OutOfRange(fmt::format("corner_box_fraction: ({}, {}) outside [0,1]^2", t_frac, u_frac));
    }
    const double excess = std::max(0.0, t_frac + u_frac - 1.0);
    return 2.0 * t_frac * u_frac - excess * excess;
}

} // namespace triqmc
