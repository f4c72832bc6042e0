#include "triqmc/integrands.hpp"

#include "triqmc/errors.hpp"
#include "triqmc/vdc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace triqmc {

namespace {

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

// Integer powers with exact zero/one handling.
double ipow(double x, int e)
{
    double r = 1.0;
    for (int k = 0; k < e; ++k) {
        r *= x;
    }
    return r;
}

void accumulate_centroids(const Triangle& t, const std::function<double(Point)>& f, int depth, double& sum)
{
    if (depth == 0) {
        sum += f(t.centroid());
        return;
    }
    for (int d = 0; d < 4; ++d) {
        accumulate_centroids(child_triangle(t, d), f, depth - 1, sum);
    }
}

using Polygon = std::vector<Point>;

// Sutherland-Hodgman against one half-plane dot(p - origin, normal) <= 0.
Polygon clip(const Polygon& poly, Point origin, Point normal, bool keep_below)
{
    auto side = [&](Point p) {
        const double s = dot(p - origin, normal);
        return keep_below ? s : -s;
    };
    Polygon out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point cur = poly[i];
        const Point nxt = poly[(i + 1) % poly.size()];
        const double sc = side(cur);
        const double sn = side(nxt);
        if (sc <= 0.0) {
            out.push_back(cur);
        }
        if ((sc < 0.0 && sn > 0.0) || (sc > 0.0 && sn < 0.0)) {
            const double h = sc / (sc - sn);
            out.push_back(cur + h * (nxt - cur));
        }
    }
    return out;
}

// Signed area and area-weighted centroid of a simple polygon.
struct Moments {
    double area = 0.0;
    Point centroid{};
};

Moments moments(const Polygon& poly)
{
    double a2 = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i];
        const Point q = poly[(i + 1) % poly.size()];
        const double c = cross(p, q);
        a2 += c;
        cx += (p.x + q.x) * c;
        cy += (p.y + q.y) * c;
    }
    Moments m;
    m.area = 0.5 * std::abs(a2);
    if (a2 != 0.0) {
        m.centroid = {cx / (3.0 * a2), cy / (3.0 * a2)};
    }
    return m;
}

Polygon as_polygon(const Triangle& t) { return {t.a(), t.b(), t.c()}; }

// Line used by the halfplane and ridge integrands: through the centroid,
// normal at angle 1 radian, which is not aligned with any lattice direction.
Point cut_normal() { return {std::cos(1.0), std::sin(1.0)}; }

double inradius(const Triangle& t)
{
    const double perimeter = norm(t.b() - t.a()) + norm(t.c() - t.b()) + norm(t.a() - t.c());
    return 2.0 * t.area() / perimeter;
}

bool parse_monomial(std::string_view name, int& p, int& q, int& r)
{
    if (name.size() != 10 || name.substr(0, 5) != "bary_" || name[6] != '_' || name[8] != '_') {
        return false;
    }
    auto digit = [](char ch) { return ch >= '0' && ch <= '9' ? ch - '0' : -1; };
    p = digit(name[5]);
    q = digit(name[7]);
    r = digit(name[9]);
    const int total = p + q + r;
    return p >= 0 && q >= 0 && r >= 0 && total >= 1 && total <= 4;
}

} // namespace

double monomial_integral(const Triangle& t, int p, int q, int r)
{
    return 2.0 * t.area() * factorial(p) * factorial(q) * factorial(r) / factorial(p + q + r + 2);
}

double centroid_rule(const Triangle& t, const std::function<double(Point)>& f, int depth)
{
    double sum = 0.0;
    accumulate_centroids(t, f, depth, sum);
    return t.area() * sum / std::ldexp(1.0, 2 * depth);
}

double refined_integral(const Triangle& t, const std::function<double(Point)>& f)
{
    const double i8 = centroid_rule(t, f, 8);
    const double i9 = centroid_rule(t, f, 9);
    const double i10 = centroid_rule(t, f, 10);
    const double r9 = (4.0 * i9 - i8) / 3.0;
    const double r10 = (4.0 * i10 - i9) / 3.0;
    if (!(std::abs(r10 - r9) <= 1e-9)) {
        throw Error(fmt::format("refined integral did not settle: {:.17g} vs {:.17g}", r9, r10));
    }
    return r10;
}

double halfplane_area(const Triangle& t, Point origin, Point normal)
{
    return moments(clip(as_polygon(t), origin, normal, true)).area;
}

std::vector<std::string> builtin_integrand_names()
{
    std::vector<std::string> names{"const1"};
    for (int total = 1; total <= 4; ++total) {
        for (int p = total; p >= 0; --p) {
            for (int q = total - p; q >= 0; --q) {
                names.push_back(fmt::format("bary_{}_{}_{}", p, q, total - p - q));
            }
        }
    }
    for (const char* n : {"cos2pi", "ridge", "halfplane", "disc"}) {
        names.emplace_back(n);
    }
    return names;
}

Integrand make_integrand(std::string_view name, const Triangle& domain)
{
    Integrand f;
    f.name = std::string(name);
    if (name == "const1") {
        f.description = "f = 1; exact = vol";
        f.eval = [](Point) { return 1.0; };
        f.exact_integral = domain.area();
        return f;
    }
    int p = 0;
    int q = 0;
    int r = 0;
    if (parse_monomial(name, p, q, r)) {
        f.description = fmt::format("f = wA^{} wB^{} wC^{}; exact = 2 vol p!q!r!/(p+q+r+2)!", p, q, r);
        f.eval = [domain, p, q, r](Point x) {
            const Barycentric w = to_barycentric(domain, x);
            return ipow(w.w1, p) * ipow(w.w2, q) * ipow(w.w3, r);
        };
        f.exact_integral = monomial_integral(domain, p, q, r);
        return f;
    }
    if (name == "cos2pi") {
        f.description = "f = cos(2 pi (x + y)); exact = Richardson-extrapolated centroid rule, depths 8-10";
        f.eval = [](Point x) { return std::cos(2.0 * std::numbers::pi * (x.x + x.y)); };
        f.exact_integral = refined_integral(domain, f.eval);
        return f;
    }
    const Point g = domain.centroid();
    const Point n = cut_normal();
    if (name == "ridge") {
        f.description = "f = |dot(p - centroid, (cos 1, sin 1))|; exact = piecewise-linear moments of clipped polygons";
        f.eval = [g, n](Point x) { return std::abs(dot(x - g, n)); };
        double exact = 0.0;
        for (bool below : {true, false}) {
            const Moments m = moments(clip(as_polygon(domain), g, n, below));
            exact += m.area * std::abs(dot(m.centroid - g, n));
        }
        f.exact_integral = exact;
        f.smoothness = Smoothness::lipschitz;
        return f;
    }
    if (name == "halfplane") {
        f.description = "f = 1{dot(p - centroid, (cos 1, sin 1)) <= 0}; exact = clipped polygon area";
        f.eval = [g, n](Point x) { return dot(x - g, n) <= 0.0 ? 1.0 : 0.0; };
        f.exact_integral = halfplane_area(domain, g, n);
        f.smoothness = Smoothness::discontinuous;
        return f;
    }
    if (name == "disc") {
        double radius = 0.2 * std::sqrt(domain.area());
        if (radius > inradius(domain)) {
            radius = 0.5 * inradius(domain);
        }
        f.description = fmt::format("f = 1{{|p - centroid| <= {:.17g}}}; exact = pi r^2 (disc inside domain)", radius);
        f.eval = [g, radius](Point x) { return norm(x - g) <= radius ? 1.0 : 0.0; };
        f.exact_integral = std::numbers::pi * radius * radius;
        f.smoothness = Smoothness::discontinuous;
        return f;
    }
    std::string valid;
    for (const std::string& v : builtin_integrand_names()) {
        valid += valid.empty() ? v : ", " + v;
    }
    throw UnknownIntegrand(fmt::format("unknown integrand '{}'; available: {}", name, valid));
}

std::vector<Integrand> builtin_integrands(const Triangle& domain)
{
    std::vector<Integrand> out;
    for (const std::string& name : builtin_integrand_names()) {
        out.push_back(make_integrand(name, domain));
    }
    return out;
}

} // namespace triqmc
