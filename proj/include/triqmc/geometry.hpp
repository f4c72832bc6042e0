#pragma once

#include <array>
#include <cstdint>

namespace triqmc {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point p);

enum class Corner : std::uint8_t { A = 0, B = 1, C = 2 };

char corner_name(Corner c);

/// Labeled triangle Δ(A,B,C). Corner order matters: subdivision labels and
/// discrepancy anchors are defined relative to it.
class Triangle {
public:
    const Point& a() const { return corners_[0]; }
    const Point& b() const { return corners_[1]; }
    const Point& c() const { return corners_[2]; }
    const Point& corner(Corner k) const { return corners_[static_cast<int>(k)]; }
    const std::array<Point, 3>& corners() const { return corners_; }

    /// Twice the signed area, cross(B-A, C-A).
    double signed_area2() const;
    double area() const;
    double diameter() const;
    Point centroid() const;

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    friend Triangle make_triangle(Point, Point, Point);
    friend Triangle make_triangle_unchecked(Point, Point, Point);
    explicit Triangle(std::array<Point, 3> corners) : corners_(corners) {}

    std::array<Point, 3> corners_;
};

/// Throws DegenerateTriangle when |cross(b-a, c-a)| <= 1e-12 * diameter^2.
Triangle make_triangle(Point a, Point b, Point c);

/// Skips the degeneracy check. Used for subtriangles of an already valid
/// triangle, whose relative area is fixed.
Triangle make_triangle_unchecked(Point a, Point b, Point c);

enum class ReferenceTriangle { equilateral_unit_area, pillards_cools, right_unit };

/// equilateral_unit_area: A=(0,0), B=(l,0), C=(l/2, l*sqrt(3)/2) with l = 2/3^(1/4).
/// pillards_cools: (0,0),(0,1),(1,1).  right_unit: (0,0),(0,1),(1,0).
Triangle reference_triangle(ReferenceTriangle kind);

struct Barycentric {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;

    double operator[](Corner k) const
    {
        return k == Corner::A ? w1 : (k == Corner::B ? w2 : w3);
    }
    double min() const;
};

/// w3 is computed as 1 - w1 - w2 so the weights sum to one exactly.
Barycentric to_barycentric(const Triangle& t, Point p);
Point from_barycentric(const Triangle& t, const Barycentric& w);

struct AffineMap {
    // p -> linear * p + offset, linear stored row-major.
    std::array<double, 4> linear{1.0, 0.0, 0.0, 1.0};
    Point offset{};

    double determinant() const { return linear[0] * linear[3] - linear[1] * linear[2]; }
};

/// Map taking src's corners onto dst's corners, label by label.
AffineMap affine_map(const Triangle& src, const Triangle& dst);
Point apply(const AffineMap& m, Point p);
Triangle apply(const AffineMap& m, const Triangle& t);

enum class FaceTag : std::uint8_t { outside, vertex, edge, interior };

struct FaceClass {
    FaceTag tag = FaceTag::outside;
    // Dimension of the smallest containing face; -1 when outside.
    int dimension = -1;
};

double default_classify_tolerance(const Triangle& t);

/// Vertex test precedes the edge test, so the reported face has the
/// smallest possible dimension.
FaceClass classify(const Triangle& t, Point p, double tol);
FaceClass classify(const Triangle& t, Point p);

/// Relative area vol(P ∩ T)/vol(T) of the corner-anchored parallelogram
/// whose sides cover fractions t_frac and u_frac of the two adjacent edges:
///   2 t u - max(0, t + u - 1)^2.
double corner_box_fraction(double t_frac, double u_frac);

} // namespace triqmc
