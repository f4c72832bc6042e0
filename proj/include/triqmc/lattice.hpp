#pragma once

#include "triqmc/geometry.hpp"
#include "triqmc/sample_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace triqmc {

/// tan(alpha) = (a + b*sqrt(c)) / d with b != 0, d != 0, c > 0 not a square.
class QuadraticIrrational {
public:
    /// Throws InvalidTangent when the constraints fail.
    QuadraticIrrational(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    double value() const;
    /// arctan(value) taken in (0, pi).
    double angle() const;

    friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

private:
    std::int64_t a_, b_, c_, d_;
};

/// tan(3*pi/8) = 1 + sqrt(2).
QuadraticIrrational default_angle();

/// tan(alpha), tan(alpha - pi/2), tan(alpha - 3pi/4), each reduced so that
/// d > 0 and gcd(a, b, d) = 1.
struct AdmissibleTangents {
    QuadraticIrrational tan_alpha;
    QuadraticIrrational tan_minus_half_pi;
    QuadraticIrrational tan_minus_three_quarter_pi;
};

/// Throws NotAdmissible if a derived denominator vanishes.
AdmissibleTangents check_admissible(const QuadraticIrrational& q);

/// Angle in radians that is not backed by a quadratic-irrational tangent.
/// Carries no discrepancy guarantee.
struct RawAngle {
    double radians = 0.0;
};

using LatticeAngle = std::variant<QuadraticIrrational, RawAngle>;

double angle_radians(const LatticeAngle& angle);

struct LatticeConfig {
    std::size_t n = 64;
    LatticeAngle angle = default_angle();
    /// Added to every integer grid point before scaling; components in [-1/2, 1/2).
    std::optional<Point> shift;
    /// Trim (lexicographically largest first) or pad (with vdc points) to n.
    bool exact_count = false;
    /// Draws the shift when `shift` is empty and `random_shift` is set.
    std::optional<std::uint64_t> seed;
    bool random_shift = false;
};

/// Uniform shift in [-1/2, 1/2)^2 derived from the seed.
Point shift_from_seed(std::uint64_t seed);

/// Rotated, scaled copy of Z^2 clipped to the closed right triangle
/// R = Δ((0,0), (0,1), (1,0)). Points are emitted in grid scan order.
SampleSet kronecker_lattice(const LatticeConfig& cfg);

/// kronecker_lattice mapped onto target by p -> A + (C-A) x + (B-A) y.
SampleSet kronecker_on_triangle(const LatticeConfig& cfg, const Triangle& target);

} // namespace triqmc

namespace triqmc {

/// Grid {-n..n}^2 with n = ceil(sqrt(2N)) + 1, shifted, scaled by
/// 1/sqrt(2N) and rotated anticlockwise, before any clipping.
std::vector<Point> rotated_grid(const LatticeConfig& cfg, Point shift);

} // namespace triqmc
