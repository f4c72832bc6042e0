#pragma once

#include "triqmc/geometry.hpp"
#include "triqmc/sample_set.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace triqmc {

/// Base-4 digits, least significant first. Empty for 0.
using DigitString = std::vector<std::uint8_t>;

DigitString base4_digits(std::uint64_t i);
std::uint64_t from_base4_digits(std::span<const std::uint8_t> digits);

/// Digit 0 is the central (inverted) subtriangle; 1, 2, 3 are the corner
/// subtriangles at A, B and C:
///   T(0) = Δ((B+C)/2, (A+C)/2, (A+B)/2)
///   T(1) = Δ(A, (A+B)/2, (A+C)/2)
///   T(2) = Δ((B+A)/2, B, (B+C)/2)
///   T(3) = Δ((C+A)/2, (C+B)/2, C)
Triangle child_triangle(const Triangle& t, int digit);

/// Left fold of child_triangle over the digits.
Triangle descend(const Triangle& t, std::span<const std::uint8_t> digits);

/// Centroid of descend(t, base4_digits(i)); i = 0 gives the centroid of t.
Point vdc_point(const Triangle& t, std::uint64_t i);

/// Points vdc_point(t, start), ..., vdc_point(t, start + n - 1).
SampleSet vdc_sequence(const Triangle& t, std::size_t n, std::uint64_t start = 0);

/// Address of the depth-`depth` subdivision cell containing p, as the digit
/// string that descend() would follow. Shared edges go to the corner cells
/// (1 before 2 before 3), so corner cells are closed and the central cell
/// is open.
DigitString locate_cell(const Triangle& t, Point p, int depth);

struct ScrambleSeed {
    std::uint64_t seed = 0;
    /// Number of base-4 digits randomized.
    int depth = 16;
};

enum class LeafMode {
    /// Point is the centroid of the scrambled depth-M cell.
    centroid,
    /// Point is uniform inside the scrambled depth-M cell.
    uniform_leaf,
};

/// Random permutation of {0,1,2,3} attached to the digit-tree node reached by
/// `prefix` (the first `level` original digits, encoded little-endian).
std::array<std::uint8_t, 4> node_permutation(std::uint64_t seed, int level, std::uint64_t prefix);

/// First `seed.depth` digits of i after nested uniform scrambling. Digits of
/// i beyond its length are zeros and are scrambled like any other digit.
DigitString scramble_digits(std::uint64_t i, const ScrambleSeed& seed);

/// Throws DepthTooSmall unless 4^depth >= n and depth <= 32.
SampleSet scrambled_vdc(const Triangle& t, std::size_t n, const ScrambleSeed& seed,
                        LeafMode mode = LeafMode::centroid);

} // namespace triqmc
