#include "triqmc/vdc.hpp"

#include "triqmc/errors.hpp"
#include "triqmc/hashing.hpp"

#include <fmt/format.h>

namespace triqmc {

DigitString base4_digits(std::uint64_t i)
{
    DigitString digits;
    while (i > 0) {
        digits.push_back(static_cast<std::uint8_t>(i & 3U));
        i >>= 2;
    }
    return digits;
}

std::uint64_t from_base4_digits(std::span<const std::uint8_t> digits)
{
    std::uint64_t value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value = (value << 2) | *it;
    }
    return value;
}

namespace {

Point midpoint(Point p, Point q) { return 0.5 * (p + q); }

} // namespace

Triangle child_triangle(const Triangle& t, int digit)
{
    const Point a = t.a();
    const Point b = t.b();
    const Point c = t.c();
    switch (digit) {
    case 0:
        return make_triangle_unchecked(midpoint(b, c), midpoint(a, c), midpoint(a, b));
    case 1:
        return make_triangle_unchecked(a, midpoint(a, b), midpoint(a, c));
    case 2:
        return make_triangle_unchecked(midpoint(b, a), b, midpoint(b, c));
    case 3:
        return make_triangle_unchecked(midpoint(c, a), midpoint(c, b), c);
    default:
        throw BadDigit(fmt::format("base-4 digit out of range: {}", digit));
    }
}

Triangle descend(const Triangle& t, std::span<const std::uint8_t> digits)
{
    Triangle cur = t;
    for (std::uint8_t d : digits) {
        cur = child_triangle(cur, d);
    }
    return cur;
}

Point vdc_point(const Triangle& t, std::uint64_t i)
{
    const DigitString digits = base4_digits(i);
    return descend(t, digits).centroid();
}

SampleSet vdc_sequence(const Triangle& t, std::size_t n, std::uint64_t start)
{
    SampleSet ps{t, {}, fmt::format("vdc start={}", start)};
    ps.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        ps.points.push_back(vdc_point(t, start + k));
    }
    return ps;
}

DigitString locate_cell(const Triangle& t, Point p, int depth)
{
    const Barycentric b = to_barycentric(t, p);
    double w1 = b.w1;
    double w2 = b.w2;
    double w3 = b.w3;
    DigitString digits;
    digits.reserve(static_cast<std::size_t>(depth));
    for (int level = 0; level < depth; ++level) {
        // Weights relative to the chosen child; see child_triangle for labels.
        if (w1 >= 0.5) {
            digits.push_back(1);
            w1 = 2.0 * w1 - 1.0;
            w2 *= 2.0;
            w3 *= 2.0;
        } else if (w2 >= 0.5) {
            digits.push_back(2);
            w1 *= 2.0;
            w2 = 2.0 * w2 - 1.0;
            w3 *= 2.0;
        } else if (w3 >= 0.5) {
            digits.push_back(3);
            w1 *= 2.0;
            w2 *= 2.0;
            w3 = 2.0 * w3 - 1.0;
        } else {
            digits.push_back(0);
            w1 = 1.0 - 2.0 * w1;
            w2 = 1.0 - 2.0 * w2;
            w3 = 1.0 - 2.0 * w3;
        }
    }
    return digits;
}

std::array<std::uint8_t, 4> node_permutation(std::uint64_t seed, int level, std::uint64_t prefix)
{
    CounterRng rng(hash_combine(hash_combine(seed, static_cast<std::uint64_t>(level)), prefix));
    std::array<std::uint8_t, 4> perm{0, 1, 2, 3};
    for (int j = 3; j > 0; --j) {
        const auto k = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(j + 1)));
        std::swap(perm[j], perm[k]);
    }
    return perm;
}

DigitString scramble_digits(std::uint64_t i, const ScrambleSeed& seed)
{
    DigitString out;
    out.reserve(static_cast<std::size_t>(seed.depth));
    std::uint64_t prefix = 0;
    std::uint64_t rest = i;
    for (int level = 0; level < seed.depth; ++level) {
        const auto digit = static_cast<std::uint8_t>(rest & 3U);
        rest >>= 2;
        out.push_back(node_permutation(seed.seed, level, prefix)[digit]);
        prefix |= static_cast<std::uint64_t>(digit) << (2 * level);
    }
    return out;
}

SampleSet scrambled_vdc(const Triangle& t, std::size_t n, const ScrambleSeed& seed, LeafMode mode)
{
    if (seed.depth > 32) {
        throw DepthTooSmall(fmt::format("scramble depth {} exceeds 32 digits", seed.depth));
    }
    // 4^depth must cover the indices 0..n-1.
    if (seed.depth < 32 && n > 0 && (n - 1) >> (2 * seed.depth) != 0) {
        throw DepthTooSmall(fmt::format("scramble depth {} too small for n = {}", seed.depth, n));
    }
    SampleSet ps{t, {},
                 fmt::format("vdc-scrambled seed={} depth={} leaf={}", seed.seed, seed.depth,
                             mode == LeafMode::centroid ? "centroid" : "uniform")};
    ps.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const DigitString digits = scramble_digits(k, seed);
        const Triangle leaf = descend(t, digits);
        if (mode == LeafMode::centroid) {
            ps.points.push_back(leaf.centroid());
            continue;
        }
        CounterRng rng(hash_combine(hash_combine(seed.seed, 0x5EAFULL), k));
        double r = 0.0;
        double s = 0.0;
        do {
            r = rng.next_unit();
            s = rng.next_unit();
        } while (r + s > 1.0);
        ps.points.push_back(leaf.a() + r * (leaf.b() - leaf.a()) + s * (leaf.c() - leaf.a()));
    }
    return ps;
}

} // namespace triqmc
