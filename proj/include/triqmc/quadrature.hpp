#pragma once

#include "triqmc/geometry.hpp"
#include "triqmc/integrands.hpp"
#include "triqmc/lattice.hpp"
#include "triqmc/sample_set.hpp"
#include "triqmc/vdc.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace triqmc {

/// Boundary weight: 0 outside, 1 interior, 1/2 on an edge, 1/4 at a vertex.
double face_weight(const Triangle& t, Point p);

/// True when the domain's bounding box fits in a unit cell [m, m+1]^2.
bool fits_unit_cell(const Triangle& t);

/// (1/N) sum_i sum_m f(x_i + m) w(x_i + m) over the integer shifts m that can
/// bring x_i into the domain. Shifts are only enumerated when the domain fits
/// in a unit cell; otherwise only m = 0 is used, since a larger domain would
/// count interior translates twice.
double weighted_mean(const SampleSet& ps, const Integrand& f);

/// vol(domain) * weighted_mean(ps, f).
double integrate(const SampleSet& ps, const Integrand& f);

enum class GeneratorKind { vdc, vdc_scrambled, lattice, lattice_shifted };

std::string_view generator_name(GeneratorKind k);
bool is_randomized(GeneratorKind k);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::vdc;
    Triangle domain = reference_triangle(ReferenceTriangle::equilateral_unit_area);
    std::uint64_t start = 0;
    int scramble_depth = 16;
    LeafMode leaf = LeafMode::uniform_leaf;
    LatticeAngle angle = default_angle();
    bool exact_count = false;
};

/// Point set of (target) size n; `seed` is ignored by deterministic kinds.
SampleSet generate(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed);

struct ConvergenceRow {
    std::size_t n = 0;
    double mean = 0.0;
    /// Mean over replicates of |estimate - exact|.
    double abs_err = 0.0;
    double rmse = 0.0;
    std::size_t replicates = 0;
    std::uint64_t seed = 0;
};

/// Seed of replicate r: seed XOR mix64(r).
std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t r);

/// One row per entry of ns, ordered by N. Deterministic generators run
/// a single replicate. Replicates may run on `threads` threads; sums are
/// accumulated in replicate order, so results are thread-count independent.
std::vector<ConvergenceRow> convergence_study(const GeneratorSpec& spec, const Integrand& f,
                                              std::span<const std::size_t> ns, std::size_t replicates,
                                              std::uint64_t seed, unsigned threads = 1);

/// Least-squares slope of log(rmse) against log(n).
double loglog_slope(std::span<const ConvergenceRow> rows);

} // namespace triqmc
