#pragma once

#include "triqmc/geometry.hpp"
#include "triqmc/sample_set.hpp"

#include <cstddef>
#include <string_view>

namespace triqmc {

enum class DiscrepancyFamily { parallelogram, anchored_box, subtriangle };

std::string_view family_name(DiscrepancyFamily f);

/// Test set attaining a reported discrepancy. For the parallelogram family
/// `corner` is the anchor and (t, u) are the side fractions toward the two
/// other corners in label order; for anchored boxes (t, u) = (a1, a2) and the
/// corner is A = (0,0). `incl_*` says whether points exactly on the moving
/// side are counted (closed) or not (open).
struct Witness {
    Corner corner = Corner::A;
    double t = 0.0;
    double u = 0.0;
    bool incl_t = true;
    bool incl_u = true;
};

struct DiscrepancyReport {
    DiscrepancyFamily family = DiscrepancyFamily::parallelogram;
    double value = 0.0;
    /// Signed discrepancy of the witness; value == |signed_value|.
    double signed_value = 0.0;
    Witness witness;
    bool approximate = false;
    std::size_t n_points = 0;
};

/// Relative volume minus relative count for the parallelogram anchored at
/// `corner`. Anchor C tests (w_A <= t, w_B <= u), anchor A tests
/// (w_B, w_C) and anchor B tests (w_A, w_C); strict comparisons when the
/// corresponding incl flag is false. Throws OutOfRange for t, u outside [0,1].
double signed_discrepancy(const SampleSet& ps, Corner corner, double t, double u, bool incl_t,
                          bool incl_u);
double signed_discrepancy(const SampleSet& ps, const Witness& w);

/// Exact parallelogram discrepancy over all three anchors.
///
/// Between consecutive candidate parameters the count is constant and the
/// volume is monotone, so the supremum over the family's closure is attained
/// at a candidate pair (distinct point weights plus 1.0) with one of the four
/// open/closed combinations. Cost is O(N^2) per anchor. Anchors are evaluated
/// on up to `threads` threads; the result does not depend on the thread count.
DiscrepancyReport parallelogram_discrepancy(const SampleSet& ps, unsigned threads = 1);

/// Lower bound on the parallelogram discrepancy from a resolution x resolution
/// grid of (t, u) = (j, k) / (resolution - 1) per anchor, open and closed.
DiscrepancyReport parallelogram_discrepancy_grid(const SampleSet& ps, std::size_t resolution);

/// Exact anchored-box discrepancy on T_PC = Δ((0,0),(0,1),(1,1)) over boxes
/// [0,a1) x [0,a2), a in [0,1)^2. Throws WrongDomain for any other domain.
DiscrepancyReport pc_discrepancy(const SampleSet& ps);

/// vol(box ∩ T_PC) / vol(T_PC) for the box [0,a1) x [0,a2).
double pc_box_fraction(double a1, double a2);

/// max over the 4^k depth-k subdivision cells S of |1/4^k - count(S)/N|,
/// with cells assigned by locate_cell. Requires k <= 8.
double subtriangle_discrepancy(const SampleSet& ps, int k);

} // namespace triqmc
