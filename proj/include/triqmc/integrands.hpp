#pragma once

#include "triqmc/geometry.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triqmc {

enum class Smoothness { smooth, lipschitz, discontinuous };

struct Integrand {
    std::string name;
    /// Formula plus the provenance of exact_integral.
    std::string description;
    std::function<double(Point)> eval;
    /// Integral over the domain the integrand was built for.
    std::optional<double> exact_integral;
    Smoothness smoothness = Smoothness::smooth;
};

/// Names accepted by make_integrand: const1, bary_P_Q_R for 1 <= P+Q+R <= 4,
/// cos2pi, ridge, halfplane, disc.
std::vector<std::string> builtin_integrand_names();

/// Throws UnknownIntegrand (message lists the valid names).
Integrand make_integrand(std::string_view name, const Triangle& domain);

std::vector<Integrand> builtin_integrands(const Triangle& domain);

/// Integral of w_A^p w_B^q w_C^r over t: 2 vol(t) p! q! r! / (p+q+r+2)!.
double monomial_integral(const Triangle& t, int p, int q, int r);

/// vol(t)/4^depth times the sum of f over the centroids of the depth-level
/// subdivision cells.
double centroid_rule(const Triangle& t, const std::function<double(Point)>& f, int depth);

/// Centroid rule at depths 8, 9, 10 with Richardson extrapolation; throws Error
/// unless the two extrapolants agree to 1e-9.
double refined_integral(const Triangle& t, const std::function<double(Point)>& f);

/// Area of t ∩ {p : dot(p - origin, normal) <= 0}, by polygon clipping.
double halfplane_area(const Triangle& t, Point origin, Point normal);

} // namespace triqmc
