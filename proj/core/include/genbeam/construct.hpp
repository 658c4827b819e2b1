#ifndef GENBEAM_CONSTRUCT_HPP
#define GENBEAM_CONSTRUCT_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "genbeam/coords.hpp"
#include "genbeam/params.hpp"
#include "genbeam/summation.hpp"

namespace genbeam {

/// Contour settings for the derivative engine. The radius is radius_scale
/// times a scale supplied by the generator (sqrt|a| for Gaussians, distance
/// to the branch point for the exponential family).
struct ContourSpec {
    double radius_scale = 0.5;
    int nodes = 0;          // 0: max(floor, 4 (order + 1)); floor is 64 with the radius search, else 32
    bool adaptive = true;   // radius search for entire generators (see cauchy_derivative_adaptive)

    /// Throws DomainError if an explicit node count is below 4 (order + 1).
    int resolve_nodes(int order, int floor = 32) const;
    double resolve_radius(double natural_scale) const;
};

/// Uniform trapezoidal rule on [0, 2pi).
struct QuadratureSpec {
    int nodes = 256;
    void validate() const;  // nodes >= 16
};

double factorial(int n);

/**
 * order-th derivative of a holomorphic f at center from the trapezoidal
 * rule on a circle:
 *
 *   order! / (nodes r^order) * sum_j f(center + r e^{i theta_j}) e^{-i order theta_j}
 *
 * Aliasing error decays like (r / R)^nodes where R is the distance to the
 * nearest singularity.
 */
template <class F>
cplx cauchy_derivative(F&& f, cplx center, int order, double radius, int nodes)
{
    std::vector<cplx> terms(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const double theta = two_pi * j / nodes;
        const cplx w = std::polar(1.0, theta);
        terms[static_cast<std::size_t>(j)] = f(center + radius * w) * std::polar(1.0, -order * theta);
    }
    const cplx mean = pairwise_sum<cplx>(terms) / static_cast<double>(nodes);
    return factorial(order) * mean / std::pow(radius, order);
}

/// Outcome of one contour evaluation.
struct CauchyEstimate {
    cplx value{};
    double radius = 0.0;
    double condition = 0.0;  // mean |f| on the circle over |order-th mode|
    double error = 0.0;      // estimated absolute error of value (rounding + aliasing)
};

namespace detail {

/// Roots of unity e^{-2 pi i j / nodes}, cached per thread.
const std::vector<cplx>& roots_of_unity(int nodes);

template <class F>
CauchyEstimate cauchy_on_circle(F& f, cplx center, int order, double radius, int nodes)
{
    const std::vector<cplx>& roots = roots_of_unity(nodes);
    std::vector<cplx> samples(static_cast<std::size_t>(nodes));
    std::vector<double> magnitudes(samples.size());
    for (int j = 0; j < nodes; ++j) {
        // conj(roots[j]) = e^{+2 pi i j / nodes}
        samples[static_cast<std::size_t>(j)] = f(center + radius * std::conj(roots[static_cast<std::size_t>(j)]));
        magnitudes[static_cast<std::size_t>(j)] = std::abs(samples[static_cast<std::size_t>(j)]);
    }
    std::vector<cplx> terms(samples.size());
    auto mode = [&](int k) {
        for (int j = 0; j < nodes; ++j) {
            const auto idx = static_cast<std::size_t>(static_cast<long>(k) * j % nodes);
            terms[static_cast<std::size_t>(j)] = samples[static_cast<std::size_t>(j)] * roots[idx];
        }
        return pairwise_sum<cplx>(terms) / static_cast<double>(nodes);
    };
    const double mean_abs = pairwise_sum<double>(magnitudes) / nodes;
    const cplx wanted = mode(order);
    // Taylor term order + nodes/2; bounds the alias of order + nodes when coefficients decay
    const cplx far = mode(order + nodes / 2);

    const double scale = factorial(order) / std::pow(radius, order);
    CauchyEstimate est;
    est.radius = radius;
    est.value = scale * wanted;
    est.condition = std::abs(wanted) > 0.0 ? mean_abs / std::abs(wanted) : HUGE_VAL;
    est.error = (std::numeric_limits<double>::epsilon() * mean_abs + std::abs(far)) * scale;
    return est;
}

} // namespace detail

/**
 * Cauchy derivative with a radius search for entire (or widely analytic) f.
 *
 * Starting from radius0 the radius is doubled, or else halved, while the
 * estimated absolute error (rounding eps * mean|f| plus the half-period
 * mode, both scaled by order! / r^order) keeps decreasing. At most
 * max_steps moves each way.
 */
template <class F>
CauchyEstimate cauchy_derivative_adaptive(F&& f, cplx center, int order, double radius0, int nodes, int max_steps = 6)
{
    if (order == 0)
        return {f(center), 0.0, 1.0, 0.0};
    CauchyEstimate best = detail::cauchy_on_circle(f, center, order, radius0, nodes);
    double r = radius0;
    bool moved_up = false;
    for (int step = 0; step < max_steps; ++step) {
        r *= 2.0;
        const CauchyEstimate trial = detail::cauchy_on_circle(f, center, order, r, nodes);
        if (!(trial.error < best.error))
            break;
        best = trial;
        moved_up = true;
    }
    if (moved_up)
        return best;
    r = radius0;
    for (int step = 0; step < max_steps; ++step) {
        r *= 0.5;
        const CauchyEstimate trial = detail::cauchy_on_circle(f, center, order, r, nodes);
        if (!(trial.error < best.error))
            break;
        best = trial;
    }
    return best;
}

using OffSliceFunction = std::function<cplx(const OffSliceTransverse&)>;

/// d^n_minus/dx-^n_minus d^n_plus/dx+^n_plus g at the on-slice image of p,
/// as nested contour integrals: x- inside, x+ outside. Both start from the
/// radius spec.radius_scale * natural_scale; with spec.adaptive set, each
/// contour then runs the radius search (g must be entire in each slot).
cplx mixed_partial_offslice(const OffSliceFunction& g, const SpacetimePoint& p, int n_minus, int n_plus,
                            double natural_scale, const ContourSpec& spec);

/// ((-1)^(n+l) / n!) d^(n+l)/dx-^(n+l) d^n/dx+^n of the Gaussian generator.
cplx rodrigues_lg(const LGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys,
                  const ContourSpec& spec = {});

/// (-1)^(m+n) d^m/dx^m d^n/dy^n of the Gaussian generator in complexified x, y.
cplx rodrigues_hg(const HGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys,
                  const ContourSpec& spec = {});

using AngularKernel = std::function<cplx(double)>;

/// Trapezoidal approximation of the integral over [0, 2pi) of e^{il varphi} kernel(varphi).
cplx angular_quadrature(const AngularKernel& kernel, int l, const QuadratureSpec& spec = {});

/// Angular integral of e^{il varphi} g_b. For nodes > 2|l| the Taylor terms
/// of the kernel that the rule annihilates exactly are subtracted first, so
/// the sum keeps full relative accuracy near the axis.
cplx bessel_from_quadrature(const BesselParams& prm, const SpacetimePoint& p, double m,
                            const QuadratureSpec& spec = {});

/// Angular integral of e^{il varphi} g_bg (same reduction as above).
cplx bg_from_quadrature(const BGParams& prm, const SpacetimePoint& p, const BeamPhysical& phys,
                        const QuadratureSpec& spec = {});

} // namespace genbeam

#endif // GENBEAM_CONSTRUCT_HPP
