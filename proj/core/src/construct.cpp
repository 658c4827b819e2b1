#include "genbeam/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "genbeam/beams.hpp"
#include "genbeam/errors.hpp"

namespace genbeam {

int ContourSpec::resolve_nodes(int order, int floor) const
{
    if (order < 0)
        throw DomainError("ContourSpec: derivative order must be >= 0");
    const int minimum = 4 * (order + 1);
    if (nodes == 0)
        return std::max(floor, minimum);
    if (nodes < minimum || nodes < 8)
        throw DomainError("ContourSpec: " + std::to_string(nodes) + " nodes is below 4 (order + 1) = " +
                          std::to_string(minimum));
    return nodes;
}

double ContourSpec::resolve_radius(double natural_scale) const
{
    if (!(radius_scale > 0.0) || !std::isfinite(radius_scale))
        throw DomainError("ContourSpec: radius_scale must be finite and > 0");
    const double r = radius_scale * natural_scale;
    if (!(r > 0.0) || !std::isfinite(r))
        throw DomainError("ContourSpec: degenerate contour radius");
    return r;
}

void QuadratureSpec::validate() const
{
    if (nodes < 16)
        throw DomainError("QuadratureSpec: need at least 16 nodes, got " + std::to_string(nodes));
}

namespace detail {

const std::vector<cplx>& roots_of_unity(int nodes)
{
    thread_local std::unordered_map<int, std::vector<cplx>> cache;
    auto [it, inserted] = cache.try_emplace(nodes);
    if (inserted) {
        it->second.resize(static_cast<std::size_t>(nodes));
        for (int j = 0; j < nodes; ++j)
            it->second[static_cast<std::size_t>(j)] = std::polar(1.0, -two_pi * j / nodes);
    }
    return it->second;
}

} // namespace detail

double factorial(int n)
{
    double r = 1.0;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

namespace {

template <class F>
cplx contour_derivative(F&& f, cplx center, int order, double radius, const ContourSpec& spec)
{
    if (order == 0)
        return f(center);
    const int nodes = spec.resolve_nodes(order, spec.adaptive ? 64 : 32);
    if (spec.adaptive)
        return cauchy_derivative_adaptive(f, center, order, radius, nodes).value;
    return cauchy_derivative(f, center, order, radius, nodes);
}

// e^w minus its Taylor polynomial of degree < drop.
cplx exp_remainder(cplx w, int drop)
{
    if (drop == 0)
        return std::exp(w);
    if (std::abs(w) > drop + 1.0) {
        std::vector<cplx> poly(static_cast<std::size_t>(drop));
        cplx term{1.0};
        for (int k = 0; k < drop; ++k) {
            poly[static_cast<std::size_t>(k)] = term;
            term *= w / static_cast<double>(k + 1);
        }
        return std::exp(w) - pairwise_sum<cplx>(poly);
    }
    cplx term{1.0};
    for (int k = 1; k <= drop; ++k)
        term *= w / static_cast<double>(k);
    cplx sum = term;
    for (int k = drop + 1; k < drop + 200; ++k) {
        term *= w / static_cast<double>(k);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

// The generators depend on varphi through exp(w cos(varphi - phi)). The
// Taylor terms of degree < |l| are trigonometric polynomials of degree < |l|,
// which the trapezoid sum against e^{il varphi} maps to exactly zero once
// nodes > 2|l|. Dropping them leaves the same sum but avoids cancelling
// O(1) terms down to O(x^|l|) near the axis.
bool reduce_kernel(int l, const QuadratureSpec& spec)
{
    return l != 0 && spec.nodes > 2 * std::abs(l);
}

} // namespace

cplx mixed_partial_offslice(const OffSliceFunction& g, const SpacetimePoint& p, int n_minus, int n_plus,
                            double natural_scale, const ContourSpec& spec)
{
    if (n_minus < 0 || n_plus < 0)
        throw DomainError("mixed_partial_offslice: derivative orders must be >= 0");
    const OffSliceTransverse center = on_slice(p);
    if (n_minus == 0 && n_plus == 0)
        return g(center);

    const double radius = spec.resolve_radius(natural_scale);
    auto inner = [&](cplx x_plus) {
        return contour_derivative([&](cplx x_minus) { return g({x_plus, x_minus}); }, center.x_minus, n_minus,
                                  radius, spec);
    };
    return contour_derivative(inner, center.x_plus, n_plus, radius, spec);
}

cplx rodrigues_lg(const LGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys, const ContourSpec& spec)
{
    idx.validate();
    const double t_plus = p.t + p.z;
    const double t_minus = p.t - p.z;
    const double scale = std::sqrt(std::abs(envelope_a(t_plus, phys)));
    auto generator = [&](const OffSliceTransverse& xs) { return g_lg_offslice(xs, t_plus, t_minus, phys); };
    const cplx d = mixed_partial_offslice(generator, p, idx.n + idx.l, idx.n, scale, spec);
    const double sign = (idx.n + idx.l) % 2 == 0 ? 1.0 : -1.0;
    return sign / factorial(idx.n) * d;
}

cplx rodrigues_hg(const HGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys, const ContourSpec& spec)
{
    idx.validate();
    if (idx.mx == 0 && idx.ny == 0)
        return g_hg(p, phys);

    const double radius = spec.resolve_radius(std::sqrt(std::abs(envelope_a(p.t + p.z, phys))));
    auto in_y = [&](cplx x) {
        return contour_derivative([&](cplx y) { return g_hg_extended(x, y, p.t, p.z, phys); }, cplx{p.y}, idx.ny,
                                  radius, spec);
    };
    const double sign = (idx.mx + idx.ny) % 2 == 0 ? 1.0 : -1.0;
    return sign * contour_derivative(in_y, cplx{p.x}, idx.mx, radius, spec);
}

cplx angular_quadrature(const AngularKernel& kernel, int l, const QuadratureSpec& spec)
{
    spec.validate();
    std::vector<cplx> terms(static_cast<std::size_t>(spec.nodes));
    for (int j = 0; j < spec.nodes; ++j) {
        const double varphi = two_pi * j / spec.nodes;
        terms[static_cast<std::size_t>(j)] = std::polar(1.0, l * varphi) * kernel(varphi);
    }
    return pairwise_sum<cplx>(terms) * (two_pi / spec.nodes);
}

cplx bessel_from_quadrature(const BesselParams& prm, const SpacetimePoint& p, double m, const QuadratureSpec& spec)
{
    prm.validate();
    spec.validate();
    if (!reduce_kernel(prm.l, spec))
        return angular_quadrature([&](double varphi) { return g_b(p, prm, m, varphi); }, prm.l, spec);
    const double omega = std::sqrt(prm.p_perp * prm.p_perp + prm.p_z * prm.p_z + m * m);
    const cplx prefactor = std::exp(cplx{0.0, -omega * p.t + prm.p_z * p.z});
    const int drop = std::abs(prm.l);
    return prefactor * angular_quadrature(
                           [&](double varphi) {
                               const double transverse = prm.p_perp * (p.x * std::cos(varphi) + p.y * std::sin(varphi));
                               return exp_remainder(cplx{0.0, transverse}, drop);
                           },
                           prm.l, spec);
}

cplx bg_from_quadrature(const BGParams& prm, const SpacetimePoint& p, const BeamPhysical& phys,
                        const QuadratureSpec& spec)
{
    prm.validate();
    spec.validate();
    if (!reduce_kernel(prm.l, spec))
        return angular_quadrature([&](double varphi) { return g_bg(p, prm.b, varphi, phys); }, prm.l, spec);
    const double t_plus = p.t + p.z;
    const cplx a = envelope_a(t_plus, phys);
    const double rho2 = p.x * p.x + p.y * p.y;
    const cplx prefactor = lightcone_phase(t_plus, p.t - p.z, phys) / a * std::exp(-(rho2 - prm.b * prm.b) / a);
    return prefactor * angular_quadrature(
                           [&](double varphi) {
                               const double projection = p.x * std::cos(varphi) + p.y * std::sin(varphi);
                               return exp_remainder(cplx{0.0, -2.0 * prm.b * projection} / a, prm.l);
                           },
                           prm.l, spec);
}

} // namespace genbeam
