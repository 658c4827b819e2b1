#include "genbeam/beams.hpp"

#include <cmath>
#include <string>

#include "genbeam/errors.hpp"
#include "genbeam/specfun.hpp"

namespace genbeam {

namespace {

constexpr cplx I{0.0, 1.0};

cplx ipow(cplx base, int e)
{
    cplx r = 1.0;
    for (int k = 0; k < e; ++k)
        r *= base;
    return r;
}

// i^l for any integer l
cplx i_power(int l)
{
    switch (((l % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

bool on_negative_real_axis(cplx w)
{
    return w.imag() == 0.0 && w.real() <= 0.0;
}

cplx checked_principal_sqrt(cplx w, const char* who)
{
    if (on_negative_real_axis(w))
        throw BranchCutError(std::string(who) + ": square-root argument on the closed negative real axis");
    const cplx r = std::sqrt(w);
    if (!(r.real() > 0.0))
        throw BranchCutError(std::string(who) + ": principal root with non-positive real part");
    return r;
}

bool finite(double v) { return std::isfinite(v); }

} // namespace

void BeamPhysical::validate() const
{
    if (!(E > 0.0) || !finite(E))
        throw DomainError("BeamPhysical: E must be finite and > 0");
    if (!(w0 > 0.0) || !finite(w0))
        throw DomainError("BeamPhysical: w0 must be finite and > 0");
    if (!(m >= 0.0) || !finite(m))
        throw DomainError("BeamPhysical: m must be finite and >= 0");
}

void LGIndices::validate() const
{
    if (n < 0 || l < 0)
        throw DomainError("LGIndices: n and l must be >= 0");
}

void HGIndices::validate() const
{
    if (mx < 0 || ny < 0)
        throw DomainError("HGIndices: indices must be >= 0");
}

void ExpParams::validate() const
{
    if (k < 0)
        throw DomainError("ExpParams: k must be >= 0");
    if (!finite(q))
        throw DomainError("ExpParams: q must be finite");
}

void BesselParams::validate() const
{
    if (!(p_perp > 0.0) || !finite(p_perp))
        throw DomainError("BesselParams: p_perp must be finite and > 0");
    if (!finite(p_z))
        throw DomainError("BesselParams: p_z must be finite");
}

void BGParams::validate() const
{
    if (!(b >= 0.0) || !finite(b))
        throw DomainError("BGParams: b must be finite and >= 0");
    if (l < 0)
        throw DomainError("BGParams: l must be >= 0");
}

cplx envelope_a(double t_plus, const BeamPhysical& phys)
{
    return {phys.w0 * phys.w0, 2.0 * t_plus / phys.E};
}

cplx lightcone_phase(double t_plus, double t_minus, const BeamPhysical& phys)
{
    return std::exp(-I * (phys.E * t_minus / 2.0)) * std::exp(-I * (phys.m * phys.m * t_plus / (2.0 * phys.E)));
}

cplx g_lg_offslice(const OffSliceTransverse& xs, double t_plus, double t_minus, const BeamPhysical& phys)
{
    const cplx a = envelope_a(t_plus, phys);
    return lightcone_phase(t_plus, t_minus, phys) / a * std::exp(-xs.x_plus * xs.x_minus / a);
}

cplx g_lg(const SpacetimePoint& p, const BeamPhysical& phys)
{
    return g_lg_offslice(on_slice(p), p.t + p.z, p.t - p.z, phys);
}

cplx f_lg(const LGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys)
{
    idx.validate();
    const double t_plus = p.t + p.z;
    const double t_minus = p.t - p.z;
    const cplx a = envelope_a(t_plus, phys);
    const cplx arg = (p.x * p.x + p.y * p.y) / a;
    const cplx x_plus{p.x, p.y};
    return lightcone_phase(t_plus, t_minus, phys) * ipow(x_plus, idx.l) / ipow(a, idx.n + idx.l + 1) *
           std::exp(-arg) * laguerre(idx.n, idx.l, arg);
}

cplx g_hg(const SpacetimePoint& p, const BeamPhysical& phys)
{
    return g_lg(p, phys);
}

cplx g_hg_extended(cplx x, cplx y, double t, double z, const BeamPhysical& phys)
{
    const double t_plus = t + z;
    const cplx a = envelope_a(t_plus, phys);
    return lightcone_phase(t_plus, t - z, phys) / a * std::exp(-(x * x + y * y) / a);
}

cplx f_hg(const HGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys)
{
    idx.validate();
    const cplx a = envelope_a(p.t + p.z, phys);
    const cplx root_a = std::sqrt(a);  // Re a > 0, principal branch is analytic here
    return hermite(idx.mx, p.x / root_a) * hermite(idx.ny, p.y / root_a) * g_hg(p, phys) /
           ipow(root_a, idx.mx + idx.ny);
}

cplx exp_u_squared(const OffSliceTransverse& xs, double t, double q, const BeamPhysical& phys)
{
    const double kappa2 = phys.m * phys.m + q * q;
    const cplx w{phys.w0, std::sqrt(kappa2) * t};
    return w * w + kappa2 * xs.x_plus * xs.x_minus;
}

cplx g_exp_offslice(const OffSliceTransverse& xs, double t, double z, double q, const BeamPhysical& phys,
                    std::optional<cplx> branch_anchor)
{
    const cplx u2 = exp_u_squared(xs, t, q, phys);
    cplx u;
    if (branch_anchor) {
        const cplx ratio = u2 / (*branch_anchor * *branch_anchor);
        if (on_negative_real_axis(ratio))
            throw BranchCutError("g_exp: continuation path crosses the branch point of u");
        u = *branch_anchor * std::sqrt(ratio);
    } else {
        if (on_negative_real_axis(u2))
            throw BranchCutError("g_exp: u^2 on the closed negative real axis");
        u = std::sqrt(u2);
    }
    return std::exp(I * (q * z)) * std::exp(-u) / u;
}

cplx g_exp(const SpacetimePoint& p, double q, const BeamPhysical& phys)
{
    const cplx u = checked_principal_sqrt(exp_u_squared(on_slice(p), p.t, q, phys), "g_exp");
    return std::exp(I * (q * p.z)) * std::exp(-u) / u;
}

cplx f_exp(const ExpParams& prm, const SpacetimePoint& p, const BeamPhysical& phys, const ContourSpec& spec)
{
    prm.validate();
    if (prm.k < 1)
        throw DomainError("f_exp: derivative order k must be >= 1");
    if (!(spec.radius_scale < 1.0))
        throw BranchCutError("f_exp: contour radius_scale >= 1 reaches the branch point of u");

    const double kappa2 = phys.m * phys.m + prm.q * prm.q;
    const OffSliceTransverse xs = on_slice(p);
    if (kappa2 == 0.0 || xs.x_plus == 0.0)
        return 0.0;

    const cplx u0 = checked_principal_sqrt(exp_u_squared(xs, p.t, prm.q, phys), "f_exp");
    const cplx w{phys.w0, std::sqrt(kappa2) * p.t};
    const cplx branch_point = -(w * w) / (kappa2 * xs.x_plus);
    const double radius = spec.resolve_radius(std::abs(xs.x_minus - branch_point));
    const int nodes = spec.resolve_nodes(prm.k, 64);

    auto along_x_minus = [&](cplx x_minus) {
        return g_exp_offslice({xs.x_plus, x_minus}, p.t, p.z, prm.q, phys, u0);
    };
    return cauchy_derivative(along_x_minus, xs.x_minus, prm.k, radius, nodes);
}

cplx f_exp_first_closed_form(const SpacetimePoint& p, double q, const BeamPhysical& phys)
{
    const double kappa2 = phys.m * phys.m + q * q;
    const OffSliceTransverse xs = on_slice(p);
    const cplx u = checked_principal_sqrt(exp_u_squared(xs, p.t, q, phys), "f_exp_first_closed_form");
    return -std::exp(I * (q * p.z)) * std::exp(-u) * (1.0 + u) / (u * u) * kappa2 * xs.x_plus / (2.0 * u);
}

cplx g_md(const SpacetimePoint& p, const BeamPhysical& phys)
{
    if (!(phys.m > 0.0))
        throw DomainError("g_md: requires m > 0");
    if (!(phys.w0 > 0.0))
        throw DomainError("g_md: requires w0 > 0");
    const cplx w{phys.w0, p.t};
    const cplx s2 = w * w + (p.x * p.x + p.y * p.y + p.z * p.z);
    const cplx s = checked_principal_sqrt(s2, "g_md");
    return phys.m * macdonald_k1(phys.m * s) / s;
}

cplx g_b(const SpacetimePoint& p, const BesselParams& prm, double m, double varphi)
{
    const double omega = std::sqrt(prm.p_perp * prm.p_perp + prm.p_z * prm.p_z + m * m);
    const double transverse = prm.p_perp * (p.x * std::cos(varphi) + p.y * std::sin(varphi));
    return std::exp(I * (-omega * p.t + prm.p_z * p.z)) * std::exp(I * transverse);
}

cplx f_bessel(const BesselParams& prm, const SpacetimePoint& p, double m)
{
    prm.validate();
    const LightConeCoords lc = to_lightcone(p);
    const double omega = std::sqrt(prm.p_perp * prm.p_perp + prm.p_z * prm.p_z + m * m);
    return two_pi * i_power(prm.l) * std::polar(1.0, prm.l * lc.phi) * bessel_j(prm.l, prm.p_perp * lc.rho) *
           std::exp(I * (-omega * p.t + prm.p_z * p.z));
}

cplx g_bg(const SpacetimePoint& p, double b, double varphi, const BeamPhysical& phys)
{
    const double t_plus = p.t + p.z;
    const cplx a = envelope_a(t_plus, phys);
    const double rho2 = p.x * p.x + p.y * p.y;
    const double projection = p.x * std::cos(varphi) + p.y * std::sin(varphi);
    const cplx exponent = cplx{rho2 - b * b, 2.0 * b * projection} / a;
    return lightcone_phase(t_plus, p.t - p.z, phys) / a * std::exp(-exponent);
}

cplx f_bg(const BGParams& prm, const SpacetimePoint& p, const BeamPhysical& phys)
{
    prm.validate();
    const LightConeCoords lc = to_lightcone(p);
    const cplx a = envelope_a(lc.t_plus, phys);
    const double rho2 = p.x * p.x + p.y * p.y;
    return two_pi * i_power(-prm.l) * std::polar(1.0, prm.l * lc.phi) / a *
           lightcone_phase(lc.t_plus, lc.t_minus, phys) * std::exp(-(rho2 - prm.b * prm.b) / a) *
           bessel_j(prm.l, 2.0 * prm.b * lc.rho / a);
}

} // namespace genbeam
