#ifndef GENBEAM_BEAMS_HPP
#define GENBEAM_BEAMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genbeam/construct.hpp"
#include "genbeam/coords.hpp"
#include "genbeam/params.hpp"

namespace genbeam {

/// Identification carried along with a field for reports.
struct FieldInfo {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
};

/// An evaluatable amplitude on spacetime. Evaluation is pure, so a field may
/// be shared between threads.
class ComplexField {
public:
    using Evaluator = std::function<cplx(const SpacetimePoint&)>;

    ComplexField(FieldInfo info, Evaluator eval) : info_(std::move(info)), eval_(std::move(eval)) {}

    cplx operator()(const SpacetimePoint& p) const { return eval_(p); }
    const FieldInfo& info() const noexcept { return info_; }

private:
    FieldInfo info_;
    Evaluator eval_;
};

// ---------------------------------------------------------------------------
// Gaussian generator and its descendants

/// a(t+) = w0^2 + 2i t+/E. Re a = w0^2 > 0.
cplx envelope_a(double t_plus, const BeamPhysical& phys);

/// exp(-i E t-/2) exp(-i m^2 t+/(2E)).
cplx lightcone_phase(double t_plus, double t_minus, const BeamPhysical& phys);

/// Gaussian generator with independent x+ and x-.
cplx g_lg_offslice(const OffSliceTransverse& xs, double t_plus, double t_minus, const BeamPhysical& phys);
cplx g_lg(const SpacetimePoint& p, const BeamPhysical& phys);

/// Laguerre-Gauss closed form: phase (x+iy)^l a^-(n+l+1) exp(-rho^2/a) L_n^l(rho^2/a).
cplx f_lg(const LGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys);

/// Same function as g_lg, read as a function of (x, y).
cplx g_hg(const SpacetimePoint& p, const BeamPhysical& phys);
/// Holomorphic continuation of g_hg to complex x and y.
cplx g_hg_extended(cplx x, cplx y, double t, double z, const BeamPhysical& phys);

/// Hermite-Gauss closed form H_m(x/sqrt a) H_n(y/sqrt a) G / a^((m+n)/2).
cplx f_hg(const HGIndices& idx, const SpacetimePoint& p, const BeamPhysical& phys);

// ---------------------------------------------------------------------------
// Exponential generator: exp(iqz) exp(-u)/u,
// u^2 = (w0 + i kappa t)^2 + kappa^2 x+ x-, kappa^2 = m^2 + q^2.

/// u^2 for the given transverse pair.
cplx exp_u_squared(const OffSliceTransverse& xs, double t, double q, const BeamPhysical& phys);

/// Principal-root evaluation; throws BranchCutError if u^2 is on the closed
/// negative real axis. With a branch anchor u_ref, u is continued from u_ref
/// as u_ref sqrt(u^2/u_ref^2) and the check applies to u^2/u_ref^2 instead.
cplx g_exp_offslice(const OffSliceTransverse& xs, double t, double z, double q, const BeamPhysical& phys,
                    std::optional<cplx> branch_anchor = std::nullopt);
cplx g_exp(const SpacetimePoint& p, double q, const BeamPhysical& phys);

/// k-th x- derivative of the exponential generator (no factorial prefactor),
/// computed by a contour integral in x-. The contour radius is
/// spec.radius_scale times the distance from x- to the branch point of u;
/// automatic node counts start at 64 here. Exactly 0 where x+ = 0 or
/// kappa = 0, since u^2 then does not depend on x-.
cplx f_exp(const ExpParams& prm, const SpacetimePoint& p, const BeamPhysical& phys,
           const ContourSpec& spec = {});

/// Chain-rule closed form of the first x- derivative.
cplx f_exp_first_closed_form(const SpacetimePoint& p, double q, const BeamPhysical& phys);

// ---------------------------------------------------------------------------
// Macdonald generator m K1(m s)/s, s^2 = (w0 + it)^2 + x+ x- + z^2.

cplx g_md(const SpacetimePoint& p, const BeamPhysical& phys);

// ---------------------------------------------------------------------------
// Bessel family

/// Plane-wave kernel exp(-i Omega t + i p_z z) exp(i p_perp rho cos(phi - varphi)),
/// Omega = sqrt(p_perp^2 + p_z^2 + m^2).
cplx g_b(const SpacetimePoint& p, const BesselParams& prm, double m, double varphi);

/// 2 pi i^l e^{il phi} J_l(p_perp rho) exp(-i Omega t + i p_z z).
cplx f_bessel(const BesselParams& prm, const SpacetimePoint& p, double m);

/// Displaced Gaussian generator, b and varphi free parameters.
cplx g_bg(const SpacetimePoint& p, double b, double varphi, const BeamPhysical& phys);

/// Bessel-Gauss closed form
/// 2 pi (-i)^l e^{il phi}/a phase exp(-(rho^2 - b^2)/a) J_l(2 b rho / a).
cplx f_bg(const BGParams& prm, const SpacetimePoint& p, const BeamPhysical& phys);

} // namespace genbeam

#endif // GENBEAM_BEAMS_HPP
