#include "genbeam/coords.hpp"

#include <cmath>
#include <string>

#include "genbeam/errors.hpp"

namespace genbeam {

bool SpacetimePoint::is_finite() const noexcept
{
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

double normalize_angle(double phi) noexcept
{
    double r = std::fmod(phi, two_pi);
    if (r < 0.0)
        r += two_pi;
    // fmod of a tiny negative value can round back up to exactly 2pi
    if (r >= two_pi)
        r = 0.0;
    return r;
}

LightConeCoords to_lightcone(const SpacetimePoint& p) noexcept
{
    LightConeCoords lc;
    lc.t_plus = p.t + p.z;
    lc.t_minus = p.t - p.z;
    lc.x_plus = {p.x, p.y};
    lc.x_minus = {p.x, -p.y};
    lc.rho = std::hypot(p.x, p.y);
    lc.phi = lc.rho > 0.0 ? normalize_angle(std::atan2(p.y, p.x)) : 0.0;
    return lc;
}

SpacetimePoint from_cylindrical(double rho, double phi, double z, double t)
{
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw DomainError("from_cylindrical: rho must be finite and >= 0, got " + std::to_string(rho));
    if (!std::isfinite(phi) || !std::isfinite(z) || !std::isfinite(t))
        throw DomainError("from_cylindrical: non-finite coordinate");
    return {t, rho * std::cos(phi), rho * std::sin(phi), z};
}

OffSliceTransverse on_slice(const SpacetimePoint& p) noexcept
{
    return {{p.x, p.y}, {p.x, -p.y}};
}

} // namespace genbeam
