#ifndef GENBEAM_COORDS_HPP
#define GENBEAM_COORDS_HPP

#include <complex>

namespace genbeam {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;

/// Event in natural units (hbar = c = 1).
struct SpacetimePoint {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool is_finite() const noexcept;
    friend bool operator==(const SpacetimePoint&, const SpacetimePoint&) = default;
};

/// Light-cone times t_plus = t + z, t_minus = t - z, transverse complex
/// combinations x_plus = x + iy, x_minus = x - iy and the cylindrical pair.
struct LightConeCoords {
    double t_plus = 0.0;
    double t_minus = 0.0;
    cplx x_plus{};
    cplx x_minus{};
    double rho = 0.0;
    double phi = 0.0;  // in [0, 2pi); 0 on the axis
};

/// Transverse pair with x_minus decoupled from conj(x_plus). Generators are
/// holomorphic in each slot separately, which is what the Rodrigues-type
/// derivatives act on.
struct OffSliceTransverse {
    cplx x_plus{};
    cplx x_minus{};
};

/// Wraps an angle into [0, 2pi).
double normalize_angle(double phi) noexcept;

LightConeCoords to_lightcone(const SpacetimePoint& p) noexcept;

/// Throws DomainError for rho < 0 or non-finite input.
SpacetimePoint from_cylindrical(double rho, double phi, double z, double t);

/// On-slice transverse pair of a real point.
OffSliceTransverse on_slice(const SpacetimePoint& p) noexcept;

} // namespace genbeam

#endif // GENBEAM_COORDS_HPP
