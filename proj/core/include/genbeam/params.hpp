#ifndef GENBEAM_PARAMS_HPP
#define GENBEAM_PARAMS_HPP

namespace genbeam {

/// Shared physical parameters. E enters only the light-cone phase split and
/// the envelope a(t+); m is the Klein-Gordon mass.
struct BeamPhysical {
    double E = 2.0;
    double m = 1.0;
    double w0 = 1.0;

    void validate() const;  // E > 0, w0 > 0, m >= 0
};

struct LGIndices {
    int n = 0;  // radial
    int l = 0;  // azimuthal
    void validate() const;
};

struct HGIndices {
    int mx = 0;
    int ny = 0;
    void validate() const;
};

/// Exponential family: longitudinal wavenumber q and number k of x- derivatives.
struct ExpParams {
    double q = 1.0;
    int k = 1;
    void validate() const;
};

struct BesselParams {
    double p_perp = 1.0;
    double p_z = 0.0;
    int l = 0;
    void validate() const;
};

struct BGParams {
    double b = 0.0;
    int l = 0;
    void validate() const;
};

} // namespace genbeam

#endif // GENBEAM_PARAMS_HPP
