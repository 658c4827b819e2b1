#ifndef GENBEAM_SPECFUN_HPP
#define GENBEAM_SPECFUN_HPP

#include "genbeam/coords.hpp"

namespace genbeam {

/// Truncation control for power series.
struct SeriesControl {
    int max_terms = 200;
    double tail_tolerance = 1e-16;  // relative

    void validate() const;
};

/// Largest |z| accepted by bessel_j.
inline constexpr double bessel_j_max_abs_arg = 100.0;

/// Generalized Laguerre polynomial L_n^alpha(z) by the three-term recurrence in n.
cplx laguerre(int n, int alpha, cplx z);

/// Physicists' Hermite polynomial H_m(z) by upward recurrence.
cplx hermite(int m, cplx z);

/**
 * Bessel function of the first kind J_l(z), integer order, complex argument.
 *
 * For |z| <= 8 the ascending series is summed until the geometric tail bound
 * drops below ctl.tail_tolerance relative to the partial sum; ConvergenceError
 * is raised if ctl.max_terms is exhausted first. Larger arguments use Miller's
 * backward recurrence normalized against exp(-iz) (Im z >= 0) or exp(iz), the
 * choice that keeps the normalization sum free of cancellation.
 *
 * Negative orders use J_{-l} = (-1)^l J_l. Throws DomainError for
 * |z| > bessel_j_max_abs_arg.
 */
cplx bessel_j(int l, cplx z, const SeriesControl& ctl = {});

/**
 * Macdonald function K_1(z) for Re z > 0.
 *
 * |z| <= 2: ascending series (1/z + log(z/2) I_1(z) - digamma sum).
 * |z| > 2: Steed's continued fraction for the ratio K_1/K_0 together with the
 * normalization sum, which converges everywhere in the right half plane.
 *
 * Throws DomainError for Re z <= 0.
 */
cplx macdonald_k1(cplx z);

namespace detail {

// Individual branches, exposed so their overlap can be checked.
cplx bessel_j_series(int l, cplx z, const SeriesControl& ctl);
cplx bessel_j_miller(int l, cplx z);
cplx macdonald_k1_series(cplx z);
cplx macdonald_k1_continued_fraction(cplx z);

} // namespace detail

} // namespace genbeam

#endif // GENBEAM_SPECFUN_HPP
