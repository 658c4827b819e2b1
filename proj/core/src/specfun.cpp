#include "genbeam/specfun.hpp"

#include <cmath>
#include <string>

#include "genbeam/errors.hpp"

namespace genbeam {

namespace {

constexpr double euler_gamma = 0.57721566490153286061;
constexpr double series_threshold = 8.0;
constexpr double k1_series_radius = 2.0;
constexpr int steed_max_iterations = 20000;

} // namespace

namespace detail {

cplx bessel_j_series(int l, cplx z, const SeriesControl& ctl)
{
    const cplx half = 0.5 * z;
    cplx term = 1.0;
    for (int j = 1; j <= l; ++j)
        term *= half / static_cast<double>(j);
    if (term == 0.0)
        return 0.0;

    const cplx q = -half * half;
    const double abs_q = std::abs(q);
    cplx sum = term;
    for (int k = 1; k < ctl.max_terms; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + l));
        sum += term;
        // once the term ratio r < 1 the tail is bounded by |term| r / (1 - r)
        const double r = abs_q / (static_cast<double>(k + 1) * static_cast<double>(k + 1 + l));
        if (r < 0.5 && std::abs(term) * r / (1.0 - r) <= ctl.tail_tolerance * std::abs(sum))
            return sum;
    }
    throw ConvergenceError("bessel_j: series did not converge within " +
                           std::to_string(ctl.max_terms) + " terms");
}

cplx bessel_j_miller(int l, cplx z)
{
    const double az = std::abs(z);
    int start = static_cast<int>(std::ceil(az)) + l + 60;
    start += start % 2;

    // exp(-iz) = J0 + 2 sum (-i)^k J_k ; exp(iz) = J0 + 2 sum i^k J_k
    const bool upper = z.imag() >= 0.0;
    const cplx unit = upper ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
    const cplx target = std::exp(upper ? cplx{z.imag(), -z.real()} : cplx{-z.imag(), z.real()});

    cplx unit_power[4] = {1.0, unit, unit * unit, unit * unit * unit};
    const cplx two_over_z = 2.0 / z;

    cplx next = 0.0;   // J_{k+1}
    cplx cur = 1e-30;  // J_k, arbitrary scale
    cplx norm = 0.0;
    cplx wanted = 0.0;
    for (int k = start; k >= 1; --k) {
        norm += 2.0 * unit_power[k % 4] * cur;
        if (k == l)
            wanted = cur;
        const cplx prev = static_cast<double>(k) * two_over_z * cur - next;
        next = cur;
        cur = prev;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            wanted *= 1e-250;
        }
    }
    norm += cur;
    if (l == 0)
        wanted = cur;
    return wanted * (target / norm);
}

// Ascending series: K1 = 1/z + log(z/2) I1(z) - (z/4) sum (psi(k+1)+psi(k+2)) (z^2/4)^k / (k!(k+1)!)
cplx macdonald_k1_series(cplx z)
{
    const cplx q = 0.25 * z * z;
    cplx term = 1.0;  // (z^2/4)^k / (k!(k+1)!)
    cplx i1 = 0.0;
    cplx psi_sum = 0.0;
    double harmonic = 0.0;  // H_k
    for (int k = 0; k < 100; ++k) {
        if (k > 0) {
            term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
            harmonic += 1.0 / k;
        }
        const double psi_pair = 2.0 * (harmonic - euler_gamma) + 1.0 / (k + 1);
        i1 += term;
        psi_sum += psi_pair * term;
        if (k > 2 && std::abs(term) < 1e-18 * std::abs(i1))
            break;
    }
    i1 *= 0.5 * z;
    return 1.0 / z + std::log(0.5 * z) * i1 - 0.25 * z * psi_sum;
}

// Steed's algorithm (CF2) for order zero; returns K1.
cplx macdonald_k1_continued_fraction(cplx z)
{
    const double a1 = 0.25;
    cplx b = 2.0 * (1.0 + z);
    cplx d = 1.0 / b;
    cplx h = d;
    cplx delh = d;
    cplx q1 = 0.0;
    cplx q2 = 1.0;
    cplx q = a1;
    double c = a1;
    double a = -a1;
    cplx s = 1.0 + q * delh;
    int i = 1;
    for (; i < steed_max_iterations; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) < 1e-17 * std::abs(s) && std::abs(delh) < 1e-17 * std::abs(h))
            break;
    }
    if (i == steed_max_iterations)
        throw ConvergenceError("macdonald_k1: continued fraction did not converge");
    const cplx k0 = std::sqrt(pi / (2.0 * z)) * std::exp(-z) / s;
    return k0 * (z + 0.5 - a1 * h) / z;
}

} // namespace detail

void SeriesControl::validate() const
{
    if (max_terms < 1 || !(tail_tolerance > 0.0))
        throw DomainError("SeriesControl: need max_terms >= 1 and tail_tolerance > 0");
}

cplx laguerre(int n, int alpha, cplx z)
{
    if (n < 0 || alpha < 0)
        throw DomainError("laguerre: n and alpha must be >= 0");
    cplx prev = 1.0;
    if (n == 0)
        return prev;
    cplx cur = 1.0 + static_cast<double>(alpha) - z;
    for (int k = 1; k < n; ++k) {
        const cplx next = ((2.0 * k + 1.0 + alpha - z) * cur - static_cast<double>(k + alpha) * prev) /
                          static_cast<double>(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx hermite(int m, cplx z)
{
    if (m < 0)
        throw DomainError("hermite: order must be >= 0");
    cplx prev = 1.0;
    if (m == 0)
        return prev;
    cplx cur = 2.0 * z;
    for (int k = 1; k < m; ++k) {
        const cplx next = 2.0 * z * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

cplx bessel_j(int l, cplx z, const SeriesControl& ctl)
{
    ctl.validate();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("bessel_j: non-finite argument");
    if (std::abs(z) > bessel_j_max_abs_arg)
        throw DomainError("bessel_j: |z| exceeds the supported range " +
                          std::to_string(bessel_j_max_abs_arg));
    const int order = l < 0 ? -l : l;
    const double sign = (l < 0 && order % 2 == 1) ? -1.0 : 1.0;
    if (z == 0.0)
        return order == 0 ? 1.0 : 0.0;
    const cplx value = std::abs(z) <= series_threshold ? detail::bessel_j_series(order, z, ctl)
                                                       : detail::bessel_j_miller(order, z);
    return sign * value;
}

cplx macdonald_k1(cplx z)
{
    if (!(z.real() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("macdonald_k1: requires finite z with Re z > 0");
    return std::abs(z) <= k1_series_radius ? detail::macdonald_k1_series(z) : detail::macdonald_k1_continued_fraction(z);
}

} // namespace genbeam
