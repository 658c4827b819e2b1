#include <gtest/gtest.h>

#include <cmath>

#include "genbeam/beams.hpp"
#include "genbeam/construct.hpp"
#include "genbeam/errors.hpp"
#include "genbeam/family.hpp"
#include "genbeam/specfun.hpp"
#include "oracles.hpp"

using namespace genbeam;
using oracle::relative_error;

namespace {

const BeamPhysical unit_beam{2.0, 1.0, 1.0};

cplx cube(cplx z)
{
    return z * z * z;
}

} // namespace

TEST(CauchyDerivative, Exponential)
{
    auto f = [](cplx z) { return std::exp(z); };
    EXPECT_NEAR(std::abs(cauchy_derivative(f, 0.0, 5, 1.0, 32) - 1.0), 0.0, 1e-13);
}

TEST(CauchyDerivative, Cubic)
{
    EXPECT_NEAR(std::abs(cauchy_derivative(cube, 0.0, 3, 1.0, 32) - 6.0), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(cauchy_derivative(cube, 0.0, 4, 1.0, 32)), 0.0, 1e-13);
}

TEST(CauchyDerivative, SpectralInNodes)
{
    auto f = [](cplx z) { return std::exp(z); };
    EXPECT_LT(std::abs(cauchy_derivative(f, 0.0, 6, 1.0, 64) - cauchy_derivative(f, 0.0, 6, 1.0, 32)), 1e-12);
    EXPECT_LT(std::abs(cauchy_derivative(f, 0.0, 6, 1.0, 56) - cauchy_derivative(f, 0.0, 6, 1.0, 112)), 1e-12);
}

TEST(CauchyDerivative, GaussianInXPlus)
{
    // d/dx+ exp(-x+ x- / a) / a = -(x- / a) G
    for (const auto& p : sample_acceptance_box(20, 61)) {
        const double tp = p.t + p.z, tm = p.t - p.z;
        const OffSliceTransverse c = on_slice(p);
        const cplx a = envelope_a(tp, unit_beam);
        auto f = [&](cplx xp) { return g_lg_offslice({xp, c.x_minus}, tp, tm, unit_beam); };
        const cplx expected = -(c.x_minus / a) * g_lg(p, unit_beam);
        const double r = 0.5 * std::sqrt(std::abs(a));
        EXPECT_LE(std::abs(cauchy_derivative(f, c.x_plus, 1, r, 32) - expected),
                  1e-11 * std::max(1.0, std::abs(expected)));
    }
}

TEST(CauchyDerivative, AdaptiveHighOrder)
{
    auto f = [](cplx z) { return std::exp(3.0 * z); };
    const CauchyEstimate est = cauchy_derivative_adaptive(f, 0.2, 10, 0.1, 64);
    const cplx expected = std::pow(3.0, 10) * std::exp(0.6);
    EXPECT_LE(relative_error(est.value, expected), 1e-13);
    EXPECT_GT(est.radius, 0.1);
}

TEST(CauchyDerivative, AdaptiveVanishingDerivative)
{
    // all derivatives above the second vanish; the error must stay absolute-small
    auto f = [](cplx z) { return 1.0 + z * z; };
    const CauchyEstimate est = cauchy_derivative_adaptive(f, 0.0, 5, 0.5, 64);
    EXPECT_LT(std::abs(est.value), 1e-12);
}

TEST(ContourSpec, Nodes)
{
    ContourSpec spec;
    EXPECT_EQ(spec.resolve_nodes(3), 32);
    EXPECT_EQ(spec.resolve_nodes(12), 52);
    spec.nodes = 16;
    EXPECT_THROW(spec.resolve_nodes(4), DomainError);
    spec.nodes = 20;
    EXPECT_EQ(spec.resolve_nodes(4), 20);
    spec.radius_scale = -1;
    EXPECT_THROW(spec.resolve_radius(1.0), DomainError);
}

TEST(MixedPartial, ZeroOrders)
{
    const SpacetimePoint p{0.3, 0.7, -0.4, 0.1};
    auto g = [&](const OffSliceTransverse& xs) { return g_lg_offslice(xs, p.t + p.z, p.t - p.z, unit_beam); };
    EXPECT_EQ(mixed_partial_offslice(g, p, 0, 0, 1.0, {}), g_lg(p, unit_beam));
}

TEST(MixedPartial, FirstOrderInXMinus)
{
    for (const auto& p : sample_acceptance_box(20, 62)) {
        const double tp = p.t + p.z;
        auto g = [&](const OffSliceTransverse& xs) { return g_lg_offslice(xs, tp, p.t - p.z, unit_beam); };
        const cplx a = envelope_a(tp, unit_beam);
        const cplx expected = -(on_slice(p).x_plus / a) * g_lg(p, unit_beam);
        const cplx got = mixed_partial_offslice(g, p, 1, 0, std::sqrt(std::abs(a)), {});
        EXPECT_LE(std::abs(got - expected), 1e-11 * std::max(1.0, std::abs(expected)));
    }
}

TEST(MixedPartial, ExchangeSymmetry)
{
    // G(x+, x-) is symmetric, and swapping x+ with x- maps y to -y on the slice
    for (const auto& p : sample_acceptance_box(10, 63)) {
        const double tp = p.t + p.z;
        const double scale = std::sqrt(std::abs(envelope_a(tp, unit_beam)));
        auto g = [&](const OffSliceTransverse& xs) { return g_lg_offslice(xs, tp, p.t - p.z, unit_beam); };
        const SpacetimePoint mirrored{p.t, p.x, -p.y, p.z};
        const cplx lhs = mixed_partial_offslice(g, p, 3, 1, scale, {});
        const cplx rhs = mixed_partial_offslice(g, mirrored, 1, 3, scale, {});
        EXPECT_LE(relative_error(lhs, rhs), 1e-10);
    }
}

TEST(MixedPartial, RejectsNegativeOrder)
{
    auto g = [](const OffSliceTransverse&) { return cplx{1.0}; };
    EXPECT_THROW(mixed_partial_offslice(g, {}, -1, 0, 1.0, {}), DomainError);
}

TEST(RodriguesLG, TrivialCases)
{
    for (const auto& p : sample_acceptance_box(10, 64))
        EXPECT_EQ(rodrigues_lg({0, 0}, p, unit_beam), g_lg(p, unit_beam));
    EXPECT_NEAR(std::abs(rodrigues_lg({0, 1}, {0, 1, 0, 0}, unit_beam) - std::exp(-1.0)), 0.0, 1e-13);
}

TEST(RodriguesLG, MatchesClosedForm)
{
    for (const auto& p : sample_acceptance_box(20, 65))
        EXPECT_LE(relative_error(rodrigues_lg({3, 2}, p, unit_beam), f_lg({3, 2}, p, unit_beam)), 1e-9);
}

TEST(RodriguesLG, RadiusIndependence)
{
    ContourSpec half;
    half.radius_scale = 0.25;
    for (const auto& p : sample_acceptance_box(5, 66))
        for (int n = 0; n <= 4; ++n)
            for (int l = 0; n + l <= 8; ++l)
                EXPECT_LE(relative_error(rodrigues_lg({n, l}, p, unit_beam), rodrigues_lg({n, l}, p, unit_beam, half)),
                          1e-10)
                    << "n=" << n << " l=" << l;
}

TEST(RodriguesLG, FixedRadiusModeOnBenignPoint)
{
    ContourSpec fixed;
    fixed.adaptive = false;
    const SpacetimePoint p{0.2, 0.6, 0.3, -0.1};
    EXPECT_LE(relative_error(rodrigues_lg({2, 2}, p, unit_beam, fixed), f_lg({2, 2}, p, unit_beam)), 1e-9);
}

TEST(RodriguesLG, Deterministic)
{
    const SpacetimePoint p{1.2, -0.8, 2.1, 0.4};
    EXPECT_EQ(rodrigues_lg({4, 4}, p, unit_beam), rodrigues_lg({4, 4}, p, unit_beam));
}

TEST(RodriguesHG, TrivialCases)
{
    for (const auto& p : sample_acceptance_box(10, 67))
        EXPECT_EQ(rodrigues_hg({0, 0}, p, unit_beam), g_hg(p, unit_beam));
    EXPECT_NEAR(std::abs(rodrigues_hg({1, 0}, {0, 1, 0, 0}, unit_beam) - 2 * std::exp(-1.0)), 0.0, 1e-13);
}

TEST(RodriguesHG, MatchesClosedForm)
{
    for (const auto& p : sample_acceptance_box(20, 68))
        EXPECT_LE(relative_error(rodrigues_hg({4, 2}, p, unit_beam), f_hg({4, 2}, p, unit_beam)), 1e-9);
}

TEST(AngularQuadrature, Constants)
{
    auto one = [](double) { return cplx{1.0}; };
    EXPECT_NEAR(std::abs(angular_quadrature(one, 0) - two_pi), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(angular_quadrature(one, 3)), 0.0, 1e-14);
}

TEST(AngularQuadrature, JacobiAngerZerothOrder)
{
    for (double x = 0.0; x <= 10.0; x += 0.25) {
        const cplx got = angular_quadrature([x](double th) { return std::exp(cplx(0, x * std::cos(th))); }, 0);
        EXPECT_LE(std::abs(got - two_pi * bessel_j(0, x)), 1e-12) << "x=" << x;
    }
}

TEST(AngularQuadrature, NodeCountValidation)
{
    EXPECT_THROW(angular_quadrature([](double) { return cplx{1.0}; }, 0, QuadratureSpec{8}), DomainError);
}

TEST(BesselQuadrature, TrivialCases)
{
    const SpacetimePoint axis{0.4, 0, 0, 0.9};
    for (int l = 1; l <= 5; ++l)
        EXPECT_LT(std::abs(bessel_from_quadrature({1.2, 0.3, l}, axis, 1.0)), 1e-14);
    EXPECT_LE(relative_error(bessel_from_quadrature({1.2, 0.3, 0}, axis, 1.0), f_bessel({1.2, 0.3, 0}, axis, 1.0)),
              1e-14);
}

TEST(BesselQuadrature, NearAxisKeepsRelativeAccuracy)
{
    // |J_5(0.05)| ~ 2e-11: plain summation of unit-size terms would lose everything
    const SpacetimePoint p = from_cylindrical(0.05, 0.7, 0.3, -0.2);
    for (int l : {-5, -3, 1, 4, 5})
        EXPECT_LE(relative_error(bessel_from_quadrature({1.0, 0.2, l}, p, 1.0), f_bessel({1.0, 0.2, l}, p, 1.0)),
                  1e-12)
            << "l=" << l;
}

TEST(BesselQuadrature, NodeDoublingStable)
{
    Rng rng(69);
    for (const auto& p : sample_acceptance_box(20, 69)) {
        const BesselParams prm{rng.uniform(0.1, 3), rng.uniform(-3, 3), rng.integer(-5, 5)};
        EXPECT_LE(relative_error(bessel_from_quadrature(prm, p, 1.0, {256}), bessel_from_quadrature(prm, p, 1.0, {512})),
                  1e-12);
        const BGParams bg{rng.uniform(0, 2), rng.integer(0, 4)};
        EXPECT_LE(relative_error(bg_from_quadrature(bg, p, unit_beam, {256}), bg_from_quadrature(bg, p, unit_beam, {512})),
                  1e-12);
    }
}

TEST(BGQuadrature, TrivialCases)
{
    for (const auto& p : sample_acceptance_box(10, 70)) {
        EXPECT_LE(relative_error(bg_from_quadrature({0.0, 0}, p, unit_beam), two_pi * g_lg(p, unit_beam)), 1e-14);
        EXPECT_LT(std::abs(bg_from_quadrature({0.0, 2}, p, unit_beam)), 1e-14 * std::abs(g_lg(p, unit_beam)) + 1e-300);
    }
}
