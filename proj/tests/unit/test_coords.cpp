#include <gtest/gtest.h>

#include <cmath>

#include "genbeam/coords.hpp"
#include "genbeam/errors.hpp"
#include "genbeam/family.hpp"

using namespace genbeam;

TEST(Coords, OriginMapsToZero)
{
    const LightConeCoords lc = to_lightcone({0, 0, 0, 0});
    EXPECT_EQ(lc.t_plus, 0.0);
    EXPECT_EQ(lc.t_minus, 0.0);
    EXPECT_EQ(lc.x_plus, cplx{});
    EXPECT_EQ(lc.x_minus, cplx{});
    EXPECT_EQ(lc.rho, 0.0);
    EXPECT_EQ(lc.phi, 0.0);
}

TEST(Coords, LightConeTimes)
{
    const LightConeCoords lc = to_lightcone({1, 0, 0, 1});
    EXPECT_EQ(lc.t_plus, 2.0);
    EXPECT_EQ(lc.t_minus, 0.0);
}

TEST(Coords, DiagonalTransversePoint)
{
    const LightConeCoords lc = to_lightcone({0, 1, 1, 0});
    EXPECT_EQ(lc.x_plus, cplx(1, 1));
    EXPECT_EQ(lc.x_minus, cplx(1, -1));
    EXPECT_NEAR(lc.rho, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(lc.phi, pi / 4, 1e-15);
}

TEST(Coords, PhiIsNormalized)
{
    EXPECT_NEAR(to_lightcone({0, 0, -1, 0}).phi, 1.5 * pi, 1e-15);
    EXPECT_NEAR(to_lightcone({0, -1, -1e-300, 0}).phi, pi, 1e-12);
    EXPECT_EQ(normalize_angle(two_pi), 0.0);
    EXPECT_NEAR(normalize_angle(-0.5), two_pi - 0.5, 1e-15);
    for (double phi : {-20.0, -1.0, 0.0, 3.0, 7.0, 100.0}) {
        const double r = normalize_angle(phi);
        EXPECT_GE(r, 0.0);
        EXPECT_LT(r, two_pi);
    }
}

TEST(Coords, FromCylindrical)
{
    const SpacetimePoint a = from_cylindrical(1, 0, 0, 0);
    EXPECT_EQ(a.x, 1.0);
    EXPECT_EQ(a.y, 0.0);

    const SpacetimePoint b = from_cylindrical(2, pi, 3, 1);
    EXPECT_NEAR(b.x, -2.0, 1e-15);
    EXPECT_NEAR(b.y, 0.0, 1e-15);
    EXPECT_EQ(b.z, 3.0);
    EXPECT_EQ(b.t, 1.0);

    EXPECT_THROW(from_cylindrical(-1, 0, 0, 0), DomainError);
}

TEST(Coords, CylindricalRoundTrip)
{
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const double rho = rng.uniform(1e-3, 10);
        const double phi = rng.uniform(-10, 10);
        const double z = rng.uniform(-5, 5);
        const double t = rng.uniform(-5, 5);
        const LightConeCoords lc = to_lightcone(from_cylindrical(rho, phi, z, t));
        EXPECT_NEAR(lc.rho, rho, 1e-14 * rho);
        const double dphi = std::remainder(lc.phi - phi, two_pi);
        EXPECT_NEAR(dphi, 0.0, 1e-12);
        const SpacetimePoint back = from_cylindrical(lc.rho, lc.phi, z, t);
        const SpacetimePoint orig = from_cylindrical(rho, phi, z, t);
        EXPECT_NEAR(back.x, orig.x, 1e-13);
        EXPECT_NEAR(back.y, orig.y, 1e-13);
    }
}

TEST(Coords, StructuralProducts)
{
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const SpacetimePoint p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const LightConeCoords lc = to_lightcone(p);
        const double rho2 = p.x * p.x + p.y * p.y;
        const cplx prod = lc.x_plus * lc.x_minus;
        EXPECT_NEAR(prod.real(), rho2, 8 * std::numeric_limits<double>::epsilon() * rho2);
        EXPECT_EQ(prod.imag(), 0.0);
        EXPECT_NEAR(lc.t_plus * lc.t_minus, p.t * p.t - p.z * p.z, 1e-13);
    }
}

TEST(Coords, OnSliceIsConjugatePair)
{
    const OffSliceTransverse xs = on_slice({0.3, 1.5, -2.0, 4.0});
    EXPECT_EQ(xs.x_plus, cplx(1.5, -2.0));
    EXPECT_EQ(xs.x_minus, std::conj(xs.x_plus));
}

TEST(Coords, FiniteCheck)
{
    EXPECT_TRUE((SpacetimePoint{0, 1, 2, 3}.is_finite()));
    EXPECT_FALSE((SpacetimePoint{0, NAN, 2, 3}.is_finite()));
    EXPECT_FALSE((SpacetimePoint{INFINITY, 0, 0, 0}.is_finite()));
}
