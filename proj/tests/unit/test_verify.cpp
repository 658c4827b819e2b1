#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "genbeam/construct.hpp"
#include "genbeam/family.hpp"
#include "genbeam/parallel.hpp"
#include "genbeam/verify.hpp"

using namespace genbeam;

namespace {

ComplexField plane_wave(double k, double m)
{
    const double omega = std::sqrt(k * k + m * m);
    return ComplexField({"plane", {}}, [=](const SpacetimePoint& p) { return std::exp(cplx(0, -omega * p.t + k * p.z)); });
}

ComplexField wrap(ComplexField::Evaluator f)
{
    return ComplexField({"test", {}}, std::move(f));
}

const BeamPhysical unit_beam{2.0, 1.0, 1.0};

class WorkersGuard {
public:
    explicit WorkersGuard(const char* value)
    {
        if (const char* old = std::getenv(workers_env_var))
            saved_ = old;
        ::setenv(workers_env_var, value, 1);
    }
    ~WorkersGuard()
    {
        if (saved_.empty())
            ::unsetenv(workers_env_var);
        else
            ::setenv(workers_env_var, saved_.c_str(), 1);
    }

private:
    std::string saved_;
};

} // namespace

TEST(Weights, Moments)
{
    for (int order : {2, 4, 6, 8}) {
        const auto w = second_derivative_weights(order);
        ASSERT_EQ(w.size(), static_cast<std::size_t>(order + 1));
        const int half = order / 2;
        double m0 = 0, m2 = 0, m4 = 0;
        for (int j = -half; j <= half; ++j) {
            const double c = w[static_cast<std::size_t>(j + half)];
            m0 += c;
            m2 += c * j * j;
            m4 += c * j * j * j * j;
        }
        EXPECT_NEAR(m0, 0.0, 1e-13);
        EXPECT_NEAR(m2, 2.0, 1e-13);
        if (order > 2)
            EXPECT_NEAR(m4, 0.0, 1e-12);
    }
    EXPECT_THROW(second_derivative_weights(5), DomainError);
    EXPECT_THROW((FDSpec{3, 0.01}.validate()), DomainError);
    EXPECT_THROW((FDSpec{8, 0.0}.validate()), DomainError);
}

TEST(KGResidual, PlaneWaveIsExact)
{
    const auto f = plane_wave(2.0, 1.0);
    for (const auto& p : sample_acceptance_box(10, 81))
        EXPECT_LE(kg_residual(f, p, 1.0).relative, 1e-10);
}

TEST(KGResidual, WrongMassShowsDefect)
{
    const auto f = plane_wave(2.0, 1.0);
    const SpacetimePoint p{0.3, 0.1, -0.2, 0.7};
    const ResidualReport r = kg_residual(f, p, 1.5);
    const cplx expected = (1.5 * 1.5 - 1.0) * f(p);
    EXPECT_LE(std::abs(r.residual - expected), 1e-8 * std::abs(expected));
}

TEST(KGResidual, GaussianGenerator)
{
    const auto f = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    for (const auto& p : sample_acceptance_box(20, 82))
        EXPECT_LE(kg_residual(f, p, unit_beam.m).relative, 1e-6);
}

TEST(KGResidual, ScaleIsPositive)
{
    const auto zero = wrap([](const SpacetimePoint&) { return cplx{}; });
    const ResidualReport r = kg_residual(zero, {}, 1.0);
    EXPECT_GT(r.scale, 0.0);
    EXPECT_EQ(r.relative, 0.0);
}

TEST(KGResidual, Linearity)
{
    Rng rng(83);
    const auto f = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    const auto g = wrap([](const SpacetimePoint& p) { return g_bg(p, 0.8, 1.0, unit_beam); });
    for (int i = 0; i < 5; ++i) {
        const cplx alpha(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const cplx beta(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const auto h = wrap([&](const SpacetimePoint& p) { return alpha * f(p) + beta * g(p); });
        const SpacetimePoint p = sample_acceptance_box(1, 84 + static_cast<unsigned>(i))[0];
        const cplx lhs = kg_residual(h, p, 1.0).residual;
        const cplx rhs = alpha * kg_residual(f, p, 1.0).residual + beta * kg_residual(g, p, 1.0).residual;
        const double scale = kg_residual(h, p, 1.0).scale;
        EXPECT_LE(std::abs(lhs - rhs), 1e-10 * scale);
    }
}

TEST(KGResidual, EvaluationFailureCarriesPoint)
{
    const auto bad = wrap([](const SpacetimePoint& p) -> cplx {
        if (p.x > 0.5)
            throw DomainError("outside");
        return 1.0;
    });
    try {
        kg_residual(bad, {0, 0.49, 0, 0}, 1.0);
        FAIL() << "expected EvaluationError";
    } catch (const EvaluationError& e) {
        EXPECT_GT(e.point.x, 0.5);
    }
    const auto nan = wrap([](const SpacetimePoint&) { return cplx(NAN, 0); });
    EXPECT_THROW(kg_residual(nan, {}, 1.0), EvaluationError);
}

TEST(VerifyFamily, BesselGaussGenerator)
{
    FamilySpec spec;
    spec.id = FamilyId::g_bg;
    spec.params.bg.b = 1.0;
    spec.params.varphi = 0.4;
    const FamilySummary s = verify_family(spec, 20, 42);
    EXPECT_EQ(s.n_points, 20u);
    EXPECT_LE(s.max_relative, 1e-6);
    EXPECT_LE(s.mean_relative, s.max_relative);
    ASSERT_TRUE(s.worst.has_value());
    EXPECT_EQ(s.worst->relative, s.max_relative);
}

TEST(VerifyFamily, PlaneWaveGenerator)
{
    FamilySpec spec;
    spec.id = FamilyId::g_b;
    for (std::uint64_t seed : {1u, 2u, 99u})
        EXPECT_LE(verify_family(spec, 20, seed).max_relative, 1e-10);
}

TEST(VerifyFamily, Empty)
{
    FamilySpec spec;
    const FamilySummary s = verify_family(spec, 0, 1);
    EXPECT_EQ(s.n_points, 0u);
    EXPECT_EQ(s.max_relative, 0.0);
    EXPECT_FALSE(s.worst.has_value());
}

TEST(VerifyFamily, DeterministicAcrossWorkerCounts)
{
    FamilySpec spec;
    spec.id = FamilyId::exp;
    spec.params.exp = {1.3, 2};
    FamilySummary serial, threaded;
    {
        WorkersGuard g("1");
        serial = verify_family(spec, 16, 5);
    }
    {
        WorkersGuard g("4");
        threaded = verify_family(spec, 16, 5);
    }
    EXPECT_EQ(serial.max_relative, threaded.max_relative);
    EXPECT_EQ(serial.mean_relative, threaded.mean_relative);
    ASSERT_TRUE(serial.worst && threaded.worst);
    EXPECT_EQ(serial.worst->point, threaded.worst->point);
    EXPECT_EQ(serial.worst->residual, threaded.worst->residual);
}

TEST(VerifyFamily, InvalidSpecRejected)
{
    FamilySpec spec;
    spec.params.phys.w0 = -1;
    EXPECT_THROW(verify_family(spec, 3, 1), DomainError);
}

TEST(CompareFields, Identical)
{
    const auto f = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    const auto pts = sample_acceptance_box(10, 85);
    const auto rep = compare_fields(f, f, pts);
    EXPECT_EQ(rep.max_abs_dev, 0.0);
    EXPECT_EQ(rep.max_rel_dev, 0.0);
    EXPECT_EQ(rep.n_points, 10u);
}

TEST(CompareFields, ConstantMode)
{
    const auto b = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    const auto a = wrap([&](const SpacetimePoint& p) { return cplx(0, 2) * b(p); });
    const auto rep = compare_fields(a, b, sample_acceptance_box(10, 86), CompareMode::up_to_constant);
    EXPECT_NEAR(std::abs(rep.constant - cplx(0, 2)), 0.0, 1e-14);
    EXPECT_LE(rep.max_rel_dev, 1e-14);
}

TEST(CompareFields, AbsoluteDeviationSymmetric)
{
    const auto a = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    const auto b = wrap([](const SpacetimePoint& p) { return f_lg({1, 1}, p, unit_beam); });
    const auto pts = sample_acceptance_box(10, 87);
    EXPECT_EQ(compare_fields(a, b, pts).max_abs_dev, compare_fields(b, a, pts).max_abs_dev);
}

TEST(CompareFields, RodriguesEquivalence)
{
    const auto closed = wrap([](const SpacetimePoint& p) { return f_lg({2, 1}, p, unit_beam); });
    const auto built = wrap([](const SpacetimePoint& p) { return rodrigues_lg({2, 1}, p, unit_beam); });
    EXPECT_LE(compare_fields(closed, built, sample_acceptance_box(20, 88)).max_rel_dev, 1e-9);
}

TEST(RotationCheck, FullPeriodPhase)
{
    const auto f = wrap([](const SpacetimePoint& p) { return f_lg({1, 2}, p, unit_beam); });
    const double alphas[] = {pi};
    EXPECT_LE(rotation_eigenphase_check(f, 2, from_cylindrical(1.1, 0.4, 0.2, 0.3), alphas).max_rel_dev, 1e-13);
}

TEST(RotationCheck, QuarterTurn)
{
    const auto f = wrap([](const SpacetimePoint& p) { return f_bg({1.2, 1}, p, unit_beam); });
    const double alphas[] = {pi / 2};
    EXPECT_LE(rotation_eigenphase_check(f, 1, from_cylindrical(0.9, 1.0, -0.4, 0.6), alphas).max_rel_dev, 1e-13);
}

TEST(RotationCheck, ExpFamilyRandomAngles)
{
    Rng rng(89);
    std::vector<double> alphas;
    for (int i = 0; i < 10; ++i)
        alphas.push_back(rng.uniform(0, two_pi));
    const auto f = wrap([](const SpacetimePoint& p) { return f_exp({1.1, 3}, p, unit_beam); });
    EXPECT_LE(rotation_eigenphase_check(f, 3, from_cylindrical(1.6, 2.0, 0.5, -0.3), alphas).max_rel_dev, 1e-10);
}

TEST(RotationCheck, WrongOrderDetected)
{
    const auto f = wrap([](const SpacetimePoint& p) { return f_lg({0, 2}, p, unit_beam); });
    const double alphas[] = {0.7};
    EXPECT_GT(rotation_eigenphase_check(f, 1, from_cylindrical(1.0, 0.0, 0.0, 0.0), alphas).max_rel_dev, 0.1);
}

TEST(RotationCheck, AxisRejected)
{
    const auto f = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    const double alphas[] = {1.0};
    EXPECT_THROW(rotation_eigenphase_check(f, 0, {0, 0, 0, 0}, alphas), DomainError);
}

TEST(ConvergenceProbe, PlaneWaveFourthOrder)
{
    const double steps[] = {0.1, 0.05, 0.025};
    const auto probe = convergence_probe(plane_wave(2.0, 1.0), {0.3, 0.0, 0.0, 0.2}, 1.0, steps, 4);
    ASSERT_TRUE(probe.slope.has_value());
    EXPECT_NEAR(*probe.slope, 4.0, 0.5);
    EXPECT_FALSE(probe.floor_reached);
    ASSERT_EQ(probe.pairwise_slopes.size(), 2u);
}

TEST(ConvergenceProbe, FloorFlagged)
{
    const double steps[] = {1e-4, 5e-5, 2.5e-5};
    const auto probe = convergence_probe(plane_wave(2.0, 1.0), {0.3, 0.0, 0.0, 0.2}, 1.0, steps, 8);
    EXPECT_TRUE(probe.floor_reached);
    EXPECT_FALSE(probe.slope.has_value());
}

TEST(ConvergenceProbe, NonSolutionPlateaus)
{
    const double steps[] = {0.1, 0.05, 0.025};
    const auto f = wrap([](const SpacetimePoint& p) { return g_lg(p, unit_beam); });
    const auto probe = convergence_probe(f, {0.3, 0.5, -0.2, 0.1}, 1.7, steps, 8);
    ASSERT_TRUE(probe.slope.has_value());
    EXPECT_NEAR(*probe.slope, 0.0, 0.1);
}

TEST(ConvergenceProbe, StepValidation)
{
    const double ascending[] = {0.01, 0.02};
    EXPECT_THROW(convergence_probe(plane_wave(1, 1), {}, 1.0, ascending), DomainError);
    const double negative[] = {0.1, -0.1};
    EXPECT_THROW(convergence_probe(plane_wave(1, 1), {}, 1.0, negative), DomainError);
}
