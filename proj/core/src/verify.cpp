#include "genbeam/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "genbeam/parallel.hpp"

namespace genbeam {

namespace {

constexpr std::array<double, 3> weights2 = {1.0, -2.0, 1.0};
constexpr std::array<double, 5> weights4 = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
constexpr std::array<double, 7> weights6 = {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
constexpr std::array<double, 9> weights8 = {-1.0 / 560, 8.0 / 315, -1.0 / 5,  8.0 / 5,   -205.0 / 72,
                                            8.0 / 5,    -1.0 / 5,   8.0 / 315, -1.0 / 560};

constexpr double scale_floor = 1e-300;

struct StencilResult {
    ResidualReport report;
    double max_sample = 0.0;
};

std::string describe_point(const SpacetimePoint& p)
{
    return "(t=" + std::to_string(p.t) + ", x=" + std::to_string(p.x) + ", y=" + std::to_string(p.y) +
           ", z=" + std::to_string(p.z) + ")";
}

StencilResult kg_stencil(const ComplexField& field, const SpacetimePoint& p, double m, const FDSpec& fd)
{
    fd.validate();
    const auto w = second_derivative_weights(fd.order);
    const int half = fd.order / 2;
    const double h2 = fd.step * fd.step;

    StencilResult out;
    auto eval = [&](const SpacetimePoint& q) {
        cplx v;
        try {
            v = field(q);
        } catch (const std::exception& e) {
            throw EvaluationError("stencil evaluation failed at " + describe_point(q) + ": " + e.what(), q);
        }
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw EvaluationError("non-finite field value at " + describe_point(q), q);
        out.max_sample = std::max(out.max_sample, std::abs(v));
        return v;
    };

    const cplx f0 = eval(p);
    // axis order t, x, y, z; signature (+, -, -, -)
    std::array<cplx, 4> second{};
    for (int axis = 0; axis < 4; ++axis) {
        cplx acc = w[static_cast<std::size_t>(half)] * f0;
        for (int j = 1; j <= half; ++j) {
            SpacetimePoint lo = p, hi = p;
            double* clo = axis == 0 ? &lo.t : axis == 1 ? &lo.x : axis == 2 ? &lo.y : &lo.z;
            double* chi = axis == 0 ? &hi.t : axis == 1 ? &hi.x : axis == 2 ? &hi.y : &hi.z;
            *clo -= j * fd.step;
            *chi += j * fd.step;
            acc += w[static_cast<std::size_t>(half + j)] * (eval(lo) + eval(hi));
        }
        second[static_cast<std::size_t>(axis)] = acc / h2;
    }

    const cplx mass_term = m * m * f0;
    double scale = std::abs(mass_term);
    for (const cplx& d : second)
        scale = std::max(scale, std::abs(d));
    scale += scale_floor;

    out.report.point = p;
    out.report.residual = second[0] - second[1] - second[2] - second[3] + mass_term;
    out.report.scale = scale;
    out.report.relative = std::abs(out.report.residual) / scale;
    return out;
}

} // namespace

void FDSpec::validate() const
{
    if (order != 2 && order != 4 && order != 6 && order != 8)
        throw DomainError("FDSpec: order must be one of 2, 4, 6, 8");
    if (!(step > 0.0) || !std::isfinite(step))
        throw DomainError("FDSpec: step must be finite and > 0");
}

std::span<const double> second_derivative_weights(int order)
{
    switch (order) {
    case 2: return weights2;
    case 4: return weights4;
    case 6: return weights6;
    case 8: return weights8;
    default: throw DomainError("second_derivative_weights: order must be 2, 4, 6 or 8");
    }
}

ResidualReport kg_residual(const ComplexField& field, const SpacetimePoint& p, double m, const FDSpec& fd)
{
    return kg_stencil(field, p, m, fd).report;
}

FamilySummary verify_family(const FamilySpec& spec, std::size_t n_points, std::uint64_t seed, const FDSpec& fd)
{
    fd.validate();
    const ComplexField field = make_field(spec);
    const std::vector<SpacetimePoint> points = sample_acceptance_box(n_points, seed);
    std::vector<ResidualReport> reports(n_points);
    parallel_for(n_points, [&](std::size_t i) { reports[i] = kg_residual(field, points[i], spec.mass(), fd); });

    FamilySummary summary;
    summary.n_points = n_points;
    double total = 0.0;
    for (const ResidualReport& r : reports) {
        total += r.relative;
        if (!summary.worst || r.relative > summary.max_relative) {
            summary.max_relative = r.relative;
            summary.worst = r;
        }
    }
    if (n_points > 0)
        summary.mean_relative = total / static_cast<double>(n_points);
    return summary;
}

ComparisonReport compare_fields(const ComplexField& a, const ComplexField& b, std::span<const SpacetimePoint> points,
                                CompareMode mode)
{
    std::vector<cplx> va(points.size()), vb(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        va[i] = a(points[i]);
        vb[i] = b(points[i]);
    });

    ComparisonReport rep;
    rep.n_points = points.size();
    if (mode == CompareMode::up_to_constant) {
        // c = sum conj(b) a / sum |b|^2
        cplx num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            num += std::conj(vb[i]) * va[i];
            den += std::norm(vb[i]);
        }
        rep.constant = den > 0.0 ? num / den : cplx{1.0, 0.0};
        for (cplx& v : vb)
            v *= rep.constant;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dev = std::abs(va[i] - vb[i]);
        const double rel = dev / std::max({std::abs(va[i]), std::abs(vb[i]), scale_floor});
        if (dev > rep.max_abs_dev)
            rep.max_abs_dev = dev;
        if (i == 0 || rel > rep.max_rel_dev) {
            rep.max_rel_dev = rel;
            rep.argmax_point = points[i];
        }
    }
    return rep;
}

ComparisonReport rotation_eigenphase_check(const ComplexField& field, int order, const SpacetimePoint& base,
                                           std::span<const double> alphas)
{
    const LightConeCoords lc = to_lightcone(base);
    if (!(lc.rho > 0.0))
        throw DomainError("rotation_eigenphase_check: base point must be off the axis");

    ComparisonReport rep;
    rep.n_points = alphas.size();
    const cplx reference = field(base);
    for (double alpha : alphas) {
        const SpacetimePoint rotated = from_cylindrical(lc.rho, lc.phi + alpha, base.z, base.t);
        const cplx lhs = field(rotated);
        const cplx rhs = std::polar(1.0, order * alpha) * reference;
        const double dev = std::abs(lhs - rhs);
        const double rel = dev / std::max({std::abs(lhs), std::abs(rhs), scale_floor});
        rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
        if (rel >= rep.max_rel_dev) {
            rep.max_rel_dev = rel;
            rep.argmax_point = rotated;
        }
    }
    return rep;
}

ConvergenceProbe convergence_probe(const ComplexField& field, const SpacetimePoint& p, double m,
                                   std::span<const double> steps, int fd_order)
{
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(steps[i] > 0.0))
            throw DomainError("convergence_probe: steps must be positive");
        if (i > 0 && !(steps[i] < steps[i - 1]))
            throw DomainError("convergence_probe: steps must be strictly descending");
    }
    double weight_sum = 0.0;
    for (double w : second_derivative_weights(fd_order))
        weight_sum += std::abs(w);

    ConvergenceProbe probe;
    for (double h : steps) {
        const StencilResult r = kg_stencil(field, p, m, FDSpec{fd_order, h});
        // four axes contribute independent rounding of this size
        const double noise = 4.0 * std::numeric_limits<double>::epsilon() * weight_sum * r.max_sample /
                             (h * h * r.report.scale);
        probe.reports.push_back(r.report);
        const bool floor = r.report.relative < 10.0 * noise;
        probe.at_floor.push_back(floor);
        probe.floor_reached = probe.floor_reached || floor;
    }
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const double num = std::log(probe.reports[i - 1].relative / probe.reports[i].relative);
        probe.pairwise_slopes.push_back(num / std::log(steps[i - 1] / steps[i]));
    }

    // least squares of log(relative) against log(h) over the pre-floor prefix
    std::vector<std::pair<double, double>> xy;
    for (std::size_t i = 0; i < steps.size() && !probe.at_floor[i]; ++i)
        xy.emplace_back(std::log(steps[i]), std::log(probe.reports[i].relative));
    if (xy.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : xy) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(xy.size());
        probe.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return probe;
}

} // namespace genbeam
