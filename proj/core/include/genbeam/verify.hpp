#ifndef GENBEAM_VERIFY_HPP
#define GENBEAM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genbeam/beams.hpp"
#include "genbeam/errors.hpp"
#include "genbeam/family.hpp"

namespace genbeam {

/// Central-difference stencil for second derivatives.
struct FDSpec {
    int order = 8;  // 2, 4, 6 or 8
    double step = 1e-2;

    void validate() const;
};

/// Klein-Gordon residual (d_t^2 - d_x^2 - d_y^2 - d_z^2 + m^2) f at one point.
/// scale = max(|m^2 f|, largest single-axis second derivative) + 1e-300.
struct ResidualReport {
    SpacetimePoint point;
    cplx residual{};
    double scale = 0.0;
    double relative = 0.0;
};

struct ComparisonReport {
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;
    SpacetimePoint argmax_point;
    std::size_t n_points = 0;
    cplx constant{1.0, 0.0};  // fitted c in up-to-constant mode, 1 otherwise
};

enum class CompareMode { exact, up_to_constant };

/// Field evaluation failed somewhere on a stencil or sample set.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, SpacetimePoint where) : Error(what), point(where) {}
    SpacetimePoint point;
};

/// Central-difference weights c_{-h..h} for f'' with the given even order.
std::span<const double> second_derivative_weights(int order);

ResidualReport kg_residual(const ComplexField& field, const SpacetimePoint& p, double m, const FDSpec& fd = {});

struct FamilySummary {
    std::size_t n_points = 0;
    double max_relative = 0.0;
    double mean_relative = 0.0;
    std::optional<ResidualReport> worst;
};

/// Residual campaign on sample_acceptance_box(n_points, seed). Points are
/// evaluated in parallel; the reduction runs in point order.
FamilySummary verify_family(const FamilySpec& spec, std::size_t n_points, std::uint64_t seed, const FDSpec& fd = {});

/// Exact mode: max |a-b| and max |a-b| / max(|a|, |b|, 1e-300).
/// Constant mode: c minimizing sum |a - c b|^2 first, then the same on a vs c b.
ComparisonReport compare_fields(const ComplexField& a, const ComplexField& b, std::span<const SpacetimePoint> points,
                                CompareMode mode = CompareMode::exact);

/// Compares field at phi + alpha with e^{i order alpha} field at phi.
/// Throws DomainError when base lies on the axis.
ComparisonReport rotation_eigenphase_check(const ComplexField& field, int order, const SpacetimePoint& base,
                                           std::span<const double> alphas);

struct ConvergenceProbe {
    std::vector<ResidualReport> reports;
    std::vector<bool> at_floor;           // per step: residual within the rounding-noise estimate
    std::vector<double> pairwise_slopes;  // log-log slope between consecutive steps
    std::optional<double> slope;          // least-squares slope over steps above the floor
    bool floor_reached = false;
};

/// Residuals at each step (positive, strictly descending). A step counts as
/// at the floor when its relative residual is below 10x the estimated
/// rounding noise eps * sum|w| * max|f| / (h^2 scale).
ConvergenceProbe convergence_probe(const ComplexField& field, const SpacetimePoint& p, double m,
                                   std::span<const double> steps, int fd_order = 8);

} // namespace genbeam

#endif // GENBEAM_VERIFY_HPP
