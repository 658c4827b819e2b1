#ifndef GENBEAM_FAMILY_HPP
#define GENBEAM_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genbeam/beams.hpp"
#include "genbeam/construct.hpp"

namespace genbeam {

/// Every field the library can build. The g_* ids are generating functions,
/// the others the derived beam families.
enum class FamilyId { g_lg, lg, g_hg, hg, g_exp, exp, g_md, g_b, bessel, g_bg, bg };

std::span<const FamilyId> all_families();
std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Union of all per-family parameter records; each family reads its own subset.
struct FamilyParams {
    BeamPhysical phys;
    LGIndices lg;
    HGIndices hg;
    ExpParams exp;
    BesselParams bessel;
    BGParams bg;
    double varphi = 0.0;  // angular parameter of g_b and g_bg
};

struct FamilySpec {
    FamilyId id = FamilyId::g_lg;
    FamilyParams params;
    ContourSpec contour;  // used by the exponential derivative family

    /// Throws DomainError if the family's preconditions are violated.
    void validate() const;
    /// Klein-Gordon mass of the field.
    double mass() const { return params.phys.m; }
};

/// Names of the parameters that define the family, in canonical order.
std::span<const std::string_view> parameter_names(FamilyId id);
bool is_integer_parameter(std::string_view name);
double get_parameter(const FamilySpec& spec, std::string_view name);
/// Throws DomainError for unknown names or non-integral values of integer parameters.
void set_parameter(FamilySpec& spec, std::string_view name, double value);
/// (name, value) pairs for parameter_names(spec.id).
std::vector<std::pair<std::string, double>> parameter_record(const FamilySpec& spec);

/// Builds the field after validating the spec.
ComplexField make_field(const FamilySpec& spec);

/// Static description for the info command.
struct FamilyDescription {
    std::string_view formula;
    std::string_view ranges;
    std::string_view conventions;
};
FamilyDescription describe(FamilyId id);

/// Deterministic generator with a portable mapping to doubles.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi);
    int integer(int lo, int hi);  // inclusive

private:
    std::mt19937_64 engine_;
};

/// Random parameters from the documented acceptance ranges:
/// E in [1, 20], m in [0, 5] (g_md: [0.1, 5]), w0 in [0.5, 3], n, l <= 4,
/// mx, ny <= 6, k in [1, 3], |q| in [0.5, 3], p_perp in [0.1, 3],
/// p_z in [-3, 3], Bessel l in [-5, 5], b <= 2, Bessel-Gauss l <= 4.
/// With massless set, m = 0.
FamilySpec random_family_spec(FamilyId id, Rng& rng, bool massless = false);

/// Points drawn uniformly in t, z in [-5, 5], rho in [0, 5], phi in [0, 2pi).
std::vector<SpacetimePoint> sample_acceptance_box(std::size_t n, std::uint64_t seed);

} // namespace genbeam

#endif // GENBEAM_FAMILY_HPP
