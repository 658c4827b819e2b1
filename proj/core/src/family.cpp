#include "genbeam/family.hpp"

#include <array>
#include <cmath>
#include <string>

#include "genbeam/errors.hpp"

namespace genbeam {

namespace {

constexpr std::array<FamilyId, 11> families = {
    FamilyId::g_lg, FamilyId::lg,     FamilyId::g_hg, FamilyId::hg, FamilyId::g_exp, FamilyId::exp,
    FamilyId::g_md, FamilyId::g_b,    FamilyId::bessel, FamilyId::g_bg, FamilyId::bg,
};

constexpr std::array<std::string_view, 11> names = {
    "g_lg", "lg", "g_hg", "hg", "g_exp", "exp", "g_md", "g_b", "bessel", "g_bg", "bg",
};

constexpr std::array<std::string_view, 3> gaussian_names = {"E", "m", "w0"};
constexpr std::array<std::string_view, 5> lg_names = {"n", "l", "E", "m", "w0"};
constexpr std::array<std::string_view, 5> hg_names = {"mx", "ny", "E", "m", "w0"};
constexpr std::array<std::string_view, 3> g_exp_names = {"q", "m", "w0"};
constexpr std::array<std::string_view, 4> exp_names = {"k", "q", "m", "w0"};
constexpr std::array<std::string_view, 2> md_names = {"m", "w0"};
constexpr std::array<std::string_view, 5> g_b_names = {"p_perp", "p_z", "l", "m", "varphi"};
constexpr std::array<std::string_view, 4> bessel_names = {"p_perp", "p_z", "l", "m"};
constexpr std::array<std::string_view, 5> g_bg_names = {"b", "varphi", "E", "m", "w0"};
constexpr std::array<std::string_view, 5> bg_names = {"b", "l", "E", "m", "w0"};

std::size_t index_of(FamilyId id) { return static_cast<std::size_t>(id); }

bool uses_lg_l(FamilyId id) { return id == FamilyId::lg; }
bool uses_bessel_l(FamilyId id) { return id == FamilyId::g_b || id == FamilyId::bessel; }

int as_integer(std::string_view name, double value)
{
    if (!std::isfinite(value) || value != std::floor(value) || std::abs(value) > 1e6)
        throw DomainError("parameter '" + std::string(name) + "' must be an integer");
    return static_cast<int>(value);
}

} // namespace

std::span<const FamilyId> all_families() { return families; }

std::string_view family_name(FamilyId id) { return names[index_of(id)]; }

std::optional<FamilyId> parse_family(std::string_view name)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return families[i];
    return std::nullopt;
}

std::span<const std::string_view> parameter_names(FamilyId id)
{
    switch (id) {
    case FamilyId::g_lg:
    case FamilyId::g_hg: return gaussian_names;
    case FamilyId::lg: return lg_names;
    case FamilyId::hg: return hg_names;
    case FamilyId::g_exp: return g_exp_names;
    case FamilyId::exp: return exp_names;
    case FamilyId::g_md: return md_names;
    case FamilyId::g_b: return g_b_names;
    case FamilyId::bessel: return bessel_names;
    case FamilyId::g_bg: return g_bg_names;
    case FamilyId::bg: return bg_names;
    }
    return {};
}

bool is_integer_parameter(std::string_view name)
{
    return name == "n" || name == "l" || name == "mx" || name == "ny" || name == "k";
}

double get_parameter(const FamilySpec& spec, std::string_view name)
{
    const FamilyParams& p = spec.params;
    if (name == "E") return p.phys.E;
    if (name == "m") return p.phys.m;
    if (name == "w0") return p.phys.w0;
    if (name == "n") return p.lg.n;
    if (name == "l") {
        if (uses_lg_l(spec.id)) return p.lg.l;
        if (uses_bessel_l(spec.id)) return p.bessel.l;
        return p.bg.l;
    }
    if (name == "mx") return p.hg.mx;
    if (name == "ny") return p.hg.ny;
    if (name == "k") return p.exp.k;
    if (name == "q") return p.exp.q;
    if (name == "p_perp") return p.bessel.p_perp;
    if (name == "p_z") return p.bessel.p_z;
    if (name == "b") return p.bg.b;
    if (name == "varphi") return p.varphi;
    throw DomainError("unknown parameter '" + std::string(name) + "'");
}

void set_parameter(FamilySpec& spec, std::string_view name, double value)
{
    FamilyParams& p = spec.params;
    if (name == "E") p.phys.E = value;
    else if (name == "m") p.phys.m = value;
    else if (name == "w0") p.phys.w0 = value;
    else if (name == "n") p.lg.n = as_integer(name, value);
    else if (name == "l") {
        const int l = as_integer(name, value);
        if (uses_lg_l(spec.id)) p.lg.l = l;
        else if (uses_bessel_l(spec.id)) p.bessel.l = l;
        else p.bg.l = l;
    }
    else if (name == "mx") p.hg.mx = as_integer(name, value);
    else if (name == "ny") p.hg.ny = as_integer(name, value);
    else if (name == "k") p.exp.k = as_integer(name, value);
    else if (name == "q") p.exp.q = value;
    else if (name == "p_perp") p.bessel.p_perp = value;
    else if (name == "p_z") p.bessel.p_z = value;
    else if (name == "b") p.bg.b = value;
    else if (name == "varphi") p.varphi = value;
    else throw DomainError("unknown parameter '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, double>> parameter_record(const FamilySpec& spec)
{
    std::vector<std::pair<std::string, double>> out;
    for (std::string_view name : parameter_names(spec.id))
        out.emplace_back(std::string(name), get_parameter(spec, name));
    return out;
}

void FamilySpec::validate() const
{
    const FamilyParams& p = params;
    if (!std::isfinite(p.phys.m) || !(p.phys.m >= 0.0))
        throw DomainError("m must be finite and >= 0");
    switch (id) {
    case FamilyId::g_lg:
    case FamilyId::g_hg: p.phys.validate(); break;
    case FamilyId::lg: p.phys.validate(); p.lg.validate(); break;
    case FamilyId::hg: p.phys.validate(); p.hg.validate(); break;
    case FamilyId::g_exp:
    case FamilyId::exp:
        if (!(p.phys.w0 > 0.0) || !std::isfinite(p.phys.w0))
            throw DomainError("w0 must be finite and > 0");
        p.exp.validate();
        if (id == FamilyId::exp && p.exp.k < 1)
            throw DomainError("exp family: k must be >= 1");
        if (id == FamilyId::exp && !(contour.radius_scale > 0.0 && contour.radius_scale < 1.0))
            throw DomainError("exp family: contour radius scale must lie in (0, 1)");
        break;
    case FamilyId::g_md:
        if (!(p.phys.m > 0.0))
            throw DomainError("g_md: m must be > 0");
        if (!(p.phys.w0 > 0.0) || !std::isfinite(p.phys.w0))
            throw DomainError("w0 must be finite and > 0");
        break;
    case FamilyId::g_b:
    case FamilyId::bessel:
        p.bessel.validate();
        if (!std::isfinite(p.varphi))
            throw DomainError("varphi must be finite");
        break;
    case FamilyId::g_bg:
        p.phys.validate();
        if (!(p.bg.b >= 0.0) || !std::isfinite(p.bg.b))
            throw DomainError("b must be finite and >= 0");
        if (!std::isfinite(p.varphi))
            throw DomainError("varphi must be finite");
        break;
    case FamilyId::bg: p.phys.validate(); p.bg.validate(); break;
    }
}

ComplexField make_field(const FamilySpec& spec)
{
    spec.validate();
    FieldInfo info{std::string(family_name(spec.id)), parameter_record(spec)};
    const FamilyParams p = spec.params;
    const ContourSpec contour = spec.contour;
    ComplexField::Evaluator eval;
    switch (spec.id) {
    case FamilyId::g_lg: eval = [p](const SpacetimePoint& x) { return g_lg(x, p.phys); }; break;
    case FamilyId::lg: eval = [p](const SpacetimePoint& x) { return f_lg(p.lg, x, p.phys); }; break;
    case FamilyId::g_hg: eval = [p](const SpacetimePoint& x) { return g_hg(x, p.phys); }; break;
    case FamilyId::hg: eval = [p](const SpacetimePoint& x) { return f_hg(p.hg, x, p.phys); }; break;
    case FamilyId::g_exp: eval = [p](const SpacetimePoint& x) { return g_exp(x, p.exp.q, p.phys); }; break;
    case FamilyId::exp:
        eval = [p, contour](const SpacetimePoint& x) { return f_exp(p.exp, x, p.phys, contour); };
        break;
    case FamilyId::g_md: eval = [p](const SpacetimePoint& x) { return g_md(x, p.phys); }; break;
    case FamilyId::g_b:
        eval = [p](const SpacetimePoint& x) { return g_b(x, p.bessel, p.phys.m, p.varphi); };
        break;
    case FamilyId::bessel: eval = [p](const SpacetimePoint& x) { return f_bessel(p.bessel, x, p.phys.m); }; break;
    case FamilyId::g_bg: eval = [p](const SpacetimePoint& x) { return g_bg(x, p.bg.b, p.varphi, p.phys); }; break;
    case FamilyId::bg: eval = [p](const SpacetimePoint& x) { return f_bg(p.bg, x, p.phys); }; break;
    }
    return ComplexField(std::move(info), std::move(eval));
}

FamilyDescription describe(FamilyId id)
{
    constexpr std::string_view phase =
        "P(t+,t-) = exp(-i E t-/2) exp(-i m^2 t+/(2E)), a(t+) = w0^2 + 2i t+/E, t+- = t +- z, x+- = x +- iy";
    constexpr std::string_view gaussian_ranges = "E in [1, 20], m in [0, 5], w0 in [0.5, 3]";
    switch (id) {
    case FamilyId::g_lg:
        return {"G_LG = P(t+,t-) (1/a) exp(-x+ x- / a)", gaussian_ranges, phase};
    case FamilyId::lg:
        return {"f_LG^{nl} = P(t+,t-) (x+iy)^l / a^(n+l+1) exp(-(x^2+y^2)/a) L_n^l((x^2+y^2)/a)"
                " = ((-1)^(n+l)/n!) d^(n+l)/dx-^(n+l) d^n/dx+^n G_LG",
                "n, l >= 0 (validated n, l <= 8); E in [1, 20], m in [0, 5], w0 in [0.5, 3]",
                "unnormalized; Laguerre argument complex through a(t+)"};
    case FamilyId::g_hg:
        return {"G_HG(x, y, z, t) = G_LG(x+, x-, z, t) read as a function of x and y", gaussian_ranges, phase};
    case FamilyId::hg:
        return {"f_HG^{mn} = (-1)^(m+n) d^m/dx^m d^n/dy^n G_HG = H_m(x/sqrt a) H_n(y/sqrt a) G_HG / a^((m+n)/2)",
                "mx, ny >= 0 (validated <= 8); E in [1, 20], m in [0, 5], w0 in [0.5, 3]",
                "physicists' Hermite polynomials, principal sqrt(a) (Re a > 0)"};
    case FamilyId::g_exp:
        return {"G_Exp = exp(iqz) exp(-u)/u, u = sqrt((w0 + i kappa t)^2 + kappa^2 x+ x-), kappa^2 = m^2 + q^2",
                "q real, m in [0, 5], w0 in [0.5, 3]; E unused",
                "principal root; Re u > 0 at every real point"};
    case FamilyId::exp:
        return {"f_Exp^k = d^k G_Exp / dx-^k (contour integral in x-)",
                "k >= 1 (validated k <= 3); q real, m in [0, 5], w0 in [0.5, 3]",
                "no factorial prefactor; carries angular order k"};
    case FamilyId::g_md:
        return {"G_Md = m K_1(m s)/s, s = sqrt((w0 + it)^2 + x+ x- + z^2)",
                "m in (0, 5], w0 in [0.5, 3]; E unused", "principal root; Re s > 0 at every real point"};
    case FamilyId::g_b:
        return {"G_B = exp(-i sqrt(p_perp^2 + p_z^2 + m^2) t + i p_z z) exp(i p_perp rho cos(phi - varphi))",
                "p_perp in (0, 3], p_z in [-3, 3], m in [0, 5], varphi real", "unit-modulus plane wave"};
    case FamilyId::bessel:
        return {"f_B^l = integral over varphi in [0, 2pi) of e^{il varphi} G_B"
                " = 2 pi i^l e^{il phi} J_l(p_perp rho) exp(-i Omega t + i p_z z)",
                "p_perp in (0, 3], p_z in [-3, 3], l integer, m in [0, 5]", "Omega^2 = p_perp^2 + p_z^2 + m^2"};
    case FamilyId::g_bg:
        return {"G_BG = P(t+,t-) (1/a) exp(-(rho^2 - b^2 + 2i b rho cos(phi - varphi))/a)",
                "b in [0, 2], varphi real; E in [1, 20], m in [0, 5], w0 in [0.5, 3]", phase};
    case FamilyId::bg:
        return {"f_BG^l = integral over varphi of e^{il varphi} G_BG"
                " = 2 pi (-i)^l e^{il phi}/a P(t+,t-) exp(-(rho^2 - b^2)/a) J_l(2 b rho / a)",
                "b in [0, 2], l >= 0 (validated <= 4); E in [1, 20], m in [0, 5], w0 in [0.5, 3]",
                "complex Bessel argument; unnormalized"};
    }
    return {};
}

double Rng::uniform(double lo, double hi)
{
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int Rng::integer(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

FamilySpec random_family_spec(FamilyId id, Rng& rng, bool massless)
{
    FamilySpec spec;
    spec.id = id;
    FamilyParams& p = spec.params;
    p.phys.E = rng.uniform(1.0, 20.0);
    p.phys.m = massless ? 0.0 : rng.uniform(id == FamilyId::g_md ? 0.1 : 0.0, 5.0);
    p.phys.w0 = rng.uniform(0.5, 3.0);
    p.lg.n = rng.integer(0, 4);
    p.lg.l = rng.integer(0, 4);
    p.hg.mx = rng.integer(0, 6);
    p.hg.ny = rng.integer(0, 6);
    p.exp.k = rng.integer(1, 3);
    p.exp.q = rng.uniform(0.5, 3.0) * (rng.integer(0, 1) == 0 ? 1.0 : -1.0);
    p.bessel.p_perp = rng.uniform(0.1, 3.0);
    p.bessel.p_z = rng.uniform(-3.0, 3.0);
    p.bessel.l = rng.integer(-5, 5);
    p.bg.b = rng.uniform(0.0, 2.0);
    p.bg.l = rng.integer(0, 4);
    p.varphi = rng.uniform(0.0, two_pi);
    return spec;
}

std::vector<SpacetimePoint> sample_acceptance_box(std::size_t n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<SpacetimePoint> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = rng.uniform(-5.0, 5.0);
        const double z = rng.uniform(-5.0, 5.0);
        const double rho = rng.uniform(0.0, 5.0);
        const double phi = rng.uniform(0.0, two_pi);
        pts.push_back(from_cylindrical(rho, phi, z, t));
    }
    return pts;
}

} // namespace genbeam
