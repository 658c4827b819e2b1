#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "genbeam/cli.hpp"
#include "genbeam/construct.hpp"
#include "genbeam/errors.hpp"
#include "genbeam/parallel.hpp"

namespace genbeam::cli {

using nlohmann::json;

namespace {

void append_real(std::string& line, double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    line.append(buf, res.ptr);
}

json point_json(const SpacetimePoint& p)
{
    return {{"t", p.t}, {"x", p.x}, {"y", p.y}, {"z", p.z}};
}

json complex_json(cplx z)
{
    return json::array({z.real(), z.imag()});
}

// Opens cfg.out (or falls back to `fallback`), runs write, checks the stream.
template <class Write>
void emit(const std::string& path, std::ostream& fallback, bool binary, Write&& write)
{
    if (path.empty()) {
        write(fallback);
        fallback.flush();
        return;
    }
    std::ofstream file(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    write(file);
    file.flush();
    if (!file)
        throw IoError("write to '" + path + "' failed");
}

std::vector<cplx> evaluate_grid(const ComplexField& field, const GridSpec& grid)
{
    std::vector<cplx> values(grid.size());
    parallel_for(values.size(), [&](std::size_t i) { values[i] = field(grid.point(i)); });
    return values;
}

void write_csv(std::ostream& os, const RunConfig& cfg, const std::vector<cplx>& values)
{
    os << '#' << config_to_json(cfg).dump() << '\n' << "t,x,y,z,re,im\n";
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const SpacetimePoint p = cfg.grid.point(i);
        line.clear();
        for (double v : {p.t, p.x, p.y, p.z, values[i].real(), values[i].imag()}) {
            append_real(line, v);
            line.push_back(',');
        }
        line.back() = '\n';
        os << line;
    }
}

void write_f64le(std::ostream& os, const std::vector<cplx>& values)
{
    std::vector<unsigned char> bytes(values.size() * 16);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double parts[2] = {values[i].real(), values[i].imag()};
        for (int k = 0; k < 2; ++k) {
            auto bits = std::bit_cast<std::uint64_t>(parts[k]);
            for (int b = 0; b < 8; ++b, bits >>= 8)
                bytes[i * 16 + static_cast<std::size_t>(k) * 8 + static_cast<std::size_t>(b)] =
                    static_cast<unsigned char>(bits & 0xffu);
        }
    }
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

json sidecar_json(const RunConfig& cfg)
{
    json shape = json::array();
    for (const auto& axis : cfg.grid.axes)
        shape.push_back(axis ? axis->count : 1);
    return {
        {"config", config_to_json(cfg)},
        {"layout",
         {{"order", json::array({"t", "x", "y", "z"})},
          {"shape", shape},
          {"record", "re, im as IEEE-754 float64, little-endian"},
          {"points", cfg.grid.size()}}},
    };
}

int finish_report(const RunConfig& cfg, std::ostream& out, json result, bool pass)
{
    const json report{
        {"report", command_name(cfg.command)},
        {"config", config_to_json(cfg)},
        {"result", std::move(result)},
        {"threshold", cfg.threshold},
        {"pass", pass},
    };
    emit(cfg.out, out, false, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    return pass ? exit_pass : exit_tolerance;
}

} // namespace

int cmd_sample(const RunConfig& cfg, std::ostream& out)
{
    cfg.validate();
    const ComplexField field = make_field(cfg.spec);
    const std::vector<cplx> values = evaluate_grid(field, cfg.grid);
    if (cfg.format == OutputFormat::csv) {
        emit(cfg.out, out, false, [&](std::ostream& os) { write_csv(os, cfg, values); });
    } else {
        emit(cfg.out, out, true, [&](std::ostream& os) { write_f64le(os, values); });
        emit(cfg.out + ".json", out, false, [&](std::ostream& os) { os << sidecar_json(cfg).dump(2) << '\n'; });
    }
    return exit_pass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    cfg.validate();
    const FamilySummary summary = verify_family(cfg.spec, cfg.points, cfg.seed, cfg.fd);
    json result{
        {"n_points", summary.n_points},
        {"max_relative", summary.max_relative},
        {"mean_relative", summary.mean_relative},
    };
    if (summary.worst) {
        result["worst"] = {
            {"point", point_json(summary.worst->point)},
            {"residual", complex_json(summary.worst->residual)},
            {"scale", summary.worst->scale},
            {"relative", summary.worst->relative},
        };
    }
    const bool pass = summary.max_relative <= cfg.threshold;
    return finish_report(cfg, out, std::move(result), pass);
}

int cmd_compare(const RunConfig& cfg, std::ostream& out)
{
    cfg.validate();
    const FamilyId id = cfg.spec.id;
    const bool rodrigues_ok = id == FamilyId::lg || id == FamilyId::hg;
    const bool quadrature_ok = id == FamilyId::bessel || id == FamilyId::bg;
    if (cfg.compare_kind == CompareKind::rodrigues && !rodrigues_ok)
        throw UsageError("compare --mode rodrigues supports lg and hg, not " + std::string(family_name(id)));
    if (cfg.compare_kind == CompareKind::quadrature && !quadrature_ok)
        throw UsageError("compare --mode quadrature supports bessel and bg, not " + std::string(family_name(id)));

    const ComplexField closed = make_field(cfg.spec);
    const FamilyParams prm = cfg.spec.params;
    const ContourSpec contour = cfg.spec.contour;
    const QuadratureSpec quad = cfg.quadrature;
    ComplexField::Evaluator construct;
    switch (id) {
    case FamilyId::lg: construct = [=](const SpacetimePoint& p) { return rodrigues_lg(prm.lg, p, prm.phys, contour); }; break;
    case FamilyId::hg: construct = [=](const SpacetimePoint& p) { return rodrigues_hg(prm.hg, p, prm.phys, contour); }; break;
    case FamilyId::bessel:
        construct = [=](const SpacetimePoint& p) { return bessel_from_quadrature(prm.bessel, p, prm.phys.m, quad); };
        break;
    default:
        construct = [=](const SpacetimePoint& p) { return bg_from_quadrature(prm.bg, p, prm.phys, quad); };
        break;
    }

    const std::vector<SpacetimePoint> points = sample_acceptance_box(cfg.points, cfg.seed);
    const ComparisonReport rep =
        compare_fields(closed, ComplexField({"construction", parameter_record(cfg.spec)}, construct), points);
    const json result{
        {"mode", compare_kind_name(cfg.compare_kind)},
        {"n_points", rep.n_points},
        {"max_abs_dev", rep.max_abs_dev},
        {"max_rel_dev", rep.max_rel_dev},
        {"argmax_point", point_json(rep.argmax_point)},
    };
    return finish_report(cfg, out, result, rep.max_rel_dev <= cfg.threshold);
}

int cmd_info(std::string_view family, std::ostream& out)
{
    const auto id = parse_family(family);
    if (!id) {
        std::string valid;
        for (FamilyId f : all_families())
            valid += (valid.empty() ? "" : ", ") + std::string(family_name(f));
        throw UsageError("unknown family '" + std::string(family) + "'; valid ids: " + valid);
    }
    const FamilyDescription d = describe(*id);
    std::string params;
    for (std::string_view name : parameter_names(*id))
        params += (params.empty() ? "" : ", ") + std::string(name);
    out << "family:      " << family_name(*id) << '\n'
        << "formula:     " << d.formula << '\n'
        << "parameters:  " << params << '\n'
        << "ranges:      " << d.ranges << '\n'
        << "conventions: " << d.conventions << '\n';
    return exit_pass;
}

} // namespace genbeam::cli
