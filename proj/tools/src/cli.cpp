#include <algorithm>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "genbeam/cli.hpp"
#include "genbeam/errors.hpp"

namespace genbeam::cli {

namespace {

// flag name -> parameter name
const std::vector<std::pair<std::string, std::string>> parameter_flags{
    {"--E", "E"},   {"--m", "m"},   {"--w0", "w0"},         {"--n", "n"},       {"--l", "l"},
    {"--mx", "mx"}, {"--ny", "ny"}, {"--k", "k"},           {"--q", "q"},       {"--p-perp", "p_perp"},
    {"--p-z", "p_z"}, {"--b", "b"}, {"--varphi", "varphi"},
};

struct Flags {
    std::string family;
    std::map<std::string, double> params;
    std::string grid;
    std::array<double, 4> fixed{};
    std::size_t max_points = 10'000'000;
    std::size_t points = 20;
    std::uint64_t seed = 42;
    int fd_order = 8;
    double fd_step = 1e-2;
    int nodes = 0;
    double radius_scale = 0.5;
    bool fixed_radius = false;
    double threshold = 0.0;
    std::string format = "csv";
    std::string mode;
    std::string out;
};

void add_family_options(CLI::App& sub, Flags& f)
{
    sub.add_option("--family", f.family, "Family id (see `genbeam info`)")->required();
    for (const auto& [flag, name] : parameter_flags)
        sub.add_option(flag, f.params[name], "Parameter " + name);
    sub.add_option("--nodes", f.nodes, "Contour nodes (0 = automatic), or quadrature nodes for compare --mode quadrature");
    sub.add_option("--radius-scale", f.radius_scale, "Contour radius as a fraction of the natural scale");
    sub.add_flag("--fixed-radius", f.fixed_radius, "Disable the contour radius search");
    sub.add_option("--out", f.out, "Output path (default: standard output)");
}

void add_sampling_options(CLI::App& sub, Flags& f)
{
    sub.add_option("--points", f.points, "Number of seeded sample points");
    sub.add_option("--seed", f.seed, "Sampling seed");
    sub.add_option("--threshold", f.threshold, "Pass threshold");
}

RunConfig build_config(Command command, const CLI::App& sub, const Flags& f)
{
    RunConfig cfg;
    cfg.command = command;
    const auto id = parse_family(f.family);
    if (!id) {
        std::string valid;
        for (FamilyId fam : all_families())
            valid += (valid.empty() ? "" : ", ") + std::string(family_name(fam));
        throw UsageError("unknown family '" + f.family + "'; valid ids: " + valid);
    }
    cfg.spec.id = *id;

    const auto names = parameter_names(*id);
    for (const auto& [flag, name] : parameter_flags) {
        if (sub.count(flag) == 0)
            continue;
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw UsageError(flag + " does not apply to family " + f.family);
        set_parameter(cfg.spec, name, f.params.at(name));
    }

    cfg.spec.contour.radius_scale = f.radius_scale;
    cfg.spec.contour.adaptive = !f.fixed_radius;
    cfg.out = f.out;
    cfg.points = f.points;
    cfg.seed = f.seed;

    switch (command) {
    case Command::sample: {
        if (!f.grid.empty())
            parse_grid_axes(f.grid, cfg.grid);
        for (std::size_t i = 0; i < axis_names.size(); ++i) {
            const std::string flag = "--" + std::string(axis_names[i]);
            if (sub.count(flag) == 0)
                continue;
            if (cfg.grid.axes[i])
                throw UsageError(flag + " conflicts with the " + std::string(axis_names[i]) + " axis in --grid");
            cfg.grid.fixed[i] = f.fixed[i];
        }
        cfg.grid.max_points = f.max_points;
        if (f.format == "csv") cfg.format = OutputFormat::csv;
        else if (f.format == "f64le") cfg.format = OutputFormat::f64le;
        else throw UsageError("--format must be csv or f64le");
        cfg.spec.contour.nodes = f.nodes;
        break;
    }
    case Command::verify:
        cfg.fd.order = f.fd_order;
        cfg.fd.step = f.fd_step;
        cfg.threshold = sub.count("--threshold") ? f.threshold : 1e-6;
        cfg.spec.contour.nodes = f.nodes;
        break;
    case Command::compare: {
        std::string mode = f.mode;
        if (mode.empty())
            mode = (*id == FamilyId::bessel || *id == FamilyId::bg) ? "quadrature" : "rodrigues";
        if (mode == "rodrigues") cfg.compare_kind = CompareKind::rodrigues;
        else if (mode == "quadrature") cfg.compare_kind = CompareKind::quadrature;
        else throw UsageError("--mode must be rodrigues or quadrature");
        if (cfg.compare_kind == CompareKind::quadrature && sub.count("--nodes"))
            cfg.quadrature.nodes = f.nodes;
        else
            cfg.spec.contour.nodes = f.nodes;
        cfg.threshold = sub.count("--threshold") ? f.threshold : 1e-9;
        break;
    }
    case Command::info: break;
    }
    return cfg;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Klein-Gordon beam families from generating functions"};
    app.name("genbeam");
    app.require_subcommand(1);

    Flags f;
    std::string info_family;

    auto* sample = app.add_subcommand("sample", "Evaluate a family on a grid");
    add_family_options(*sample, f);
    sample->add_option("--grid", f.grid, "Axis ranges, e.g. \"x=-5:5:101,y=-5:5:101\"");
    for (std::size_t i = 0; i < axis_names.size(); ++i)
        sample->add_option("--" + std::string(axis_names[i]), f.fixed[i], "Fixed value of " + std::string(axis_names[i]));
    sample->add_option("--max-points", f.max_points, "Grid point cap");
    sample->add_option("--format", f.format, "csv or f64le");

    auto* verify = app.add_subcommand("verify", "Klein-Gordon residual campaign");
    add_family_options(*verify, f);
    add_sampling_options(*verify, f);
    verify->add_option("--fd-order", f.fd_order, "Finite-difference order (2, 4, 6, 8)");
    verify->add_option("--fd-step", f.fd_step, "Finite-difference step");

    auto* compare = app.add_subcommand("compare", "Construction versus closed form");
    add_family_options(*compare, f);
    add_sampling_options(*compare, f);
    compare->add_option("--mode", f.mode, "rodrigues (lg, hg) or quadrature (bessel, bg)");

    auto* info = app.add_subcommand("info", "Describe a family");
    info->add_option("family", info_family, "Family id")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*info)
            return cmd_info(info_family, out);
        if (*sample)
            return cmd_sample(build_config(Command::sample, *sample, f), out);
        if (*verify)
            return cmd_verify(build_config(Command::verify, *verify, f), out);
        return cmd_compare(build_config(Command::compare, *compare, f), out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    } catch (const UsageError& e) {
        err << "genbeam: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "genbeam: parameter out of range: " << e.what() << '\n';
        return exit_parameter;
    } catch (const IoError& e) {
        err << "genbeam: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "genbeam: evaluation failed: " << e.what() << '\n';
        return exit_tolerance;
    }
}

} // namespace genbeam::cli
