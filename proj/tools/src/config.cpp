#include <cmath>
#include <fstream>
#include <string>

#include "genbeam/cli.hpp"
#include "genbeam/errors.hpp"
#include "genbeam/version.hpp"

namespace genbeam::cli {

using nlohmann::json;

std::string_view command_name(Command c)
{
    switch (c) {
    case Command::sample: return "sample";
    case Command::verify: return "verify";
    case Command::compare: return "compare";
    case Command::info: return "info";
    }
    return "?";
}

std::string_view format_name(OutputFormat f)
{
    return f == OutputFormat::csv ? "csv" : "f64le";
}

std::string_view compare_kind_name(CompareKind k)
{
    return k == CompareKind::rodrigues ? "rodrigues" : "quadrature";
}

void RunConfig::validate() const
{
    spec.validate();
    switch (command) {
    case Command::sample:
        grid.validate();
        if (format == OutputFormat::f64le && out.empty())
            throw UsageError("--format f64le needs --out");
        break;
    case Command::verify:
        fd.validate();
        break;
    case Command::compare:
        quadrature.validate();
        break;
    case Command::info: break;
    }
    if (command == Command::verify || command == Command::compare) {
        if (points < 1)
            throw UsageError("--points must be >= 1");
        if (!(threshold >= 0.0) || !std::isfinite(threshold))
            throw UsageError("--threshold must be finite and >= 0");
    }
}

json config_to_json(const RunConfig& cfg)
{
    json params = json::object();
    for (const auto& [name, value] : parameter_record(cfg.spec)) {
        if (is_integer_parameter(name))
            params[name] = static_cast<long long>(value);
        else
            params[name] = value;
    }

    json axes = json::object();
    json fixed = json::object();
    for (std::size_t i = 0; i < axis_names.size(); ++i) {
        const std::string name(axis_names[i]);
        if (const auto& a = cfg.grid.axes[i])
            axes[name] = json::array({a->start, a->stop, a->count});
        else
            fixed[name] = cfg.grid.fixed[i];
    }

    return json{
        {"artifact", "genbeam"},
        {"version", version_string},
        {"command", command_name(cfg.command)},
        {"family", family_name(cfg.spec.id)},
        {"parameters", params},
        {"contour",
         {{"radius_scale", cfg.spec.contour.radius_scale},
          {"nodes", cfg.spec.contour.nodes},
          {"adaptive", cfg.spec.contour.adaptive}}},
        {"grid", {{"axes", axes}, {"fixed", fixed}, {"max_points", cfg.grid.max_points}}},
        {"points", cfg.points},
        {"seed", cfg.seed},
        {"fd", {{"order", cfg.fd.order}, {"step", cfg.fd.step}}},
        {"quadrature", {{"nodes", cfg.quadrature.nodes}}},
        {"compare_mode", compare_kind_name(cfg.compare_kind)},
        {"threshold", cfg.threshold},
        {"format", format_name(cfg.format)},
        {"out", cfg.out},
    };
}

RunConfig config_from_json(const json& j)
{
    try {
        RunConfig cfg;
        const std::string command = j.at("command").get<std::string>();
        if (command == "sample") cfg.command = Command::sample;
        else if (command == "verify") cfg.command = Command::verify;
        else if (command == "compare") cfg.command = Command::compare;
        else if (command == "info") cfg.command = Command::info;
        else throw UsageError("metadata: unknown command '" + command + "'");

        const std::string family = j.at("family").get<std::string>();
        const auto id = parse_family(family);
        if (!id)
            throw UsageError("metadata: unknown family '" + family + "'");
        cfg.spec.id = *id;
        for (const auto& [name, value] : j.at("parameters").items())
            set_parameter(cfg.spec, name, value.get<double>());

        const json& contour = j.at("contour");
        cfg.spec.contour.radius_scale = contour.at("radius_scale").get<double>();
        cfg.spec.contour.nodes = contour.at("nodes").get<int>();
        cfg.spec.contour.adaptive = contour.at("adaptive").get<bool>();

        const json& grid = j.at("grid");
        for (std::size_t i = 0; i < axis_names.size(); ++i) {
            const std::string name(axis_names[i]);
            if (grid.at("axes").contains(name)) {
                const json& a = grid.at("axes").at(name);
                cfg.grid.axes[i] = AxisRange{a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<std::size_t>()};
            } else {
                cfg.grid.fixed[i] = grid.at("fixed").at(name).get<double>();
            }
        }
        cfg.grid.max_points = grid.at("max_points").get<std::size_t>();

        cfg.points = j.at("points").get<std::size_t>();
        cfg.seed = j.at("seed").get<std::uint64_t>();
        cfg.fd.order = j.at("fd").at("order").get<int>();
        cfg.fd.step = j.at("fd").at("step").get<double>();
        cfg.quadrature.nodes = j.at("quadrature").at("nodes").get<int>();
        cfg.compare_kind =
            j.at("compare_mode").get<std::string>() == "quadrature" ? CompareKind::quadrature : CompareKind::rodrigues;
        cfg.threshold = j.at("threshold").get<double>();
        cfg.format = j.at("format").get<std::string>() == "f64le" ? OutputFormat::f64le : OutputFormat::csv;
        cfg.out = j.at("out").get<std::string>();
        return cfg;
    } catch (const json::exception& e) {
        throw UsageError(std::string("metadata: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("metadata: ") + e.what());
    }
}

RunConfig read_metadata(const std::string& path)
{
    const bool sidecar = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    if (!sidecar && std::ifstream(path + ".json").good())
        return read_metadata(path + ".json");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    if (sidecar) {
        const json j = json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.contains("config"))
            throw UsageError("'" + path + "' is not a genbeam sidecar");
        return config_from_json(j.at("config"));
    }
    std::string line;
    std::getline(in, line);
    if (line.empty() || line.front() != '#')
        throw UsageError("'" + path + "' has no metadata line and no sidecar");
    const json j = json::parse(line.substr(1), nullptr, false);
    if (j.is_discarded())
        throw UsageError("'" + path + "' has a malformed metadata line");
    return config_from_json(j);
}

} // namespace genbeam::cli
