#ifndef GENBEAM_CLI_HPP
#define GENBEAM_CLI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "genbeam/family.hpp"
#include "genbeam/verify.hpp"

namespace genbeam::cli {

/// Process exit statuses. Everything >= 2 is a configuration problem.
enum ExitCode : int {
    exit_pass = 0,
    exit_tolerance = 1,
    exit_usage = 2,      // bad flags, invalid grid, unsupported mode
    exit_parameter = 3,  // family parameter out of range
    exit_io = 4,         // output path not writable
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Grids

inline constexpr std::array<std::string_view, 4> axis_names{"t", "x", "y", "z"};

struct AxisRange {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 1;

    /// count == 1 gives {start}; otherwise the endpoints are hit exactly.
    double value(std::size_t i) const;
    bool operator==(const AxisRange&) const = default;
};

struct GridSpec {
    std::array<std::optional<AxisRange>, 4> axes;  // indexed like axis_names
    std::array<double, 4> fixed{};                  // used where axes[i] is empty
    std::size_t max_points = 10'000'000;

    std::size_t size() const;
    /// Throws UsageError on start > stop, count < 1, non-finite values or too many points.
    void validate() const;
    /// Point with flat index i in t-major, then x, y, z order.
    SpacetimePoint point(std::size_t i) const;
    bool operator==(const GridSpec&) const = default;
};

/// Parses "x=-5:5:101,y=-5:5:101" into the axis slots of grid. Throws UsageError.
void parse_grid_axes(std::string_view text, GridSpec& grid);

// ---------------------------------------------------------------------------
// Configuration

enum class Command { sample, verify, compare, info };
enum class OutputFormat { csv, f64le };
enum class CompareKind { rodrigues, quadrature };

std::string_view command_name(Command c);
std::string_view format_name(OutputFormat f);
std::string_view compare_kind_name(CompareKind k);

struct RunConfig {
    Command command = Command::sample;
    FamilySpec spec;
    GridSpec grid;                // sample
    std::size_t points = 20;      // verify, compare
    std::uint64_t seed = 42;      // verify, compare
    FDSpec fd;                    // verify
    QuadratureSpec quadrature;    // compare --mode quadrature
    CompareKind compare_kind = CompareKind::rodrigues;
    double threshold = 1e-6;
    OutputFormat format = OutputFormat::csv;
    std::string out;              // empty: standard output

    /// Throws UsageError or DomainError.
    void validate() const;
};

/// Compact record that fully determines the run; written into every output.
nlohmann::json config_to_json(const RunConfig& cfg);
/// Inverse of config_to_json. Throws UsageError on malformed records.
RunConfig config_from_json(const nlohmann::json& j);

/// Reads the metadata record from a CSV file header or an f64le sidecar.
RunConfig read_metadata(const std::string& path);

// ---------------------------------------------------------------------------
// Commands. Each returns an exit status; output goes to cfg.out or `out`.

int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);
int cmd_info(std::string_view family, std::ostream& out);

/// Full command line (without argv[0]). Errors are reported on err and
/// mapped to ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genbeam::cli

#endif // GENBEAM_CLI_HPP
