#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "genbeam/cli.hpp"

namespace genbeam::cli {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view s, std::string_view what)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("grid: cannot parse " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::size_t parse_count(std::string_view s)
{
    s = trim(s);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("grid: cannot parse count '" + std::string(s) + "'");
    return v;
}

int axis_index(std::string_view name)
{
    for (std::size_t i = 0; i < axis_names.size(); ++i)
        if (axis_names[i] == name)
            return static_cast<int>(i);
    return -1;
}

} // namespace

double AxisRange::value(std::size_t i) const
{
    if (count <= 1)
        return start;
    if (i + 1 == count)
        return stop;
    return start + (stop - start) * (static_cast<double>(i) / static_cast<double>(count - 1));
}

std::size_t GridSpec::size() const
{
    std::size_t n = 1;
    for (const auto& axis : axes) {
        if (!axis)
            continue;
        if (axis->count != 0 && n > std::numeric_limits<std::size_t>::max() / axis->count)
            return std::numeric_limits<std::size_t>::max();
        n *= axis->count;
    }
    return n;
}

void GridSpec::validate() const
{
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const std::string name(axis_names[i]);
        if (!axes[i]) {
            if (!std::isfinite(fixed[i]))
                throw UsageError("grid: " + name + " must be finite");
            continue;
        }
        const AxisRange& a = *axes[i];
        if (!std::isfinite(a.start) || !std::isfinite(a.stop))
            throw UsageError("grid: " + name + " range must be finite");
        if (a.start > a.stop)
            throw UsageError("grid: " + name + " start > stop");
        if (a.count < 1)
            throw UsageError("grid: " + name + " count must be >= 1");
    }
    if (max_points < 1)
        throw UsageError("grid: point cap must be >= 1");
    if (size() > max_points)
        throw UsageError("grid: " + std::to_string(size()) + " points exceed the cap of " +
                         std::to_string(max_points) + " (raise it with --max-points)");
}

SpacetimePoint GridSpec::point(std::size_t i) const
{
    std::array<double, 4> c = fixed;
    for (std::size_t k = axes.size(); k-- > 0;) {
        if (!axes[k])
            continue;
        c[k] = axes[k]->value(i % axes[k]->count);
        i /= axes[k]->count;
    }
    return {c[0], c[1], c[2], c[3]};
}

void parse_grid_axes(std::string_view text, GridSpec& grid)
{
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        const std::string_view item = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (item.empty())
            throw UsageError("grid: empty axis entry in '" + std::string(text) + "'");

        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw UsageError("grid: expected name=start:stop:count, got '" + std::string(item) + "'");
        const std::string_view name = trim(item.substr(0, eq));
        const int idx = axis_index(name);
        if (idx < 0)
            throw UsageError("grid: unknown axis '" + std::string(name) + "' (use t, x, y, z)");
        if (grid.axes[static_cast<std::size_t>(idx)])
            throw UsageError("grid: axis '" + std::string(name) + "' given twice");

        const std::string_view spec = item.substr(eq + 1);
        const std::size_t c1 = spec.find(':');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
        if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
            throw UsageError("grid: expected start:stop:count for axis '" + std::string(name) + "'");

        AxisRange range;
        range.start = parse_real(spec.substr(0, c1), "start");
        range.stop = parse_real(spec.substr(c1 + 1, c2 - c1 - 1), "stop");
        range.count = parse_count(spec.substr(c2 + 1));
        grid.axes[static_cast<std::size_t>(idx)] = range;
        if (comma == text.size())
            break;
    }
}

} // namespace genbeam::cli
