#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "presurf/grid.hpp"
#include "presurf/shear.hpp"
#include "presurf/solitary.hpp"
#include "presurf/stokes.hpp"

namespace presurf {
namespace io {

inline std::string format_float(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_comma(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

inline double parse_number(const std::string& token, std::size_t line_no) {
    const std::string t = trim(token);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v))
        throw InvalidInput("cannot parse number '" + t + "' on line " +
                           std::to_string(line_no));
    return v;
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

}  // namespace detail

/// Raw trace file: header x,p1[,p2[,p3]], strictly increasing uniform x.
/// grid is the uniform idealization used for computation; x keeps the parsed
/// coordinates verbatim so re-serialization is digit-exact.
struct TraceData {
    Grid1D grid;
    std::vector<double> x;
    std::vector<std::vector<double>> columns;  // p1 [, p2 [, p3]]
};

inline TraceData read_trace_csv(const std::string& path) {
    const auto lines = detail::read_lines(path);
    if (lines.size() < 3) throw BadHeader("'" + path + "': need a header and at least 2 rows");

    const auto header = detail::split_comma(lines[0]);
    static const char* expected[] = {"x", "p1", "p2", "p3"};
    if (header.size() < 2 || header.size() > 4)
        throw BadHeader("'" + path + "': header must be x,p1[,p2[,p3]]");
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] != expected[i])
            throw BadHeader("'" + path + "': header must be x,p1[,p2[,p3]], got '" +
                            lines[0] + "'");

    const std::size_t ncols = header.size() - 1;
    std::vector<double> x;
    std::vector<std::vector<double>> cols(ncols);
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const auto fields = detail::split_comma(lines[ln]);
        if (fields.size() != header.size())
            throw InvalidInput("'" + path + "': row " + std::to_string(ln + 1) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(header.size()));
        x.push_back(detail::parse_number(fields[0], ln + 1));
        for (std::size_t c = 0; c < ncols; ++c)
            cols[c].push_back(detail::parse_number(fields[c + 1], ln + 1));
    }

    const std::size_t n = x.size();
    const double mean_step = (x.back() - x.front()) / static_cast<double>(n - 1);
    if (!(mean_step > 0.0)) throw NonUniformGrid("'" + path + "': x must be increasing");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = x[i + 1] - x[i];
        if (!(h > 0.0) || std::abs(h - mean_step) > 1e-9 * std::abs(mean_step))
            throw NonUniformGrid("'" + path + "': x spacing is not uniform at row " +
                                 std::to_string(i + 2));
    }

    TraceData out;
    out.grid = Grid1D(x.front(), mean_step, n);
    out.columns = std::move(cols);
    return out;
}

/// Periodic trace: verifies the grid spans one 2*pi/k period (right endpoint
/// excluded) and DFTs p1 (and p2 if present) into coefficient sets.
inline PeriodicPressure parse_periodic_pressure(const std::string& path, double k) {
    const TraceData data = read_trace_csv(path);
    const double period = 2.0 * std::numbers::pi / k;
    const double span = data.grid.step * static_cast<double>(data.grid.count);
    if (std::abs(span - period) > 1e-6 * period)
        throw InvalidInput("'" + path + "': trace spans " + format_float(span) +
                           " but one period at k = " + format_float(k) + " is " +
                           format_float(period));
    if (std::abs(data.grid.start) > 1e-9 * period)
        throw InvalidInput("'" + path + "': periodic trace must start at x = 0");

    PeriodicPressure out;
    out.b1 = FourierCoefficients::from_trace(SampledFunction(data.grid, data.columns[0]));
    if (data.columns.size() >= 2)
        out.b2 = FourierCoefficients::from_trace(SampledFunction(data.grid, data.columns[1]));
    return out;
}

struct DecayingColumns {
    DecayingTrace b1;
    std::optional<DecayingTrace> b2;
    std::optional<DecayingTrace> b3;
};

inline DecayingColumns parse_decaying_traces(const std::string& path, double decay_tol) {
    const TraceData data = read_trace_csv(path);
    DecayingColumns out;
    out.b1 = DecayingTrace(SampledFunction(data.grid, data.columns[0]), decay_tol);
    if (data.columns.size() >= 2)
        out.b2 = DecayingTrace(SampledFunction(data.grid, data.columns[1]), decay_tol);
    if (data.columns.size() >= 3)
        out.b3 = DecayingTrace(SampledFunction(data.grid, data.columns[2]), decay_tol);
    return out;
}

/// Optional analytic-derivative file for solitary runs: header x,d1,d2,d3,d4
/// on the same grid as the pressure trace.
inline TraceDerivatives parse_trace_derivatives(const std::string& path, const Grid1D& grid) {
    const auto lines = detail::read_lines(path);
    if (lines.size() < 2) throw BadHeader("'" + path + "': empty derivative file");
    const auto header = detail::split_comma(lines[0]);
    static const char* expected[] = {"x", "d1", "d2", "d3", "d4"};
    if (header.size() != 5)
        throw BadHeader("'" + path + "': header must be x,d1,d2,d3,d4");
    for (std::size_t i = 0; i < 5; ++i)
        if (header[i] != expected[i])
            throw BadHeader("'" + path + "': header must be x,d1,d2,d3,d4");
    if (lines.size() - 1 != grid.count)
        throw InvalidInput("'" + path + "': expected " + std::to_string(grid.count) + " rows");

    std::vector<std::vector<double>> cols(4, std::vector<double>(grid.count));
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const auto fields = detail::split_comma(lines[ln]);
        if (fields.size() != 5)
            throw InvalidInput("'" + path + "': row " + std::to_string(ln + 1) +
                               " must have 5 fields");
        const double x = detail::parse_number(fields[0], ln + 1);
        if (std::abs(x - grid.coordinate(ln - 1)) > 1e-9 * std::max(1.0, std::abs(x)))
            throw InvalidInput("'" + path + "': x column does not match the trace grid");
        for (std::size_t c = 0; c < 4; ++c)
            cols[c][ln - 1] = detail::parse_number(fields[c + 1], ln + 1);
    }
    TraceDerivatives d;
    d.d1 = SampledFunction(grid, std::move(cols[0]));
    d.d2 = SampledFunction(grid, std::move(cols[1]));
    d.d3 = SampledFunction(grid, std::move(cols[2]));
    d.d4 = SampledFunction(grid, std::move(cols[3]));
    d.analytic = true;
    return d;
}

/// Tabulated shear profile: header y,U with strictly increasing y from 0 to
/// h0 (SI units).
inline ShearProfile load_shear_profile(const std::string& path) {
    const auto lines = detail::read_lines(path);
    if (lines.size() < 2) throw BadHeader("'" + path + "': empty profile file");
    const auto header = detail::split_comma(lines[0]);
    if (header.size() != 2 || header[0] != "y" || header[1] != "U")
        throw BadHeader("'" + path + "': header must be y,U");

    std::vector<double> y, u;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const auto fields = detail::split_comma(lines[ln]);
        if (fields.size() != 2)
            throw InvalidInput("'" + path + "': row " + std::to_string(ln + 1) +
                               " must have 2 fields");
        y.push_back(detail::parse_number(fields[0], ln + 1));
        u.push_back(detail::parse_number(fields[1], ln + 1));
    }
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        if (!(y[i] < y[i + 1]))
            throw InvalidInput("'" + path + "': y must be strictly increasing");
    return ShearProfile::tabulated(std::move(y), std::move(u));
}

/// CSV with an x column followed by named value columns, all floats %.12e.
inline std::string render_csv(const std::vector<std::string>& names,
                              const std::vector<double>& x,
                              const std::vector<const std::vector<double>*>& columns) {
    std::string out = "x";
    for (const auto& n : names) out += "," + n;
    out += "\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        out += format_float(x[i]);
        for (const auto* col : columns) out += "," + format_float((*col)[i]);
        out += "\n";
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace io
}  // namespace presurf
