#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dephase/geometry.hpp"
#include "dephase/oracle.hpp"
#include "dephase/regime.hpp"

namespace dephase {

enum class OutputFormat { csv, report };

/// d2 of QubitGeometry::standard() as plain components.
std::array<double, 3> standard_offset_2();

/// Everything one CLI invocation needs. Defaults reproduce the standard
/// geometry, p = 0.8 and a 4000-point grid on [0, 400].
struct RunConfig {
    std::array<double, 3> r1{0.0, 0.0, 0.0};
    std::array<double, 3> d1{10.0, 0.0, 0.0};
    std::array<double, 3> r2{20.0, 0.0, 0.0};
    std::array<double, 3> d2{standard_offset_2()};

    double p = 0.8;
    double tau = 0.01;
    std::vector<double> tau_list;
    double t_max = 400.0;
    std::size_t points = 4000;
    double t_stationary = 400.0;
    TemperatureBracket tau_bracket{};

    OracleGrid oracle_grid{};
    double refine_tol = 1e-9;
    std::size_t oracle_states = 1000;
    std::size_t identity_states = 10000;
    std::uint64_t seed = 20140612;

    OutputFormat format = OutputFormat::csv;
    std::string out_path;
    bool emit_plot = false;

    /// Test hook for `verify`: perturbs the analytic side of the oracle suite.
    bool inject_fault = false;

    QubitGeometry geometry() const;
    std::vector<double> time_grid() const;

    /// Re-checks every module precondition; throws ValidationError.
    void validate() const;
};

/// Parses a JSON document with optional sections "geometry", "dynamics",
/// "oracle" and "output". Unknown keys and wrong types are rejected with the
/// JSON pointer of the offending entry.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");

RunConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config; the output reloads to an identical RunConfig.
std::string dump_config(const RunConfig& config);

std::string_view format_name(OutputFormat format) noexcept;

OutputFormat parse_format(std::string_view name);

} // namespace dephase
