#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dephase/config.hpp"
#include "dephase/regime.hpp"

namespace dephase {

/// One line of the time-series file.
struct ResultRow {
    double t = 0.0;
    double b = 0.0;
    double c = 0.0;
    double classical = 0.0;
    double discord = 0.0;
    double mutual = 0.0;
    double entropy = 0.0;
    BasisLabel basis = BasisLabel::sigma_x;
};

inline constexpr std::string_view kSeriesHeader = "t,b,c,C,D,I,S,basis";

std::vector<ResultRow> result_rows(const Trajectory& trajectory);

/// 12 significant digits, '.' decimal separator, no negative zero.
std::string format_number(double value);

void write_series_csv(std::ostream& out, std::span<const ResultRow> rows);

/// Parses what write_series_csv produced; throws ValidationError on malformed input.
std::vector<ResultRow> read_series_csv(std::istream& in);

/// Single-trajectory JSON document: config echo, series and regime report.
void write_evolve_report(std::ostream& out, const RunConfig& config, std::span<const ResultRow> rows,
                         const RegimeReport& report);

/// Context for sweep and regime tables: the bisection crossover, when one exists.
struct CrossoverContext {
    std::optional<double> tau_star;
    std::optional<double> estimate;
};

inline constexpr std::string_view kRegimeHeader =
    "tau,status,crossings,plateaus,metastable,asymptotic,tau_star,side,crossing_times,plateau_intervals,"
    "entropy_maxima";

void write_regime_table(std::ostream& out, std::span<const SweepEntry> entries, const CrossoverContext& context);

void write_regime_report(std::ostream& out, const RunConfig& config, std::span<const SweepEntry> entries,
                         const CrossoverContext& context);

/// Gnuplot script drawing C (solid), D (dashed) and S (solid black) from a series CSV.
std::string plot_script(const std::string& data_path, const std::string& title);

} // namespace dephase
