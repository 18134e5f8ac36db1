#include "dephase/output.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace dephase {

namespace {

using nlohmann::json;

// Values pass through the 12-digit text form so that csv and report agree.
double rounded(double value) { return std::stod(format_number(value)); }

std::string join_numbers(std::span<const double> values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_number(values[i]);
    }
    return out;
}

std::string join_intervals(std::span<const Interval> intervals)
{
    std::string out;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_number(intervals[i].start) + ':' + format_number(intervals[i].end);
    }
    return out;
}

std::string csv_quote(const std::string& text)
{
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

json numbers_json(std::span<const double> values)
{
    json arr = json::array();
    for (double v : values) {
        arr.push_back(rounded(v));
    }
    return arr;
}

json report_json(const RegimeReport& report)
{
    json plateaus = json::array();
    for (const auto& iv : report.plateaus) {
        plateaus.push_back({rounded(iv.start), rounded(iv.end)});
    }
    return {{"crossings", numbers_json(report.crossings)},
            {"plateaus", plateaus},
            {"metastable_count", report.metastable_count},
            {"asymptotic_basis", std::string(short_name(report.asymptotic_basis))},
            {"entropy_maxima", numbers_json(report.entropy_maxima)}};
}

json optional_number(const std::optional<double>& v) { return v ? json(rounded(*v)) : json(nullptr); }

std::string side_of(double tau, const CrossoverContext& context)
{
    if (!context.tau_star) {
        return "n/a";
    }
    if (tau < *context.tau_star) {
        return "below";
    }
    return tau > *context.tau_star ? "above" : "at";
}

BasisLabel parse_label(const std::string& text)
{
    if (text == "Z") {
        return BasisLabel::sigma_z;
    }
    if (text == "X") {
        return BasisLabel::sigma_x;
    }
    if (text == "DEG") {
        return BasisLabel::degenerate;
    }
    throw ValidationError(fmt::format("unknown basis label '{}'", text));
}

} // namespace

std::vector<ResultRow> result_rows(const Trajectory& trajectory)
{
    std::vector<ResultRow> rows;
    rows.reserve(trajectory.points().size());
    for (std::size_t i = 0; i < trajectory.points().size(); ++i) {
        const auto& pt = trajectory.points()[i];
        rows.push_back({pt.t, pt.b, pt.c, pt.classical, pt.discord, pt.mutual, pt.entropy,
                        classify_basis(trajectory.states()[i])});
    }
    return rows;
}

std::string format_number(double value)
{
    if (value == 0.0) {
        value = 0.0;
    }
    return fmt::format("{:.12g}", value);
}

void write_series_csv(std::ostream& out, std::span<const ResultRow> rows)
{
    out << kSeriesHeader << '\n';
    for (const auto& r : rows) {
        out << format_number(r.t) << ',' << format_number(r.b) << ',' << format_number(r.c) << ','
            << format_number(r.classical) << ',' << format_number(r.discord) << ',' << format_number(r.mutual)
            << ',' << format_number(r.entropy) << ',' << short_name(r.basis) << '\n';
    }
}

std::vector<ResultRow> read_series_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kSeriesHeader) {
        throw ValidationError("series csv: missing or unexpected header");
    }
    std::vector<ResultRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 8) {
            throw ValidationError(fmt::format("series csv line {}: expected 8 fields, got {}", line_no, fields.size()));
        }
        ResultRow r;
        try {
            r.t = std::stod(fields[0]);
            r.b = std::stod(fields[1]);
            r.c = std::stod(fields[2]);
            r.classical = std::stod(fields[3]);
            r.discord = std::stod(fields[4]);
            r.mutual = std::stod(fields[5]);
            r.entropy = std::stod(fields[6]);
        } catch (const std::exception&) {
            throw ValidationError(fmt::format("series csv line {}: malformed number", line_no));
        }
        r.basis = parse_label(fields[7]);
        rows.push_back(r);
    }
    return rows;
}

void write_evolve_report(std::ostream& out, const RunConfig& config, std::span<const ResultRow> rows,
                         const RegimeReport& report)
{
    json series = json::array();
    for (const auto& r : rows) {
        series.push_back({{"t", rounded(r.t)},
                          {"b", rounded(r.b)},
                          {"c", rounded(r.c)},
                          {"C", rounded(r.classical)},
                          {"D", rounded(r.discord)},
                          {"I", rounded(r.mutual)},
                          {"S", rounded(r.entropy)},
                          {"basis", std::string(short_name(r.basis))}});
    }
    json doc;
    doc["config"] = json::parse(dump_config(config));
    doc["p"] = rounded(config.p);
    doc["tau"] = rounded(config.tau);
    doc["series"] = std::move(series);
    doc["report"] = report_json(report);
    out << doc.dump(2) << '\n';
}

void write_regime_table(std::ostream& out, std::span<const SweepEntry> entries, const CrossoverContext& context)
{
    out << kRegimeHeader << '\n';
    const std::string tau_star = context.tau_star ? format_number(*context.tau_star) : "none";
    for (const auto& e : entries) {
        out << format_number(e.tau) << ',';
        if (!e.report) {
            out << csv_quote("error: " + e.error) << ",,,,," << tau_star << ',' << side_of(e.tau, context)
                << ",,,\n";
            continue;
        }
        const auto& r = *e.report;
        out << "ok," << r.crossings.size() << ',' << r.plateaus.size() << ',' << r.metastable_count << ','
            << short_name(r.asymptotic_basis) << ',' << tau_star << ',' << side_of(e.tau, context) << ','
            << join_numbers(r.crossings) << ',' << join_intervals(r.plateaus) << ','
            << join_numbers(r.entropy_maxima) << '\n';
    }
}

void write_regime_report(std::ostream& out, const RunConfig& config, std::span<const SweepEntry> entries,
                         const CrossoverContext& context)
{
    json records = json::array();
    for (const auto& e : entries) {
        json rec = {{"tau", rounded(e.tau)}, {"side", side_of(e.tau, context)}};
        if (e.report) {
            rec["status"] = "ok";
            rec["report"] = report_json(*e.report);
        } else {
            rec["status"] = "error";
            rec["error"] = e.error;
        }
        records.push_back(std::move(rec));
    }
    json doc;
    doc["config"] = json::parse(dump_config(config));
    doc["p"] = rounded(config.p);
    doc["tau_star_bisection"] = optional_number(context.tau_star);
    doc["tau_p_estimate"] = optional_number(context.estimate);
    doc["records"] = std::move(records);
    out << doc.dump(2) << '\n';
}

std::string plot_script(const std::string& data_path, const std::string& title)
{
    return fmt::format(
        "# gnuplot script; run with: gnuplot -persist <this file>\n"
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set title '{1}'\n"
        "set xlabel 't [a_B/s]'\n"
        "set ylabel 'bits'\n"
        "plot '{0}' using 1:4 with lines lw 2 lc rgb 'red' dt 1 title 'C', \\\n"
        "     '{0}' using 1:5 with lines lw 2 lc rgb 'blue' dt 2 title 'D', \\\n"
        "     '{0}' using 1:7 with lines lw 2 lc rgb 'black' dt 1 title 'S'\n",
        data_path, title);
}

} // namespace dephase
