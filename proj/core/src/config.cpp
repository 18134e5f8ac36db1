#include "dephase/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace dephase {

namespace {

using nlohmann::json;

void reject_unknown(const json& section, const std::string& where, const std::set<std::string>& allowed)
{
    if (!section.is_object()) {
        throw ValidationError(fmt::format("{}: expected an object", where));
    }
    for (const auto& [key, value] : section.items()) {
        if (!allowed.contains(key)) {
            throw ValidationError(fmt::format("{}/{}: unknown key", where, key));
        }
    }
}

double read_number(const json& v, const std::string& where)
{
    if (!v.is_number()) {
        throw ValidationError(fmt::format("{}: expected a number", where));
    }
    return v.get<double>();
}

std::uint64_t read_unsigned(const json& v, const std::string& where)
{
    if (!v.is_number_unsigned()) {
        throw ValidationError(fmt::format("{}: expected a non-negative integer", where));
    }
    return v.get<std::uint64_t>();
}

bool read_bool(const json& v, const std::string& where)
{
    if (!v.is_boolean()) {
        throw ValidationError(fmt::format("{}: expected true or false", where));
    }
    return v.get<bool>();
}

std::string read_string(const json& v, const std::string& where)
{
    if (!v.is_string()) {
        throw ValidationError(fmt::format("{}: expected a string", where));
    }
    return v.get<std::string>();
}

std::vector<double> read_numbers(const json& v, const std::string& where)
{
    if (!v.is_array()) {
        throw ValidationError(fmt::format("{}: expected an array of numbers", where));
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(read_number(v[i], fmt::format("{}/{}", where, i)));
    }
    return out;
}

std::array<double, 3> read_vec3(const json& v, const std::string& where)
{
    const auto values = read_numbers(v, where);
    if (values.size() != 3) {
        throw ValidationError(fmt::format("{}: expected 3 components, got {}", where, values.size()));
    }
    return {values[0], values[1], values[2]};
}

template <class Fn>
void with_key(const json& section, const char* key, Fn&& fn)
{
    if (section.contains(key)) {
        fn(section.at(key));
    }
}

} // namespace

std::array<double, 3> standard_offset_2()
{
    const Vec3 d2 = QubitGeometry::standard().offset(2);
    return {d2.x(), d2.y(), d2.z()};
}

QubitGeometry RunConfig::geometry() const
{
    auto vec = [](const std::array<double, 3>& a) { return Vec3(a[0], a[1], a[2]); };
    return QubitGeometry(vec(r1), vec(d1), vec(r2), vec(d2));
}

std::vector<double> RunConfig::time_grid() const { return uniform_grid(t_max, points); }

void RunConfig::validate() const
{
    (void)geometry();
    (void)time_grid();
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(fmt::format("/dynamics/p: must lie in [0, 1], got {}", p));
    }
    (void)SubstrateContext(tau);
    for (std::size_t i = 0; i < tau_list.size(); ++i) {
        if (!std::isfinite(tau_list[i]) || tau_list[i] < 0.0) {
            throw ValidationError(fmt::format("/dynamics/tau_list/{}: must be finite and >= 0", i));
        }
    }
    if (!(t_stationary > 0.0 && std::isfinite(t_stationary))) {
        throw ValidationError("/dynamics/t_stationary: must be finite and > 0");
    }
    if (!(tau_bracket.lo >= 0.0 && tau_bracket.hi > tau_bracket.lo && std::isfinite(tau_bracket.hi))) {
        throw ValidationError("/dynamics/tau_bracket: needs 0 <= lo < hi");
    }
    if (oracle_grid.n_theta < kMinThetaPoints || oracle_grid.n_phi < kMinPhiPoints) {
        throw ValidationError(fmt::format("/oracle: grid must be at least {}x{}", kMinThetaPoints, kMinPhiPoints));
    }
    if (!(refine_tol > 0.0)) {
        throw ValidationError("/oracle/refine_tol: must be > 0");
    }
    if (emit_plot && out_path.empty()) {
        throw ValidationError("/output/emit_plot: requires an output path");
    }
}

std::string_view format_name(OutputFormat format) noexcept
{
    return format == OutputFormat::csv ? "csv" : "report";
}

OutputFormat parse_format(std::string_view name)
{
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "report") {
        return OutputFormat::report;
    }
    throw ValidationError(fmt::format("unknown output format '{}' (expected csv or report)", name));
}

RunConfig parse_config(const std::string& text, const std::string& source)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(fmt::format("{}: {}", source, e.what()));
    }

    RunConfig cfg;
    try {
        reject_unknown(doc, "", {"geometry", "dynamics", "oracle", "output"});

        with_key(doc, "geometry", [&](const json& g) {
            reject_unknown(g, "/geometry", {"r1", "d1", "r2", "d2"});
            with_key(g, "r1", [&](const json& v) { cfg.r1 = read_vec3(v, "/geometry/r1"); });
            with_key(g, "d1", [&](const json& v) { cfg.d1 = read_vec3(v, "/geometry/d1"); });
            with_key(g, "r2", [&](const json& v) { cfg.r2 = read_vec3(v, "/geometry/r2"); });
            with_key(g, "d2", [&](const json& v) { cfg.d2 = read_vec3(v, "/geometry/d2"); });
        });

        with_key(doc, "dynamics", [&](const json& d) {
            reject_unknown(d, "/dynamics",
                           {"p", "tau", "tau_list", "t_max", "points", "t_stationary", "tau_bracket"});
            with_key(d, "p", [&](const json& v) { cfg.p = read_number(v, "/dynamics/p"); });
            with_key(d, "tau", [&](const json& v) { cfg.tau = read_number(v, "/dynamics/tau"); });
            with_key(d, "tau_list", [&](const json& v) { cfg.tau_list = read_numbers(v, "/dynamics/tau_list"); });
            with_key(d, "t_max", [&](const json& v) { cfg.t_max = read_number(v, "/dynamics/t_max"); });
            with_key(d, "points", [&](const json& v) { cfg.points = read_unsigned(v, "/dynamics/points"); });
            with_key(d, "t_stationary",
                     [&](const json& v) { cfg.t_stationary = read_number(v, "/dynamics/t_stationary"); });
            with_key(d, "tau_bracket", [&](const json& v) {
                const auto b = read_numbers(v, "/dynamics/tau_bracket");
                if (b.size() != 2) {
                    throw ValidationError("/dynamics/tau_bracket: expected [lo, hi]");
                }
                cfg.tau_bracket = {b[0], b[1]};
            });
        });

        with_key(doc, "oracle", [&](const json& o) {
            reject_unknown(o, "/oracle", {"n_theta", "n_phi", "refine_tol", "states", "identity_states", "seed"});
            with_key(o, "n_theta",
                     [&](const json& v) { cfg.oracle_grid.n_theta = static_cast<int>(read_unsigned(v, "/oracle/n_theta")); });
            with_key(o, "n_phi",
                     [&](const json& v) { cfg.oracle_grid.n_phi = static_cast<int>(read_unsigned(v, "/oracle/n_phi")); });
            with_key(o, "refine_tol", [&](const json& v) { cfg.refine_tol = read_number(v, "/oracle/refine_tol"); });
            with_key(o, "states", [&](const json& v) { cfg.oracle_states = read_unsigned(v, "/oracle/states"); });
            with_key(o, "identity_states",
                     [&](const json& v) { cfg.identity_states = read_unsigned(v, "/oracle/identity_states"); });
            with_key(o, "seed", [&](const json& v) { cfg.seed = read_unsigned(v, "/oracle/seed"); });
        });

        with_key(doc, "output", [&](const json& o) {
            reject_unknown(o, "/output", {"format", "path", "emit_plot"});
            with_key(o, "format", [&](const json& v) { cfg.format = parse_format(read_string(v, "/output/format")); });
            with_key(o, "path", [&](const json& v) { cfg.out_path = read_string(v, "/output/path"); });
            with_key(o, "emit_plot", [&](const json& v) { cfg.emit_plot = read_bool(v, "/output/emit_plot"); });
        });
    } catch (const ValidationError& e) {
        throw ValidationError(fmt::format("{}: {}", source, e.what()));
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(fmt::format("cannot open config file '{}'", path.string()));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.string());
}

std::string dump_config(const RunConfig& cfg)
{
    json doc;
    doc["geometry"] = {{"r1", cfg.r1}, {"d1", cfg.d1}, {"r2", cfg.r2}, {"d2", cfg.d2}};
    doc["dynamics"] = {{"p", cfg.p},
                       {"tau", cfg.tau},
                       {"tau_list", cfg.tau_list},
                       {"t_max", cfg.t_max},
                       {"points", cfg.points},
                       {"t_stationary", cfg.t_stationary},
                       {"tau_bracket", {cfg.tau_bracket.lo, cfg.tau_bracket.hi}}};
    doc["oracle"] = {{"n_theta", cfg.oracle_grid.n_theta},
                     {"n_phi", cfg.oracle_grid.n_phi},
                     {"refine_tol", cfg.refine_tol},
                     {"states", cfg.oracle_states},
                     {"identity_states", cfg.identity_states},
                     {"seed", cfg.seed}};
    doc["output"] = {{"format", std::string(format_name(cfg.format))},
                     {"path", cfg.out_path},
                     {"emit_plot", cfg.emit_plot}};
    return doc.dump(2) + "\n";
}

} // namespace dephase
