#include "dephase/commands.hpp"

#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "dephase/output.hpp"
#include "dephase/regime.hpp"
#include "dephase/verification.hpp"

#include "json.hpp"

namespace dephase {

namespace {

template <class Fn>
void write_artifact(const std::string& path, std::ostream& fallback, Fn&& fn)
{
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ValidationError(fmt::format("cannot open output file '{}'", path));
    }
    fn(file);
    if (!file) {
        throw NumericError(fmt::format("failed writing '{}'", path));
    }
}

CrossoverContext crossover_context(const RunConfig& config)
{
    CrossoverContext context;
    context.estimate = pointer_temperature_estimate(config.p);
    try {
        context.tau_star =
            crossover_temperature(config.geometry(), config.p, config.t_stationary, config.tau_bracket);
    } catch (const ValidationError&) {
        context.tau_star.reset();
    }
    return context;
}

void emit_regimes(const RunConfig& config, std::span<const SweepEntry> entries, std::ostream& out)
{
    const auto context = crossover_context(config);
    write_artifact(config.out_path, out, [&](std::ostream& sink) {
        if (config.format == OutputFormat::csv) {
            write_regime_table(sink, entries, context);
        } else {
            write_regime_report(sink, config, entries, context);
        }
    });
}

} // namespace

int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    config.validate();
    const auto trajectory =
        Trajectory::simulate(config.geometry(), config.p, SubstrateContext(config.tau), config.time_grid());
    const auto rows = result_rows(trajectory);

    write_artifact(config.out_path, out, [&](std::ostream& sink) {
        if (config.format == OutputFormat::csv) {
            write_series_csv(sink, rows);
        } else {
            write_evolve_report(sink, config, rows, scan_regimes(trajectory));
        }
    });

    if (config.emit_plot) {
        std::string data_path = config.out_path;
        if (config.format != OutputFormat::csv) {
            data_path += ".series.csv";
            write_artifact(data_path, out, [&](std::ostream& sink) { write_series_csv(sink, rows); });
        }
        const std::string script_path = config.out_path + ".gp";
        write_artifact(script_path, out, [&](std::ostream& sink) {
            sink << plot_script(data_path, fmt::format("p = {}, tau = {}", format_number(config.p),
                                                       format_number(config.tau)));
        });
        err << "plot script written to " << script_path << '\n';
    }
    return kExitOk;
}

int cmd_regimes(const RunConfig& config, std::ostream& out, std::ostream&)
{
    config.validate();
    const auto trajectory =
        Trajectory::simulate(config.geometry(), config.p, SubstrateContext(config.tau), config.time_grid());
    const std::vector<SweepEntry> entries{{config.tau, scan_regimes(trajectory), {}}};
    emit_regimes(config, entries, out);
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    config.validate();
    if (config.tau_list.empty()) {
        throw ValidationError("sweep needs a nonempty tau_list");
    }
    const auto grid = config.time_grid();
    const auto entries = temperature_sweep(config.geometry(), config.p, config.tau_list, grid);
    emit_regimes(config, entries, out);

    std::size_t failures = 0;
    for (const auto& e : entries) {
        if (!e.report) {
            ++failures;
            err << fmt::format("tau = {}: {}\n", format_number(e.tau), e.error);
        }
    }
    return failures == entries.size() ? kExitNumericFailure : kExitOk;
}

int cmd_pointer_temp(const RunConfig& config, std::ostream& out, std::ostream&)
{
    config.validate();
    const auto context = crossover_context(config);
    write_artifact(config.out_path, out, [&](std::ostream& sink) {
        if (config.format == OutputFormat::csv) {
            sink << "quantity,value\n";
            sink << "p," << format_number(config.p) << '\n';
            sink << "tau_p_estimate,"
                 << (context.estimate ? format_number(*context.estimate) : std::string("no abrupt transition"))
                 << '\n';
            sink << "tau_star_bisection,"
                 << (context.tau_star ? format_number(*context.tau_star) : std::string("none")) << '\n';
        } else {
            nlohmann::json doc;
            doc["p"] = std::stod(format_number(config.p));
            doc["tau_p_estimate"] =
                context.estimate ? nlohmann::json(std::stod(format_number(*context.estimate))) : nlohmann::json(nullptr);
            doc["tau_p_estimate_note"] = context.estimate ? "order-of-magnitude, -ln|2p-1|/(16 pi)"
                                                          : "no abrupt transition";
            doc["tau_star_bisection"] =
                context.tau_star ? nlohmann::json(std::stod(format_number(*context.tau_star))) : nlohmann::json(nullptr);
            doc["tau_star_note"] = "stationary |a| = b(inf) + c(inf), bisection in tau";
            sink << doc.dump(2) << '\n';
        }
    });
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&)
{
    config.validate();
    const auto results = run_verification(config);
    bool all_passed = true;
    write_artifact(config.out_path, out, [&](std::ostream& sink) {
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            sink << fmt::format("{} {:<30} cases={:<6} worst={:.3e} tol={:.0e}\n", r.passed ? "PASS" : "FAIL",
                                r.name, r.cases, r.worst, r.tolerance);
            if (!r.passed) {
                sink << "     worst case: " << r.offender << '\n';
            }
        }
        sink << (all_passed ? "verify: all suites passed\n" : "verify: FAILED\n");
    });
    return all_passed ? kExitOk : kExitVerificationFailed;
}

int run_guarded(const std::function<int()>& command, std::ostream& err)
{
    try {
        return command();
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumericFailure;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumericFailure;
    }
}

} // namespace dephase
