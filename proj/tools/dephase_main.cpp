// dephase: dephasing dynamics, correlations and pointer-basis regimes of two
// donor charge qubits.
//
//   dephase evolve       --config configs/fig2a.json --out fig2a.csv --emit-plot
//   dephase sweep        --tau-list 0.01,0.035,0.05
//   dephase regimes      --tau 0.0384 --format report
//   dephase pointer-temp --p 0.8
//   dephase verify       --seed 7

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dephase/commands.hpp"
#include "dephase/config.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::optional<double> p;
    std::optional<double> tau;
    std::vector<double> tau_list;
    std::optional<double> t_max;
    std::optional<std::size_t> points;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    bool emit_plot = false;
    bool inject_fault = false;
    bool dump_config = false;
};

void add_common_options(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--config", o.config_path, "JSON configuration file");
    cmd->add_option("--p", o.p, "mixing parameter of the Bell mixture");
    cmd->add_option("--tau", o.tau, "reduced temperature T/T_s");
    cmd->add_option("--tau-list", o.tau_list, "comma-separated temperatures for sweep")->delimiter(',');
    cmd->add_option("--t-max", o.t_max, "end of the time grid (a_B/s)");
    cmd->add_option("--points", o.points, "number of grid points");
    cmd->add_option("--format", o.format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--seed", o.seed, "seed for the random-state suites");
    cmd->add_flag("--emit-plot", o.emit_plot, "also write a gnuplot script next to --out");
    cmd->add_flag("--dump-config", o.dump_config, "print the effective configuration and exit");
}

dephase::RunConfig resolve(const Overrides& o)
{
    dephase::RunConfig cfg = o.config_path.empty() ? dephase::RunConfig{} : dephase::load_config(o.config_path);
    if (o.p) cfg.p = *o.p;
    if (o.tau) cfg.tau = *o.tau;
    if (!o.tau_list.empty()) cfg.tau_list = o.tau_list;
    if (o.t_max) cfg.t_max = *o.t_max;
    if (o.points) cfg.points = *o.points;
    if (o.format) cfg.format = dephase::parse_format(*o.format);
    if (o.out) cfg.out_path = *o.out;
    if (o.seed) cfg.seed = *o.seed;
    if (o.emit_plot) cfg.emit_plot = true;
    cfg.inject_fault = o.inject_fault;
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Non-Markovian dephasing of two donor charge qubits: correlations and pointer bases"};
    app.require_subcommand(1);

    Overrides o;
    using Command = int (*)(const dephase::RunConfig&, std::ostream&, std::ostream&);
    const std::vector<std::pair<std::string, Command>> commands{
        {"evolve", dephase::cmd_evolve},
        {"sweep", dephase::cmd_sweep},
        {"regimes", dephase::cmd_regimes},
        {"pointer-temp", dephase::cmd_pointer_temp},
        {"verify", dephase::cmd_verify},
    };
    const std::vector<std::string> descriptions{
        "time series of b, c, C, D, I, S and the pointer basis",
        "regime report for every temperature in --tau-list",
        "regime report for a single temperature",
        "order-of-magnitude and bisection crossover temperatures",
        "run the oracle and invariant self-check suites",
    };
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
        add_common_options(sub, o);
        subs.push_back(sub);
    }
    subs.back()->add_flag("--inject-fault", o.inject_fault, "test hook: corrupt the analytic side of one suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dephase::kExitInvalidInput;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!subs[i]->parsed()) {
            continue;
        }
        return dephase::run_guarded(
            [&] {
                const auto cfg = resolve(o);
                if (o.dump_config) {
                    std::cout << dephase::dump_config(cfg);
                    return static_cast<int>(dephase::kExitOk);
                }
                return commands[i].second(cfg, std::cout, std::cerr);
            },
            std::cerr);
    }
    return dephase::kExitInvalidInput;
}
