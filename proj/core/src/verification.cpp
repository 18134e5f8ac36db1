#include "dephase/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "dephase/kernel.hpp"
#include "dephase/oracle.hpp"
#include "dephase/quadrature.hpp"
#include "dephase/reference_integrals.hpp"
#include "dephase/regime.hpp"

namespace dephase {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const XState& s)
{
    return fmt::format("p={:.12g} b={:.12g} c={:.12g}", s.p(), s.b(), s.c());
}

void record(SuiteResult& result, double deviation, const std::string& where)
{
    const bool first = result.cases++ == 0;
    if (first || !(deviation <= result.worst)) {
        result.worst = deviation;
        result.offender = where;
    }
}

void finish(SuiteResult& result) { result.passed = result.worst <= result.tolerance; }

std::vector<double> positivity_taus(const RunConfig& config)
{
    std::vector<double> taus{config.tau};
    taus.insert(taus.end(), config.tau_list.begin(), config.tau_list.end());
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    return taus;
}

} // namespace

XState random_xstate(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    const double b = p * unit(rng);
    const double c = (1.0 - p) * unit(rng);
    return XState(p, b, c);
}

SuiteResult verify_oracle_equivalence(const RunConfig& config)
{
    SuiteResult result{"oracle_equivalence", false, 0.0, 1e-6, 0, {}};
    std::mt19937_64 rng(config.seed);
    const double angle_tol = 1e-3;
    for (std::size_t n = 0; n < config.oracle_states; ++n) {
        const XState state = random_xstate(rng);
        const auto best = maximize_classical(state, config.oracle_grid, config.refine_tol);
        double analytic = classical_correlation(state);
        if (config.inject_fault) {
            analytic += 1e-3;
        }
        const double value_gap = std::abs(best.value - analytic);
        const double theta = best.argmax.theta();
        const double angle_gap = pointer_margin(state) > 0.0 ? std::min(theta, kPi - theta)
                                                             : std::abs(theta - 0.5 * kPi);
        // An argmax off by more than angle_tol counts as a full failure.
        const double deviation = angle_gap > angle_tol ? std::max(value_gap, 1.0) : value_gap;
        record(result, deviation,
               fmt::format("{} C_oracle={:.12g} C_analytic={:.12g} theta={:.6g} phi={:.6g}", describe(state),
                           best.value, analytic, theta, best.argmax.phi()));
    }
    finish(result);
    return result;
}

SuiteResult verify_quadrature(const RunConfig& config)
{
    SuiteResult result{"quadrature_vs_antiderivative", false, 0.0, 1e-8, 0, {}};
    for (double l : {5.0, 10.0, 20.0}) {
        for (double tau : {0.01, 0.05}) {
            const double upper = l + 40.0;
            const std::array<double, 1> kink{l};
            const double numeric =
                integrate_piecewise([&](double t) { return gamma_point(t, l, tau); }, 0.0, upper, kink);
            const double closed = reference::gamma_total_integral(l, tau);
            record(result, std::abs(numeric - closed),
                   fmt::format("gamma integral l={} tau={} numeric={:.15g} closed={:.15g}", l, tau, numeric, closed));
        }
    }

    const auto geom = config.geometry();
    const auto grid = config.time_grid();
    const auto exponents = exponents_on_grid(geom, SubstrateContext(config.tau), grid);
    const std::size_t stride = std::max<std::size_t>(1, grid.size() / 200);
    for (std::size_t i = 0; i < grid.size(); i += stride) {
        const auto closed = reference::exponents_at(geom, config.tau, grid[i]);
        const double dev = std::max(std::abs(exponents.outer[i] - closed[0]), std::abs(exponents.inner[i] - closed[1]));
        record(result, dev, fmt::format("exponents at t={:.12g} tau={}", grid[i], config.tau));
    }
    finish(result);
    return result;
}

SuiteResult verify_identity(const RunConfig& config)
{
    SuiteResult result{"identity_I_eq_C_plus_D", false, 0.0, 1e-12, 0, {}};
    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t n = 0; n < config.identity_states; ++n) {
        const XState state = random_xstate(rng);
        const double gap =
            std::abs(mutual_information(state) - classical_correlation(state) - quantum_discord(state));
        record(result, gap, describe(state));
    }
    finish(result);
    return result;
}

SuiteResult verify_positivity(const RunConfig& config)
{
    SuiteResult result{"positivity_and_trace", false, 0.0, 1e-12, 0, {}};
    const auto geom = config.geometry();
    const auto grid = config.time_grid();
    for (double tau : positivity_taus(config)) {
        const auto trajectory = Trajectory::simulate(geom, config.p, SubstrateContext(tau), grid);
        const auto& ex = trajectory.exponents();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto lambda = trajectory.states()[i].eigenvalues();
            const double most_negative = std::min(0.0, *std::min_element(lambda.begin(), lambda.end()));
            const double trace_gap = std::abs(lambda[0] + lambda[1] + lambda[2] + lambda[3] - 1.0);
            const double growth = std::max(0.0, std::max(std::exp(-ex.outer[i]), std::exp(-ex.inner[i])) - 1.0);
            record(result, std::max({-most_negative, trace_gap, growth}),
                   fmt::format("tau={} t={:.12g}", tau, grid[i]));
        }
    }
    finish(result);
    return result;
}

SuiteResult verify_dense_vs_closed_form(const RunConfig& config)
{
    SuiteResult result{"dense_vs_closed_form_G", false, 0.0, 1e-10, 0, {}};
    std::mt19937_64 rng(config.seed + 1);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
    for (std::size_t n = 0; n < config.oracle_states; ++n) {
        const XState state = random_xstate(rng);
        const double theta = theta_dist(rng);
        const double phi = phi_dist(rng);
        const double dense = classical_info_at(densify(state), MeasurementBasis(theta, phi));
        const double closed = big_g_closed_form(state, theta, phi);
        record(result, std::abs(dense - closed),
               fmt::format("{} theta={:.12g} phi={:.12g}", describe(state), theta, phi));
    }
    finish(result);
    return result;
}

std::vector<SuiteResult> run_verification(const RunConfig& config)
{
    return {verify_oracle_equivalence(config), verify_quadrature(config), verify_identity(config),
            verify_positivity(config), verify_dense_vs_closed_form(config)};
}

} // namespace dephase
