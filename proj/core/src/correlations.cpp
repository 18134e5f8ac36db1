#include "dephase/correlations.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

double clamp_into(double value, double lo, double hi, const char* name)
{
    if (!std::isfinite(value) || value < lo - kBoundarySlack || value > hi + kBoundarySlack) {
        throw ValidationError(fmt::format("{} = {} outside [{}, {}]", name, value, lo, hi));
    }
    return std::clamp(value, lo, hi);
}

double x_log2_x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// p K(b/p) with the vanishing-weight limit 0 at p = 0.
double weighted_k(double weight, double coherence)
{
    if (weight <= 0.0) {
        return 0.0;
    }
    return weight * k_function(std::min(coherence / weight, 1.0));
}

} // namespace

XState::XState(double p, double b, double c)
{
    p_ = clamp_into(p, 0.0, 1.0, "p");
    b_ = clamp_into(b, 0.0, p_, "b");
    c_ = clamp_into(c, 0.0, 1.0 - p_, "c");
}

std::array<double, 4> XState::eigenvalues() const noexcept
{
    return {0.5 * (p_ + b_), 0.5 * (p_ - b_), 0.5 * (1.0 - p_ + c_), 0.5 * (1.0 - p_ - c_)};
}

double shannon_bits(std::span<const double> weights)
{
    double h = 0.0;
    for (double w : weights) {
        h -= x_log2_x(w);
    }
    return h;
}

double k_function(double x)
{
    x = clamp_into(x, 0.0, 1.0, "K argument");
    const std::array<double, 2> split{0.5 * (1.0 + x), 0.5 * (1.0 - x)};
    return shannon_bits(split);
}

double optimal_weight(const XState& state) noexcept
{
    return std::max(std::abs(state.a()), state.b() + state.c());
}

double classical_correlation(const XState& state)
{
    return 1.0 - k_function(std::min(optimal_weight(state), 1.0));
}

double quantum_discord(const XState& state)
{
    const double p = state.p();
    const double q = 1.0 - p;
    return 1.0 + x_log2_x(p) + x_log2_x(q) + k_function(std::min(optimal_weight(state), 1.0)) -
           weighted_k(p, state.b()) - weighted_k(q, state.c());
}

double joint_entropy(const XState& state)
{
    const auto lambda = state.eigenvalues();
    return shannon_bits(lambda);
}

double mutual_information(const XState& state) { return 2.0 - joint_entropy(state); }

CorrelationPoint evaluate_correlations(double t, const XState& state)
{
    CorrelationPoint point;
    point.t = t;
    point.b = state.b();
    point.c = state.c();
    point.classical = classical_correlation(state);
    point.discord = quantum_discord(state);
    point.mutual = mutual_information(state);
    point.entropy = joint_entropy(state);
    return point;
}

} // namespace dephase
