#include "dephase/kernel.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "dephase/errors.hpp"
#include "dephase/quadrature.hpp"

namespace dephase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_nonnegative(double value, const char* name)
{
    if (!std::isfinite(value) || value < 0.0) {
        throw ValidationError(fmt::format("{} must be finite and >= 0, got {}", name, value));
    }
}

int spin_index(Spin s) { return s == Spin::down ? 0 : 1; }

// Unchecked closed form; callers validate.
double rate_at(double t, double l, double tau)
{
    if (l < kSelfDistance) {
        return 2.0 * kTwoPi * tau * (t * t * t / 3.0 + t * t / 2.0 + t / 4.0) * std::exp(-2.0 * t);
    }
    return kTwoPi / l * tau * (damped_kernel(std::abs(l - t)) - damped_kernel(l + t));
}

} // namespace

double kernel_polynomial(double x) noexcept
{
    return ((x / 6.0 + 0.5) * x + 0.625) * x + 0.3125;
}

double damped_kernel(double x) noexcept { return kernel_polynomial(x) * std::exp(-2.0 * x); }

double gamma_point(double t, double l, double tau)
{
    check_nonnegative(t, "t");
    check_nonnegative(l, "l");
    check_nonnegative(tau, "tau");
    return rate_at(t, l, tau);
}

double gamma_interqubit(double t, int b, int b_prime, const QubitGeometry& geom, double tau)
{
    check_nonnegative(t, "t");
    return DephasingKernel(geom, SubstrateContext(tau)).interqubit_rate(t, b, b_prime);
}

double big_gamma(double t, const SpinPair& m, const SpinPair& s, const QubitGeometry& geom, double tau)
{
    check_nonnegative(t, "t");
    return DephasingKernel(geom, SubstrateContext(tau)).rate(t, m, s);
}

DephasingKernel::DephasingKernel(const QubitGeometry& geom, SubstrateContext ctx) : tau_(ctx.tau())
{
    for (int b = 1; b <= 2; ++b) {
        for (int bp = 1; bp <= 2; ++bp) {
            for (Spin m : {Spin::down, Spin::up}) {
                for (Spin s : {Spin::down, Spin::up}) {
                    const Vec3 from = donor_site(geom, b, static_cast<int>(m));
                    const Vec3 to = donor_site(geom, bp, static_cast<int>(s));
                    distances_[b - 1][bp - 1][spin_index(m)][spin_index(s)] = (from - to).norm();
                }
            }
        }
    }
    for (double l : distance_set(geom).values) {
        if (l > 0.0) {
            kinks_.push_back(l);
        }
    }
}

double DephasingKernel::interqubit_rate(double t, int b, int b_prime) const
{
    if ((b != 1 && b != 2) || (b_prime != 1 && b_prime != 2)) {
        throw ValidationError(fmt::format("qubit indices must be 1 or 2, got ({}, {})", b, b_prime));
    }
    const auto& block = distances_[b - 1][b_prime - 1];
    // 4 m s = +1 for equal spin labels and -1 otherwise.
    return rate_at(t, block[1][1], tau_) - rate_at(t, block[1][0], tau_) - rate_at(t, block[0][1], tau_) +
           rate_at(t, block[0][0], tau_);
}

double DephasingKernel::rate(double t, const SpinPair& m, const SpinPair& s) const
{
    std::array<double, 2> diff{};
    for (int b = 0; b < 2; ++b) {
        diff[b] = spin_value(m[b]) - spin_value(s[b]);
    }
    if (diff[0] == 0.0 && diff[1] == 0.0) {
        return 0.0;
    }
    double total = 0.0;
    for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) {
            const double weight = diff[b] * diff[bp];
            if (weight != 0.0) {
                total += weight * interqubit_rate(t, b + 1, bp + 1);
            }
        }
    }
    return total;
}

double DephasingKernel::outer_rate(double t) const
{
    return rate(t, {Spin::up, Spin::up}, {Spin::down, Spin::down});
}

double DephasingKernel::inner_rate(double t) const
{
    return rate(t, {Spin::up, Spin::down}, {Spin::down, Spin::up});
}

std::array<double, 2> DephasingKernel::integrate(double t0, double t1) const
{
    const double outer = integrate_piecewise([this](double t) { return outer_rate(t); }, t0, t1, kinks_);
    const double inner = integrate_piecewise([this](double t) { return inner_rate(t); }, t0, t1, kinks_);
    return {outer, inner};
}

DecoherenceExponents exponents_on_grid(const QubitGeometry& geom, SubstrateContext ctx,
                                       std::span<const double> t_grid)
{
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw ValidationError("time grid must be nonempty and start at t = 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!std::isfinite(t_grid[i]) || !(t_grid[i] > t_grid[i - 1])) {
            throw ValidationError(fmt::format("time grid must be strictly ascending (index {})", i));
        }
    }

    const DephasingKernel kernel(geom, ctx);
    DecoherenceExponents out;
    out.times.assign(t_grid.begin(), t_grid.end());
    out.outer.resize(t_grid.size());
    out.inner.resize(t_grid.size());
    out.outer[0] = 0.0;
    out.inner[0] = 0.0;
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const auto [d_outer, d_inner] = kernel.integrate(t_grid[i - 1], t_grid[i]);
        out.outer[i] = out.outer[i - 1] + d_outer;
        out.inner[i] = out.inner[i - 1] + d_inner;
    }
    return out;
}

CoherenceSeries coherences(double p, const DecoherenceExponents& exponents)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(fmt::format("mixing parameter p must lie in [0, 1], got {}", p));
    }
    CoherenceSeries out;
    out.b.reserve(exponents.outer.size());
    out.c.reserve(exponents.inner.size());
    for (std::size_t i = 0; i < exponents.outer.size(); ++i) {
        out.b.push_back(p * std::exp(-exponents.outer[i]));
        out.c.push_back((1.0 - p) * std::exp(-exponents.inner[i]));
    }
    return out;
}

std::vector<double> uniform_grid(double t_max, std::size_t n_points)
{
    if (!std::isfinite(t_max) || !(t_max > 0.0)) {
        throw ValidationError(fmt::format("t_max must be finite and > 0, got {}", t_max));
    }
    if (n_points < 2) {
        throw ValidationError(fmt::format("time grid needs at least 2 points, got {}", n_points));
    }
    std::vector<double> grid(n_points);
    const double step = t_max / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        grid[i] = step * static_cast<double>(i);
    }
    grid.back() = t_max;
    return grid;
}

} // namespace dephase
