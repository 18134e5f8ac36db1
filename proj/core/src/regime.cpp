#include "dephase/regime.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <thread>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

namespace dephase {

namespace {

int sign_of(double margin)
{
    if (margin > kLabelTolerance) {
        return 1;
    }
    if (margin < -kLabelTolerance) {
        return -1;
    }
    return 0;
}

BasisLabel label_of_sign(int sign)
{
    return sign > 0 ? BasisLabel::sigma_z : (sign < 0 ? BasisLabel::sigma_x : BasisLabel::degenerate);
}

XState state_from_exponents(double p, double outer, double inner)
{
    return XState(p, p * std::exp(-outer), (1.0 - p) * std::exp(-inner));
}

double parabola_vertex(double x1, double y1, double x2, double y2, double x3, double y3)
{
    const double num = (x2 - x1) * (x2 - x1) * (y2 - y3) - (x2 - x3) * (x2 - x3) * (y2 - y1);
    const double den = (x2 - x1) * (y2 - y3) - (x2 - x3) * (y2 - y1);
    if (den == 0.0) {
        return x2;
    }
    return std::clamp(x2 - 0.5 * num / den, x1, x3);
}

struct Segment {
    Interval span;
    BasisLabel label;
};

std::vector<double> find_crossings(const Trajectory& trajectory, const std::vector<double>& margins)
{
    const auto& ts = trajectory.times();
    auto margin_at = [&](double t) { return pointer_margin(trajectory.state_at(t)); };

    std::vector<double> crossings;
    std::ptrdiff_t last = -1;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const int s = sign_of(margins[i]);
        if (s == 0) {
            continue;
        }
        if (last >= 0) {
            const int s_last = sign_of(margins[last]);
            if (s != s_last) {
                double lo = ts[last];
                double hi = ts[i];
                while (hi - lo > kCrossingTolerance) {
                    const double mid = 0.5 * (lo + hi);
                    if ((margin_at(mid) > 0.0) == (s_last > 0)) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                crossings.push_back(0.5 * (lo + hi));
            } else if (static_cast<std::size_t>(last) + 1 == i) {
                const double mid = 0.5 * (ts[last] + ts[i]);
                if (sign_of(margin_at(mid)) == -s) {
                    throw TrajectoryTooCoarse(ts[last], ts[i]);
                }
            }
        }
        last = static_cast<std::ptrdiff_t>(i);
    }
    return crossings;
}

std::vector<Segment> build_segments(const std::vector<double>& ts, const std::vector<double>& margins,
                                    const std::vector<double>& crossings)
{
    int first_sign = 0;
    for (double m : margins) {
        if ((first_sign = sign_of(m)) != 0) {
            break;
        }
    }
    std::vector<Segment> segments;
    double start = ts.front();
    int sign = first_sign;
    for (double c : crossings) {
        segments.push_back({{start, c}, label_of_sign(sign)});
        start = c;
        sign = -sign;
    }
    segments.push_back({{start, ts.back()}, label_of_sign(sign)});
    return segments;
}

std::vector<double> entropy_maxima(const std::vector<double>& ts, const std::vector<CorrelationPoint>& points)
{
    std::vector<double> maxima;
    if (points.size() < 3) {
        return maxima;
    }
    bool seeking_max = false;
    std::size_t extreme = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double s = points[i].entropy;
        const double ref = points[extreme].entropy;
        if (seeking_max) {
            if (s > ref) {
                extreme = i;
            } else if (ref - s > kEntropyProminence) {
                if (extreme > 0 && extreme + 1 < points.size()) {
                    maxima.push_back(parabola_vertex(ts[extreme - 1], points[extreme - 1].entropy, ts[extreme],
                                                     ref, ts[extreme + 1], points[extreme + 1].entropy));
                }
                seeking_max = false;
                extreme = i;
            }
        } else {
            if (s < ref) {
                extreme = i;
            } else if (s - ref > kEntropyProminence) {
                seeking_max = true;
                extreme = i;
            }
        }
    }
    return maxima;
}

} // namespace

std::string_view short_name(BasisLabel label) noexcept
{
    switch (label) {
    case BasisLabel::sigma_z:
        return "Z";
    case BasisLabel::sigma_x:
        return "X";
    case BasisLabel::degenerate:
        return "DEG";
    }
    return "DEG";
}

double pointer_margin(const XState& state) noexcept { return std::abs(state.a()) - (state.b() + state.c()); }

BasisLabel classify_basis(const XState& state) noexcept { return label_of_sign(sign_of(pointer_margin(state))); }

Trajectory::Trajectory(DephasingKernel kernel, double p, DecoherenceExponents exponents)
    : kernel_(std::move(kernel)), p_(p), exponents_(std::move(exponents))
{
    states_.reserve(exponents_.times.size());
    points_.reserve(exponents_.times.size());
    for (std::size_t i = 0; i < exponents_.times.size(); ++i) {
        try {
            states_.push_back(state_from_exponents(p_, exponents_.outer[i], exponents_.inner[i]));
        } catch (const ValidationError& e) {
            throw NumericError(fmt::format("density matrix lost positivity at t = {:.12g}: {}",
                                           exponents_.times[i], e.what()));
        }
        points_.push_back(evaluate_correlations(exponents_.times[i], states_.back()));
    }
}

Trajectory Trajectory::simulate(const QubitGeometry& geom, double p, SubstrateContext ctx,
                                std::span<const double> t_grid)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(fmt::format("mixing parameter p must lie in [0, 1], got {}", p));
    }
    return Trajectory(DephasingKernel(geom, ctx), p, exponents_on_grid(geom, ctx, t_grid));
}

XState Trajectory::state_at(double t) const
{
    const auto& ts = exponents_.times;
    if (!(t >= ts.front())) {
        throw ValidationError(fmt::format("state_at: t = {} precedes the grid", t));
    }
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const std::size_t i = static_cast<std::size_t>(std::distance(ts.begin(), it)) - 1;
    if (ts[i] == t) {
        return states_[i];
    }
    const auto [d_outer, d_inner] = kernel_.integrate(ts[i], t);
    return state_from_exponents(p_, exponents_.outer[i] + d_outer, exponents_.inner[i] + d_inner);
}

TrajectoryTooCoarse::TrajectoryTooCoarse(double t_lo, double t_hi)
    : NumericError(fmt::format("pointer margin changes sign twice inside [{:.12g}, {:.12g}]; densify the grid",
                               t_lo, t_hi)),
      lower_(t_lo), upper_(t_hi)
{
}

RegimeReport scan_regimes(const Trajectory& trajectory)
{
    const auto& ts = trajectory.times();
    const auto& states = trajectory.states();
    const auto& points = trajectory.points();

    std::vector<double> margins(states.size());
    std::transform(states.begin(), states.end(), margins.begin(), pointer_margin);

    RegimeReport report;
    report.crossings = find_crossings(trajectory, margins);
    const auto segments = build_segments(ts, margins, report.crossings);

    const double min_length = kPlateauFraction * (ts.back() - ts.front());
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const auto& seg = segments[k];
        if (seg.label != BasisLabel::sigma_z || !(seg.span.length() > min_length)) {
            continue;
        }
        report.plateaus.push_back(seg.span);
        const bool replaced = std::any_of(segments.begin() + static_cast<std::ptrdiff_t>(k) + 1, segments.end(),
                                          [&](const Segment& later) {
                                              return later.label == BasisLabel::sigma_x &&
                                                     later.span.length() > min_length;
                                          });
        if (replaced) {
            ++report.metastable_count;
        }

        // On a sigma_z plateau C depends on |a| only.
        const double expected = 1.0 - k_function(std::abs(trajectory.states().front().a()));
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (ts[i] > seg.span.start && ts[i] < seg.span.end &&
                std::abs(points[i].classical - expected) > 1e-9) {
                throw NumericError(fmt::format("classical correlation not constant on sigma_z plateau at t = {:.12g}",
                                               ts[i]));
            }
        }
    }
    report.asymptotic_basis = classify_basis(states.back());
    report.entropy_maxima = entropy_maxima(ts, points);
    return report;
}

std::optional<double> pointer_temperature_estimate(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(fmt::format("mixing parameter p must lie in [0, 1], got {}", p));
    }
    const double a = std::abs(2.0 * p - 1.0);
    if (a == 0.0) {
        return std::nullopt;
    }
    return -std::log(a) / (16.0 * std::numbers::pi) + 0.0;
}

double stationary_margin(const QubitGeometry& geom, double p, double tau, double t_stationary)
{
    const DephasingKernel kernel(geom, SubstrateContext(tau));
    const auto [outer, inner] = kernel.integrate(0.0, t_stationary);
    return pointer_margin(state_from_exponents(p, outer, inner));
}

double crossover_temperature(const QubitGeometry& geom, double p, double t_stationary, TemperatureBracket bracket)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(fmt::format("mixing parameter p must lie in [0, 1], got {}", p));
    }
    if (!(bracket.lo >= 0.0 && bracket.hi > bracket.lo && std::isfinite(bracket.hi))) {
        throw ValidationError(fmt::format("invalid temperature bracket [{}, {}]", bracket.lo, bracket.hi));
    }
    if (!(t_stationary > 0.0 && std::isfinite(t_stationary))) {
        throw ValidationError("t_stationary must be finite and > 0");
    }

    // Exponents scale with tau, so the hottest end bounds the late-time drift.
    const DephasingKernel hottest(geom, SubstrateContext(bracket.hi));
    const auto [drift_outer, drift_inner] = hottest.integrate(0.5 * t_stationary, t_stationary);
    if (std::max(std::abs(drift_outer), std::abs(drift_inner)) > kStationaryIncrement) {
        throw ValidationError(fmt::format(
            "exponents still drift by {:.3e} over [{:.6g}, {:.6g}]; increase t_stationary",
            std::max(std::abs(drift_outer), std::abs(drift_inner)), 0.5 * t_stationary, t_stationary));
    }

    auto margin = [&](double tau) { return stationary_margin(geom, p, tau, t_stationary); };
    const double at_lo = margin(bracket.lo);
    const double at_hi = margin(bracket.hi);
    if (!((at_lo < 0.0 && at_hi > 0.0) || (at_lo > 0.0 && at_hi < 0.0))) {
        throw ValidationError(fmt::format(
            "no sign change of |a|-(b+c) in tau bracket [{}, {}] (margins {:.6g}, {:.6g})", bracket.lo,
            bracket.hi, at_lo, at_hi));
    }
    auto width_reached = [](double lo, double hi) { return hi - lo <= kCrossoverTolerance; };
    const auto [lo, hi] = boost::math::tools::bisect(margin, bracket.lo, bracket.hi, width_reached);
    return 0.5 * (lo + hi);
}

std::vector<SweepEntry> temperature_sweep(const QubitGeometry& geom, double p, std::span<const double> taus,
                                          std::span<const double> t_grid)
{
    std::vector<std::size_t> order(taus.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return taus[i] < taus[j]; });

    auto run_one = [&geom, p, t_grid](double tau) {
        SweepEntry entry;
        entry.tau = tau;
        try {
            entry.report = scan_regimes(Trajectory::simulate(geom, p, SubstrateContext(tau), t_grid));
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        return entry;
    };

    std::vector<SweepEntry> entries;
    entries.reserve(order.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < order.size(); begin += workers) {
        const std::size_t end = std::min(order.size(), begin + workers);
        std::vector<std::future<SweepEntry>> batch;
        for (std::size_t k = begin; k < end; ++k) {
            batch.push_back(std::async(std::launch::async, run_one, taus[order[k]]));
        }
        for (auto& f : batch) {
            entries.push_back(f.get());
        }
    }
    return entries;
}

} // namespace dephase
