#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dephase/correlations.hpp"
#include "dephase/errors.hpp"
#include "dephase/geometry.hpp"
#include "dephase/kernel.hpp"

namespace dephase {

/// Pointer basis maximising the classical information at one instant.
enum class BasisLabel { sigma_z, sigma_x, degenerate };

/// "Z", "X" or "DEG".
std::string_view short_name(BasisLabel label) noexcept;

inline constexpr double kLabelTolerance = 1e-10;

/// |a| - (b + c); positive when the sigma_z basis wins.
double pointer_margin(const XState& state) noexcept;

BasisLabel classify_basis(const XState& state) noexcept;

/// Dephasing trajectory of the Bell mixture on a time grid. Off-grid states are
/// obtained by integrating the rates from the nearest earlier grid time.
class Trajectory {
public:
    static Trajectory simulate(const QubitGeometry& geom, double p, SubstrateContext ctx,
                               std::span<const double> t_grid);

    double p() const noexcept { return p_; }
    double tau() const noexcept { return kernel_.tau(); }

    const std::vector<double>& times() const noexcept { return exponents_.times; }
    const DecoherenceExponents& exponents() const noexcept { return exponents_; }
    const std::vector<XState>& states() const noexcept { return states_; }
    const std::vector<CorrelationPoint>& points() const noexcept { return points_; }

    XState state_at(double t) const;

private:
    Trajectory(DephasingKernel kernel, double p, DecoherenceExponents exponents);

    DephasingKernel kernel_;
    double p_;
    DecoherenceExponents exponents_;
    std::vector<XState> states_;
    std::vector<CorrelationPoint> points_;
};

struct Interval {
    double start = 0.0;
    double end = 0.0;

    double length() const noexcept { return end - start; }
    bool operator==(const Interval&) const = default;
};

struct RegimeReport {
    std::vector<double> crossings;
    std::vector<Interval> plateaus;
    int metastable_count = 0;
    BasisLabel asymptotic_basis = BasisLabel::sigma_x;
    std::vector<double> entropy_maxima;

    bool operator==(const RegimeReport&) const = default;
};

/// Raised when a sign change of the pointer margin hides between grid points.
class TrajectoryTooCoarse : public NumericError {
public:
    explicit TrajectoryTooCoarse(double t_lo, double t_hi);

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

/// Minimum fraction of the grid span for a sigma_z (or sigma_x) run to count.
inline constexpr double kPlateauFraction = 0.01;
/// Crossing times are bisected to this width.
inline constexpr double kCrossingTolerance = 1e-6;
/// Entropy must drop by this much (bits) after a candidate for it to be a maximum.
inline constexpr double kEntropyProminence = 1e-9;

RegimeReport scan_regimes(const Trajectory& trajectory);

/// Order-of-magnitude estimate -ln|2p - 1| / (16 pi); empty for p = 1/2.
std::optional<double> pointer_temperature_estimate(double p);

struct TemperatureBracket {
    double lo = 1e-4;
    double hi = 1.0;
};

inline constexpr double kCrossoverTolerance = 1e-5;
inline constexpr double kStationaryIncrement = 1e-6;

/// Stationary |a| - (b(T) + c(T)) at temperature tau.
double stationary_margin(const QubitGeometry& geom, double p, double tau, double t_stationary);

/// Temperature at which |a| = b(inf) + c(inf), by bisection in tau to 1e-5.
/// Throws ValidationError when the bracket has no sign change or the exponents
/// have not settled by t_stationary.
double crossover_temperature(const QubitGeometry& geom, double p, double t_stationary,
                             TemperatureBracket bracket = {});

struct SweepEntry {
    double tau = 0.0;
    std::optional<RegimeReport> report;
    std::string error;
};

/// One independent trajectory per tau, results ordered by ascending tau.
std::vector<SweepEntry> temperature_sweep(const QubitGeometry& geom, double p, std::span<const double> taus,
                                          std::span<const double> t_grid);

} // namespace dephase
