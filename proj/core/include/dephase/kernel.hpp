#pragma once

#include <array>
#include <span>
#include <vector>

#include "dephase/geometry.hpp"

namespace dephase {

/// P(x) = x^3/6 + x^2/2 + 5x/8 + 5/16.
double kernel_polynomial(double x) noexcept;

/// F(x) = P(x) e^{-2x}; positive and decreasing on x >= 0.
double damped_kernel(double x) noexcept;

/// Inter-donor decoherence rate gamma(t; l) in reduced units (lengths in a_B,
/// time in a_B/s). The 1/l prefactor is removable: below 1e-8 a_B the analytic
/// limit 4 pi tau (t^3/3 + t^2/2 + t/4) e^{-2t} is returned.
double gamma_point(double t, double l, double tau);

/// Distances below this are treated as the self term l = 0.
inline constexpr double kSelfDistance = 1e-8;

/// gamma_{b b'}(t) = 4 sum_{m,s} m s gamma(t; |(r_b + m d_b) - (r_b' + s d_b')|).
double gamma_interqubit(double t, int b, int b_prime, const QubitGeometry& geom, double tau);

/// Spin label m = ±1/2 of one qubit.
enum class Spin : int { down = -1, up = 1 };

inline double spin_value(Spin s) noexcept { return 0.5 * static_cast<int>(s); }

using SpinPair = std::array<Spin, 2>;

/// Gamma_{{m},{s}}(t) = sum_{b,b'} (m_b - s_b)(m_b' - s_b') gamma_{b b'}(t).
double big_gamma(double t, const SpinPair& m, const SpinPair& s, const QubitGeometry& geom, double tau);

/// Precomputed site distances for repeated rate evaluation on one (geometry, tau).
class DephasingKernel {
public:
    DephasingKernel(const QubitGeometry& geom, SubstrateContext ctx);

    double interqubit_rate(double t, int b, int b_prime) const;
    double rate(double t, const SpinPair& m, const SpinPair& s) const;

    /// Rate for the {1/2,1/2} <-> {-1/2,-1/2} coherence (the b element).
    double outer_rate(double t) const;
    /// Rate for the {1/2,-1/2} <-> {-1/2,1/2} coherence (the c element).
    double inner_rate(double t) const;

    /// Kink locations t' = l of the rate, used as quadrature breakpoints.
    std::span<const double> breakpoints() const noexcept { return kinks_; }

    double tau() const noexcept { return tau_; }

    /// Integral of the outer and inner rates over [t0, t1].
    std::array<double, 2> integrate(double t0, double t1) const;

private:
    // distances_[b][b'][m][s], indices 0/1 for spin -1/+1
    std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> distances_{};
    std::vector<double> kinks_;
    double tau_;
};

/// Accumulated exponents E_b(t), E_c(t) with f = exp(-E) on a time grid.
struct DecoherenceExponents {
    std::vector<double> times;
    std::vector<double> outer;
    std::vector<double> inner;
};

/// Integrates the outer/inner rates panel by panel between consecutive grid
/// times. The grid must start at 0 and be strictly ascending.
DecoherenceExponents exponents_on_grid(const QubitGeometry& geom, SubstrateContext ctx,
                                       std::span<const double> t_grid);

struct CoherenceSeries {
    std::vector<double> b;
    std::vector<double> c;
};

/// b(t) = p e^{-E_b(t)}, c(t) = (1 - p) e^{-E_c(t)}.
CoherenceSeries coherences(double p, const DecoherenceExponents& exponents);

/// n points evenly spaced on [0, t_max], endpoints included.
std::vector<double> uniform_grid(double t_max, std::size_t n_points);

} // namespace dephase
