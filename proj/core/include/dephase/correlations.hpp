#pragma once

#include <array>
#include <span>

namespace dephase {

/// Inputs this close outside their admissible interval are clamped rather than
/// rejected, so quadrature round-off never aborts an entropy evaluation.
inline constexpr double kBoundarySlack = 1e-12;

/// Two-qubit X state of the dephasing Bell mixture, in the basis
/// |1/2,1/2>, |1/2,-1/2>, |-1/2,1/2>, |-1/2,-1/2>:
///
///         [ p   0    0    b ]
///   1/2 * [ 0  1-p   c    0 ]
///         [ 0   c   1-p   0 ]
///         [ b   0    0    p ]
class XState {
public:
    /// Requires 0 <= p <= 1, 0 <= b <= p, 0 <= c <= 1 - p (up to kBoundarySlack).
    XState(double p, double b, double c);

    double p() const noexcept { return p_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double a() const noexcept { return 2.0 * p_ - 1.0; }

    /// (p+b)/2, (p-b)/2, (1-p+c)/2, (1-p-c)/2.
    std::array<double, 4> eigenvalues() const noexcept;

private:
    double p_;
    double b_;
    double c_;
};

/// K(x) = H2((1+x)/2) in bits, x in [0, 1].
double k_function(double x);

/// -sum x lg x over the entries, with 0 lg 0 = 0.
double shannon_bits(std::span<const double> weights);

/// w = max(|a|, b + c).
double optimal_weight(const XState& state) noexcept;

/// C = 1 - K(max(|a|, b + c)).
double classical_correlation(const XState& state);

/// D = 1 + p lg p + (1-p) lg(1-p) + K(w) - p K(b/p) - (1-p) K(c/(1-p)).
double quantum_discord(const XState& state);

/// Von Neumann entropy of the joint state, in bits.
double joint_entropy(const XState& state);

/// I = 2 - S(rho_AB); both marginals of this family are I/2.
double mutual_information(const XState& state);

struct CorrelationPoint {
    double t = 0.0;
    double b = 0.0;
    double c = 0.0;
    double classical = 0.0;
    double discord = 0.0;
    double mutual = 0.0;
    double entropy = 0.0;
};

CorrelationPoint evaluate_correlations(double t, const XState& state);

} // namespace dephase
