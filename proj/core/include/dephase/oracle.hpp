#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "dephase/correlations.hpp"

namespace dephase {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Rank-1 projective measurement on qubit B parametrised by a Bloch-sphere point:
///   |psi1> = cos(theta/2)|-1/2> + e^{i phi} sin(theta/2)|1/2>
///   |psi2> = cos(theta/2)|1/2>  - e^{-i phi} sin(theta/2)|-1/2>
class MeasurementBasis {
public:
    MeasurementBasis(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    /// Amplitudes of |psi_k> in the local order (|1/2>, |-1/2>); k is 0 or 1.
    Eigen::Vector2cd vector(int k) const;

private:
    double theta_;
    double phi_;
};

/// Full 4x4 density matrix of qubits A (first factor) and B, basis order
/// |1/2,1/2>, |1/2,-1/2>, |-1/2,1/2>, |-1/2,-1/2>.
class DenseTwoQubitState {
public:
    /// Validates hermiticity (1e-14), unit trace (1e-12) and eigenvalues >= -1e-10.
    explicit DenseTwoQubitState(const Matrix4c& rho);

    const Matrix4c& matrix() const noexcept { return rho_; }

    Matrix2c reduced_a() const;
    Matrix2c reduced_b() const;

private:
    Matrix4c rho_;
};

DenseTwoQubitState densify(const XState& state);

struct MeasurementOutcome {
    double probability = 0.0;
    Matrix2c conditional_state;
    bool degenerate = false;  ///< probability below 1e-14; state set to I/2
};

/// p_k = Tr(rho Pi_k), rho_k = Tr_B(Pi_k rho Pi_k) / p_k for k = 1, 2.
std::vector<MeasurementOutcome> conditional_decomposition(const DenseTwoQubitState& rho,
                                                          const MeasurementBasis& basis);

/// Von Neumann entropy of a 2x2 Hermitian matrix from its closed-form eigenvalues.
double entropy_2x2(const Matrix2c& m);

/// S(rho_A) - sum_k p_k S(rho_k).
double classical_info_at(const DenseTwoQubitState& rho, const MeasurementBasis& basis);

/// g = sqrt(a^2 cos^2 theta + sin^2 theta (b^2 + c^2 + 2bc cos 2phi)).
double g_closed_form(const XState& state, double theta, double phi);

/// G = 1 - K(g).
double big_g_closed_form(const XState& state, double theta, double phi);

struct OracleGrid {
    int n_theta = 181;
    int n_phi = 361;
};

inline constexpr int kMinThetaPoints = 61;
inline constexpr int kMinPhiPoints = 121;

struct MaximizationResult {
    double value = 0.0;
    MeasurementBasis argmax{0.0, 0.0};
};

/// Brute-force maximum of classical_info_at: coarse scan of theta in [0, pi]
/// and phi in [0, 2 pi), then alternating golden-section refinement around the
/// best cell until the value moves by less than refine_tol bits. Ties go to the
/// smaller theta, then the smaller phi.
MaximizationResult maximize_classical(const DenseTwoQubitState& rho, OracleGrid grid = {},
                                      double refine_tol = 1e-9);

MaximizationResult maximize_classical(const XState& state, OracleGrid grid = {},
                                      double refine_tol = 1e-9);

} // namespace dephase
