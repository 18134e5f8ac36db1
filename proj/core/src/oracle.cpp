#include "dephase/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateProbability = 1e-14;

// <psi|_B rho |psi>_B as an unnormalised operator on A.
Matrix2c project_b(const Matrix4c& rho, const Eigen::Vector2cd& psi)
{
    Matrix2c out = Matrix2c::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            cd sum = 0.0;
            for (int j = 0; j < 2; ++j) {
                for (int l = 0; l < 2; ++l) {
                    sum += std::conj(psi(j)) * rho(2 * i + j, 2 * k + l) * psi(l);
                }
            }
            out(i, k) = sum;
        }
    }
    return out;
}

// sum_k p_k S(rho_k) for the measurement {|psi1>, |psi2>} on B.
double conditional_entropy(const Matrix4c& rho, const Eigen::Vector2cd& psi1, const Eigen::Vector2cd& psi2)
{
    double total = 0.0;
    for (const auto* psi : {&psi1, &psi2}) {
        const Matrix2c unnormalised = project_b(rho, *psi);
        const double probability = unnormalised.trace().real();
        if (probability >= kDegenerateProbability) {
            total += probability * entropy_2x2(unnormalised / probability);
        }
    }
    return total;
}

Eigen::Vector2cd basis_vector(double cos_half, double sin_half, std::complex<double> phase, int k)
{
    Eigen::Vector2cd v;
    if (k == 0) {
        v << phase * sin_half, cos_half;
    } else {
        v << cos_half, -std::conj(phase) * sin_half;
    }
    return v;
}

struct Candidate {
    double value;
    double theta;
    double phi;
};

// True when `lhs` should replace `rhs` as the incumbent maximum.
bool better(const Candidate& lhs, const Candidate& rhs)
{
    if (lhs.value != rhs.value) {
        return lhs.value > rhs.value;
    }
    if (lhs.theta != rhs.theta) {
        return lhs.theta < rhs.theta;
    }
    return lhs.phi < rhs.phi;
}

double wrap_phi(double phi)
{
    phi = std::fmod(phi, 2.0 * kPi);
    return phi < 0.0 ? phi + 2.0 * kPi : phi;
}

// Golden-section search for the maximum of f on [lo, hi]; returns the best of
// the bracket interior and both ends.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double x_tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > x_tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    std::pair<double, double> best{x1, f1};
    if (f2 > best.second) {
        best = {x2, f2};
    }
    for (double edge : {lo, hi}) {
        const double fe = f(edge);
        if (fe > best.second) {
            best = {edge, fe};
        }
    }
    return best;
}

} // namespace

MeasurementBasis::MeasurementBasis(double theta, double phi) : theta_(theta), phi_(phi)
{
    if (!std::isfinite(theta) || !std::isfinite(phi) || theta < 0.0 || theta > kPi) {
        throw ValidationError(fmt::format("basis angles out of range: theta = {}, phi = {}", theta, phi));
    }
}

Eigen::Vector2cd MeasurementBasis::vector(int k) const
{
    if (k != 0 && k != 1) {
        throw ValidationError(fmt::format("measurement outcome index must be 0 or 1, got {}", k));
    }
    return basis_vector(std::cos(0.5 * theta_), std::sin(0.5 * theta_), std::polar(1.0, phi_), k);
}

DenseTwoQubitState::DenseTwoQubitState(const Matrix4c& rho) : rho_(rho)
{
    if (!rho.allFinite()) {
        throw ValidationError("density matrix has non-finite entries");
    }
    const double asymmetry = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-14) {
        throw ValidationError(fmt::format("density matrix is not Hermitian (deviation {:.3e})", asymmetry));
    }
    const cd trace = rho.trace();
    if (std::abs(trace - 1.0) > 1e-12) {
        throw ValidationError(fmt::format("density matrix trace is {} (expected 1)", trace.real()));
    }
    const Eigen::SelfAdjointEigenSolver<Matrix4c> solver(rho, Eigen::EigenvaluesOnly);
    const double smallest = solver.eigenvalues().minCoeff();
    if (smallest < -1e-10) {
        throw ValidationError(fmt::format("density matrix has negative eigenvalue {:.3e}", smallest));
    }
}

Matrix2c DenseTwoQubitState::reduced_a() const
{
    Matrix2c out;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            out(i, k) = rho_(2 * i, 2 * k) + rho_(2 * i + 1, 2 * k + 1);
        }
    }
    return out;
}

Matrix2c DenseTwoQubitState::reduced_b() const
{
    Matrix2c out;
    for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
            out(j, l) = rho_(j, l) + rho_(2 + j, 2 + l);
        }
    }
    return out;
}

DenseTwoQubitState densify(const XState& state)
{
    const double p = state.p();
    Matrix4c rho = Matrix4c::Zero();
    rho(0, 0) = rho(3, 3) = 0.5 * p;
    rho(1, 1) = rho(2, 2) = 0.5 * (1.0 - p);
    rho(0, 3) = rho(3, 0) = 0.5 * state.b();
    rho(1, 2) = rho(2, 1) = 0.5 * state.c();
    return DenseTwoQubitState(rho);
}

std::vector<MeasurementOutcome> conditional_decomposition(const DenseTwoQubitState& rho,
                                                          const MeasurementBasis& basis)
{
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(2);
    for (int k = 0; k < 2; ++k) {
        const Matrix2c unnormalised = project_b(rho.matrix(), basis.vector(k));
        MeasurementOutcome outcome;
        outcome.probability = std::max(unnormalised.trace().real(), 0.0);
        if (outcome.probability < kDegenerateProbability) {
            outcome.degenerate = true;
            outcome.conditional_state = 0.5 * Matrix2c::Identity();
        } else {
            outcome.conditional_state = unnormalised / outcome.probability;
        }
        outcomes.push_back(outcome);
    }
    return outcomes;
}

double entropy_2x2(const Matrix2c& m)
{
    const double t = m.trace().real();
    const double diff = (m(0, 0) - m(1, 1)).real();
    const double radius = std::sqrt(diff * diff + 4.0 * std::norm(m(0, 1)));
    const std::array<double, 2> lambda{0.5 * (t + radius), std::max(0.5 * (t - radius), 0.0)};
    return shannon_bits(lambda);
}

double classical_info_at(const DenseTwoQubitState& rho, const MeasurementBasis& basis)
{
    return entropy_2x2(rho.reduced_a()) - conditional_entropy(rho.matrix(), basis.vector(0), basis.vector(1));
}

double g_closed_form(const XState& state, double theta, double phi)
{
    const double a = state.a();
    const double b = state.b();
    const double c = state.c();
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    const double radicand =
        a * a * cos_t * cos_t + sin_t * sin_t * (b * b + c * c + 2.0 * b * c * std::cos(2.0 * phi));
    return std::sqrt(std::max(radicand, 0.0));
}

double big_g_closed_form(const XState& state, double theta, double phi)
{
    return 1.0 - k_function(std::min(g_closed_form(state, theta, phi), 1.0));
}

MaximizationResult maximize_classical(const DenseTwoQubitState& rho, OracleGrid grid, double refine_tol)
{
    if (grid.n_theta < kMinThetaPoints || grid.n_phi < kMinPhiPoints) {
        throw ValidationError(fmt::format("oracle grid must be at least {}x{}, got {}x{}", kMinThetaPoints,
                                          kMinPhiPoints, grid.n_theta, grid.n_phi));
    }
    if (!(refine_tol > 0.0)) {
        throw ValidationError("refine_tol must be positive");
    }

    const double marginal = entropy_2x2(rho.reduced_a());
    auto info = [&rho, marginal](double theta, double phi) {
        const MeasurementBasis basis(std::clamp(theta, 0.0, kPi), wrap_phi(phi));
        return marginal - conditional_entropy(rho.matrix(), basis.vector(0), basis.vector(1));
    };

    const double d_theta = kPi / (grid.n_theta - 1);
    const double d_phi = 2.0 * kPi / grid.n_phi;
    std::vector<cd> phases(static_cast<std::size_t>(grid.n_phi));
    for (int j = 0; j < grid.n_phi; ++j) {
        phases[static_cast<std::size_t>(j)] = std::polar(1.0, j * d_phi);
    }
    Candidate best{-1.0, 0.0, 0.0};
    for (int i = 0; i < grid.n_theta; ++i) {
        const double theta = i * d_theta;
        const double cos_half = std::cos(0.5 * theta);
        const double sin_half = std::sin(0.5 * theta);
        for (int j = 0; j < grid.n_phi; ++j) {
            const cd phase = phases[static_cast<std::size_t>(j)];
            const double value =
                marginal - conditional_entropy(rho.matrix(), basis_vector(cos_half, sin_half, phase, 0),
                                               basis_vector(cos_half, sin_half, phase, 1));
            const Candidate here{value, theta, j * d_phi};
            if (better(here, best)) {
                best = here;
            }
        }
    }

    constexpr int kMaxSweeps = 50;
    const double angle_tol = 1e-10;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double before = best.value;

        const double theta_lo = std::max(0.0, best.theta - d_theta);
        const double theta_hi = std::min(kPi, best.theta + d_theta);
        const auto [theta_new, theta_val] =
            golden_max([&](double th) { return info(th, best.phi); }, theta_lo, theta_hi, angle_tol);
        if (theta_val > best.value) {
            best = {theta_val, theta_new, best.phi};
        }

        const auto [phi_new, phi_val] = golden_max([&](double ph) { return info(best.theta, ph); },
                                                   best.phi - d_phi, best.phi + d_phi, angle_tol);
        if (phi_val > best.value) {
            best = {phi_val, best.theta, wrap_phi(phi_new)};
        }

        if (best.value - before < refine_tol) {
            break;
        }
    }
    return {best.value, MeasurementBasis(best.theta, best.phi)};
}

MaximizationResult maximize_classical(const XState& state, OracleGrid grid, double refine_tol)
{
    return maximize_classical(densify(state), grid, refine_tol);
}

} // namespace dephase
