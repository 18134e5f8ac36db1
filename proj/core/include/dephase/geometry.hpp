#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

namespace dephase {

using Vec3 = Eigen::Vector3d;

/// Substrate temperature in reduced form, tau = T / T_s.
class SubstrateContext {
public:
    explicit SubstrateContext(double tau);

    double tau() const noexcept { return tau_; }

private:
    double tau_;
};

/// Centres r_b and inter-site vectors d_b (pointing from the m=-1/2 to the
/// m=+1/2 site) of two donor charge qubits. Lengths are in Bohr radii.
class QubitGeometry {
public:
    /// Throws ValidationError if |d_b| == 0 or the qubits are closer than
    /// their own inter-donor distance.
    QubitGeometry(const Vec3& r1, const Vec3& d1, const Vec3& r2, const Vec3& d2);

    /// r1 = 0, r2 = (20,0,0), d1 = (10,0,0), d2 = 10 (cos 45°, sin 45°, 0).
    static QubitGeometry standard();

    /// qubit is 1 or 2.
    const Vec3& centre(int qubit) const;
    const Vec3& offset(int qubit) const;

    QubitGeometry with_qubits_swapped() const;

private:
    Vec3 r1_, d1_, r2_, d2_;
};

/// Donor sites r_b + m d_b in the order (q1 -1/2, q1 +1/2, q2 -1/2, q2 +1/2).
std::array<Vec3, 4> donor_positions(const QubitGeometry& geom);

/// Position of the site of `qubit` carrying spin label m = spin/2 (spin = ±1).
Vec3 donor_site(const QubitGeometry& geom, int qubit, int spin);

/// Sorted distinct donor-pair distances, always starting with the self distance 0.
struct DonorDistanceSet {
    std::vector<double> values;

    static constexpr double kMergeTolerance = 1e-9;
};

/// All pairs among the four donor sites.
DonorDistanceSet distance_set(const QubitGeometry& geom);

/// Pairs with one site on qubit `b` and the other on qubit `b_prime`
/// (b == b_prime gives {0, |d_b|}).
DonorDistanceSet distance_set(const QubitGeometry& geom, int b, int b_prime);

} // namespace dephase
