#include "dephase/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

void check_qubit_index(int qubit)
{
    if (qubit != 1 && qubit != 2) {
        throw ValidationError(fmt::format("qubit index must be 1 or 2, got {}", qubit));
    }
}

bool all_finite(const Vec3& v) { return v.allFinite(); }

DonorDistanceSet dedup(std::vector<double> raw)
{
    raw.push_back(0.0);
    std::sort(raw.begin(), raw.end());
    DonorDistanceSet out;
    for (double l : raw) {
        if (out.values.empty() || l - out.values.back() > DonorDistanceSet::kMergeTolerance) {
            out.values.push_back(l);
        }
    }
    // Self distances and near-zero separations all collapse onto the exact 0.
    out.values.front() = 0.0;
    return out;
}

} // namespace

SubstrateContext::SubstrateContext(double tau) : tau_(tau)
{
    if (!std::isfinite(tau) || tau < 0.0) {
        throw ValidationError(fmt::format("tau must be finite and >= 0, got {}", tau));
    }
}

QubitGeometry::QubitGeometry(const Vec3& r1, const Vec3& d1, const Vec3& r2, const Vec3& d2)
    : r1_(r1), d1_(d1), r2_(r2), d2_(d2)
{
    if (!all_finite(r1) || !all_finite(d1) || !all_finite(r2) || !all_finite(d2)) {
        throw ValidationError("geometry vectors must be finite");
    }
    const double n1 = d1.norm();
    const double n2 = d2.norm();
    if (n1 <= 0.0 || n2 <= 0.0) {
        throw ValidationError("inter-donor vectors d1 and d2 must have nonzero length");
    }
    const double separation = (r1 - r2).norm();
    if (!(separation > std::max(n1, n2))) {
        throw ValidationError(fmt::format(
            "qubit separation |r1-r2| = {} must exceed the inter-donor distance max(|d1|,|d2|) = {}",
            separation, std::max(n1, n2)));
    }
}

QubitGeometry QubitGeometry::standard()
{
    const double angle = std::numbers::pi / 4.0;
    return QubitGeometry(Vec3(0.0, 0.0, 0.0), Vec3(10.0, 0.0, 0.0), Vec3(20.0, 0.0, 0.0),
                         Vec3(10.0 * std::cos(angle), 10.0 * std::sin(angle), 0.0));
}

const Vec3& QubitGeometry::centre(int qubit) const
{
    check_qubit_index(qubit);
    return qubit == 1 ? r1_ : r2_;
}

const Vec3& QubitGeometry::offset(int qubit) const
{
    check_qubit_index(qubit);
    return qubit == 1 ? d1_ : d2_;
}

QubitGeometry QubitGeometry::with_qubits_swapped() const { return QubitGeometry(r2_, d2_, r1_, d1_); }

Vec3 donor_site(const QubitGeometry& geom, int qubit, int spin)
{
    if (spin != 1 && spin != -1) {
        throw ValidationError(fmt::format("spin label must be +1 or -1, got {}", spin));
    }
    return geom.centre(qubit) + 0.5 * spin * geom.offset(qubit);
}

std::array<Vec3, 4> donor_positions(const QubitGeometry& geom)
{
    return {donor_site(geom, 1, -1), donor_site(geom, 1, +1), donor_site(geom, 2, -1),
            donor_site(geom, 2, +1)};
}

DonorDistanceSet distance_set(const QubitGeometry& geom)
{
    const auto sites = donor_positions(geom);
    std::vector<double> raw;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            raw.push_back((sites[i] - sites[j]).norm());
        }
    }
    return dedup(std::move(raw));
}

DonorDistanceSet distance_set(const QubitGeometry& geom, int b, int b_prime)
{
    std::vector<double> raw;
    for (int m : {-1, 1}) {
        for (int s : {-1, 1}) {
            raw.push_back((donor_site(geom, b, m) - donor_site(geom, b_prime, s)).norm());
        }
    }
    return dedup(std::move(raw));
}

} // namespace dephase
