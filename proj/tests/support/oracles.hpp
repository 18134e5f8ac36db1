#pragma once

// Test-only reference computations. Nothing here calls into the code it checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace dephase::oracle_support {

/// Composite Simpson rule with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n)
{
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

/// Simpson over consecutive breakpoints, n intervals per piece.
inline double simpson_pieces(const std::function<double(double)>& f, std::vector<double> edges, int n)
{
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        total += simpson(f, edges[i], edges[i + 1], n);
    }
    return total;
}

inline double binary_entropy(double q)
{
    auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
    return term(q) + term(1.0 - q);
}

/// Kernel written out longhand from its definition.
inline double gamma_longhand(double t, double l, double tau)
{
    auto F = [](double x) { return (x * x * x / 6.0 + x * x / 2.0 + 5.0 * x / 8.0 + 5.0 / 16.0) * std::exp(-2.0 * x); };
    double sum = 0.0;
    for (int sigma : {1, -1}) {
        sum += sigma * F(std::abs(l - sigma * t));
    }
    return 2.0 * M_PI / l * tau * sum;
}

/// All pairwise distances among `points`, sorted, merged within tol, with 0 prepended.
inline std::vector<double> brute_distances(const std::vector<Eigen::Vector3d>& points, double tol = 1e-9)
{
    std::vector<double> all{0.0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i != j) {
                all.push_back((points[i] - points[j]).norm());
            }
        }
    }
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    for (double d : all) {
        if (out.empty() || d - out.back() > tol) {
            out.push_back(d);
        }
    }
    return out;
}

/// Random rotation from a normalised random quaternion.
inline Eigen::Matrix3d random_rotation(std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
    q.normalize();
    return q.toRotationMatrix();
}

} // namespace dephase::oracle_support
