#include "dephase/reference_integrals.hpp"

#include <cmath>
#include <numbers>

#include "dephase/errors.hpp"
#include "dephase/kernel.hpp"

namespace dephase::reference {

namespace {

constexpr double kPi = std::numbers::pi;

// Integral of F(|l - t|) over t in [0, T].
double reflected_integral(double T, double l)
{
    if (T <= l) {
        return damped_kernel_integral(l) - damped_kernel_integral(l - T);
    }
    return damped_kernel_integral(l) + damped_kernel_integral(T - l);
}

} // namespace

double damped_kernel_integral(double x)
{
    if (!(x >= 0.0)) {
        throw ValidationError("damped_kernel_integral needs x >= 0");
    }
    const double q = ((x / 12.0 + 0.375) * x + 0.6875) * x + 0.5;
    return 0.5 - q * std::exp(-2.0 * x);
}

double gamma_time_integral(double T, double l, double tau)
{
    if (!(T >= 0.0) || !(l >= 0.0) || !(tau >= 0.0)) {
        throw ValidationError("gamma_time_integral needs T, l, tau >= 0");
    }
    if (l < kSelfDistance) {
        // d/dt F(t) = -(t^3/3 + t^2/2 + t/4) e^{-2t}
        return 4.0 * kPi * tau * (damped_kernel(0.0) - damped_kernel(T));
    }
    const double forward = damped_kernel_integral(l + T) - damped_kernel_integral(l);
    return 2.0 * kPi * tau / l * (reflected_integral(T, l) - forward);
}

double gamma_total_integral(double l, double tau)
{
    if (!(l >= 0.0) || !(tau >= 0.0)) {
        throw ValidationError("gamma_total_integral needs l, tau >= 0");
    }
    if (l < kSelfDistance) {
        return 4.0 * kPi * tau * damped_kernel(0.0);
    }
    return 4.0 * kPi * tau / l * damped_kernel_integral(l);
}

std::array<double, 2> exponents_at(const QubitGeometry& geom, double tau, double T)
{
    // Integrated gamma_{bb'} via the same signed four-term sum, one closed form per pair.
    auto pair_integral = [&](int b, int bp) {
        double total = 0.0;
        for (int m : {-1, 1}) {
            for (int s : {-1, 1}) {
                const double l = (donor_site(geom, b, m) - donor_site(geom, bp, s)).norm();
                total += m * s * gamma_time_integral(T, l, tau);
            }
        }
        return total;
    };
    const double g11 = pair_integral(1, 1);
    const double g22 = pair_integral(2, 2);
    const double g12 = pair_integral(1, 2);
    const double g21 = pair_integral(2, 1);
    return {g11 + g12 + g21 + g22, g11 - g12 - g21 + g22};
}

} // namespace dephase::reference
