#pragma once

#include <array>

#include "dephase/geometry.hpp"

namespace dephase::reference {

// Closed-form antiderivatives of the decoherence kernel. These never touch the
// quadrature code and serve as its independent check.

/// Integral of F(x) = P(x) e^{-2x} over [0, x]: 1/2 - (x^3/12 + 3x^2/8 + 11x/16 + 1/2) e^{-2x}.
double damped_kernel_integral(double x);

/// Integral of gamma(t; l) over t in [0, T].
double gamma_time_integral(double T, double l, double tau);

/// Integral of gamma(t; l) over [0, inf): (4 pi tau / l) * integral_0^l F.
double gamma_total_integral(double l, double tau);

/// Exponents E_b(T), E_c(T) assembled from the closed-form integrals.
std::array<double, 2> exponents_at(const QubitGeometry& geom, double tau, double T);

} // namespace dephase::reference
