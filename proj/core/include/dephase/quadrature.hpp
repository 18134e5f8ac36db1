#pragma once

#include <functional>
#include <span>
#include <string>

#include "dephase/errors.hpp"

namespace dephase {

/// Absolute error budget for one integration panel.
inline constexpr double kPanelTolerance = 1e-10;

/// Thrown when a panel's error estimate stays above the absolute budget.
class QuadratureError : public NumericError {
public:
    QuadratureError(double lower, double upper, double error_estimate);

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double error_estimate() const noexcept { return error_; }

private:
    double lower_;
    double upper_;
    double error_;
};

/// Adaptive Gauss–Kronrod (7/15) integral of f over [a, b]. Every breakpoint
/// strictly inside (a, b) becomes a panel edge, so kinks of f at those points
/// never fall inside a Kronrod panel.
double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints,
                           double abs_tol = kPanelTolerance);

} // namespace dephase
