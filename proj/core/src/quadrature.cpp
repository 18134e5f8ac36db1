#include "dephase/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

namespace dephase {

namespace {

constexpr int kMaxDepth = 30;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

struct Estimate {
    double kronrod;
    double error;
};

// G7 nodes are the even-indexed K15 nodes, so one set of evaluations gives both rules.
Estimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b)
{
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(centre);
    double kronrod = wk[0] * f0;
    double gauss = wg[0] * f0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double pair = f(centre - half * x[i]) + f(centre + half * x[i]);
        kronrod += wk[i] * pair;
        if (i % 2 == 0) {
            gauss += wg[i / 2] * pair;
        }
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

double adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol, int depth,
                double panel_lo, double panel_hi)
{
    const Estimate est = gauss_kronrod_15(f, a, b);
    if (!std::isfinite(est.kronrod)) {
        throw QuadratureError(panel_lo, panel_hi, est.error);
    }
    if (est.error <= abs_tol) {
        return est.kronrod;
    }
    if (depth >= kMaxDepth) {
        throw QuadratureError(panel_lo, panel_hi, est.error);
    }
    const double mid = 0.5 * (a + b);
    return adaptive(f, a, mid, 0.5 * abs_tol, depth + 1, panel_lo, panel_hi) +
           adaptive(f, mid, b, 0.5 * abs_tol, depth + 1, panel_lo, panel_hi);
}

} // namespace

QuadratureError::QuadratureError(double lower, double upper, double error_estimate)
    : NumericError(fmt::format("quadrature did not converge on panel [{:.12g}, {:.12g}]: "
                               "error estimate {:.3e}",
                               lower, upper, error_estimate)),
      lower_(lower), upper_(upper), error_(error_estimate)
{
}

double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints, double abs_tol)
{
    if (!(b > a)) {
        if (a == b) {
            return 0.0;
        }
        throw ValidationError(fmt::format("integration bounds must satisfy a <= b, got [{}, {}]", a, b));
    }
    if (!(abs_tol > 0.0)) {
        throw ValidationError("quadrature tolerance must be positive");
    }
    std::vector<double> edges{a};
    for (double x : breakpoints) {
        if (x > a && x < b) {
            edges.push_back(x);
        }
    }
    std::sort(edges.begin() + 1, edges.end());
    edges.push_back(b);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] > edges[i]) {
            total += adaptive(f, edges[i], edges[i + 1], abs_tol, 0, edges[i], edges[i + 1]);
        }
    }
    return total;
}

} // namespace dephase
