#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dephase/errors.hpp"
#include "dephase/kernel.hpp"
#include "dephase/reference_integrals.hpp"
#include "support/oracles.hpp"

using namespace dephase;

TEST(KernelPolynomial, ValuesAtSmallArguments)
{
    EXPECT_DOUBLE_EQ(kernel_polynomial(0.0), 5.0 / 16.0);
    EXPECT_DOUBLE_EQ(kernel_polynomial(1.0), 1.0 / 6.0 + 0.5 + 0.625 + 0.3125);
    EXPECT_DOUBLE_EQ(damped_kernel(0.0), 0.3125);
    EXPECT_NEAR(damped_kernel(40.0), 0.0, 1e-30);
}

TEST(GammaPoint, FrozenValues)
{
    // mpmath, 30 digits
    EXPECT_NEAR(gamma_point(1.0, 0.0, 0.05), 0.092119805177321203315, 1e-15);
    EXPECT_NEAR(gamma_point(1.0, 10.0, 0.05), 7.7814856471881529168e-8, 1e-20);
    EXPECT_NEAR(gamma_point(2.5, 7.0, 0.035), 0.00011021894060042831914, 1e-17);
    EXPECT_NEAR(gamma_point(7.0, 7.0, 0.035), 0.009817477030208168569, 1e-16);
}

TEST(GammaPoint, ZeroTimeAndZeroTemperatureVanish)
{
    EXPECT_EQ(gamma_point(0.0, 5.0, 0.05), 0.0);
    EXPECT_EQ(gamma_point(0.0, 0.0, 0.05), 0.0);
    EXPECT_EQ(gamma_point(3.0, 5.0, 0.0), 0.0);
}

TEST(GammaPoint, SelfTermIsLimitOfFiniteDistance)
{
    for (double t : {0.1, 1.0, 4.0}) {
        EXPECT_NEAR(gamma_point(t, 0.0, 1.0), gamma_point(t, 1e-5, 1.0), 1e-8) << t;
    }
}

TEST(GammaPoint, MatchesLonghandDefinition)
{
    for (double l : {0.5, 3.0, 10.0, 28.75}) {
        for (double t : {0.2, 2.0, l, l + 0.3, 60.0}) {
            EXPECT_NEAR(gamma_point(t, l, 0.03), oracle_support::gamma_longhand(t, l, 0.03), 1e-16) << t << ' ' << l;
        }
    }
}

TEST(GammaPoint, RejectsNegativeArguments)
{
    EXPECT_THROW(gamma_point(-1.0, 5.0, 0.05), ValidationError);
    EXPECT_THROW(gamma_point(1.0, -5.0, 0.05), ValidationError);
    EXPECT_THROW(gamma_point(1.0, 5.0, -0.05), ValidationError);
}

TEST(ReferenceIntegrals, DampedKernelAntiderivative)
{
    EXPECT_NEAR(reference::damped_kernel_integral(5.0), 0.49892269750001103654, 1e-15);
    EXPECT_NEAR(reference::damped_kernel_integral(10.0), 0.49999973574292932319, 1e-15);
    EXPECT_NEAR(reference::damped_kernel_integral(20.0), 0.49999999999999646997, 1e-15);
    EXPECT_NEAR(reference::damped_kernel_integral(0.0), 0.0, 1e-16);
}

TEST(ReferenceIntegrals, TotalIntegralFrozen)
{
    EXPECT_NEAR(reference::gamma_total_integral(5.0, 1.0), 1.2539295049401898987, 1e-14);
    EXPECT_NEAR(reference::gamma_total_integral(10.0, 1.0), 0.62831819864272988872, 1e-14);
    EXPECT_NEAR(reference::gamma_total_integral(20.0, 1.0), 0.31415926535897710586, 1e-14);
}

TEST(ReferenceIntegrals, AgreeWithSimpsonOracle)
{
    for (double l : {0.0, 5.0, 10.0, 20.0}) {
        for (double T : {3.0, l + 40.0}) {
            std::vector<double> edges{0.0};
            if (l > 0.0 && l < T) {
                edges.push_back(l);
            }
            edges.push_back(T);
            auto f = [l](double t) { return l > 0.0 ? oracle_support::gamma_longhand(t, l, 0.05) : gamma_point(t, 0.0, 0.05); };
            const double simpson = oracle_support::simpson_pieces(f, edges, 20000);
            EXPECT_NEAR(reference::gamma_time_integral(T, l, 0.05), simpson, 1e-11) << l << ' ' << T;
        }
    }
}

TEST(DephasingKernel, DiagonalElementsDoNotDecay)
{
    const DephasingKernel k(QubitGeometry::standard(), SubstrateContext(0.05));
    for (Spin a : {Spin::down, Spin::up}) {
        for (Spin b : {Spin::down, Spin::up}) {
            EXPECT_EQ(k.rate(3.0, {a, b}, {a, b}), 0.0);
        }
    }
}

TEST(DephasingKernel, RateMatchesFreeFunction)
{
    const auto g = QubitGeometry::standard();
    const DephasingKernel k(g, SubstrateContext(0.035));
    const std::array<Spin, 2> spins{Spin::down, Spin::up};
    for (double t : {0.5, 10.0, 21.0}) {
        for (Spin m0 : spins) for (Spin m1 : spins) for (Spin s0 : spins) for (Spin s1 : spins) {
            EXPECT_NEAR(k.rate(t, {m0, m1}, {s0, s1}), big_gamma(t, {m0, m1}, {s0, s1}, g, 0.035), 1e-15);
        }
        for (int b : {1, 2}) for (int bp : {1, 2}) {
            EXPECT_NEAR(k.interqubit_rate(t, b, bp), gamma_interqubit(t, b, bp, g, 0.035), 1e-15);
        }
    }
}

TEST(DephasingKernel, InterqubitRateIsSymmetricInLabels)
{
    const DephasingKernel k(QubitGeometry::standard(), SubstrateContext(0.05));
    for (double t : {1.0, 15.0, 30.0}) {
        EXPECT_NEAR(k.interqubit_rate(t, 1, 2), k.interqubit_rate(t, 2, 1), 1e-16);
    }
    EXPECT_THROW((void)k.interqubit_rate(1.0, 0, 1), ValidationError);
}

TEST(DephasingKernel, BreakpointsAreNonzeroDistances)
{
    const DephasingKernel k(QubitGeometry::standard(), SubstrateContext(0.01));
    const auto set = distance_set(QubitGeometry::standard());
    ASSERT_EQ(k.breakpoints().size() + 1, set.values.size());
    for (double x : k.breakpoints()) {
        EXPECT_GT(x, 0.0);
    }
}

TEST(Exponents, LongTimeLimitFrozen)
{
    // Values at tau = 1 for the standard geometry, T -> infinity (mpmath).
    const auto e = reference::exponents_at(QubitGeometry::standard(), 1.0, 400.0);
    EXPECT_NEAR(e[0], 12.953838841069875652, 1e-11);
    EXPECT_NEAR(e[1], 13.435542105686217623, 1e-11);
    const std::array<double, 2> grid{0.0, 400.0};
    const auto ex = exponents_on_grid(QubitGeometry::standard(), SubstrateContext(1.0), grid);
    EXPECT_NEAR(ex.outer.back(), 12.953838841069875652, 1e-8);
    EXPECT_NEAR(ex.inner.back(), 13.435542105686217623, 1e-8);
}

TEST(Exponents, GridMatchesClosedFormEverywhere)
{
    const auto g = QubitGeometry::standard();
    const auto grid = uniform_grid(80.0, 321);
    const auto ex = exponents_on_grid(g, SubstrateContext(0.035), grid);
    for (std::size_t i = 0; i < grid.size(); i += 7) {
        const auto ref = reference::exponents_at(g, 0.035, grid[i]);
        EXPECT_NEAR(ex.outer[i], ref[0], 1e-8) << grid[i];
        EXPECT_NEAR(ex.inner[i], ref[1], 1e-8) << grid[i];
    }
}

TEST(ExponentsProperty, LinearInTemperature)
{
    const auto g = QubitGeometry::standard();
    const auto grid = uniform_grid(60.0, 121);
    const auto base = exponents_on_grid(g, SubstrateContext(0.01), grid);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> scale(0.5, 8.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double k = scale(rng);
        const auto scaled = exponents_on_grid(g, SubstrateContext(0.01 * k), grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            EXPECT_NEAR(scaled.outer[i], k * base.outer[i], 1e-8 * std::max(1.0, k * base.outer[i]));
            EXPECT_NEAR(scaled.inner[i], k * base.inner[i], 1e-8 * std::max(1.0, k * base.inner[i]));
        }
    }
}

TEST(ExponentsProperty, InvariantUnderQubitRelabelling)
{
    const auto g = QubitGeometry::standard();
    const auto grid = uniform_grid(50.0, 101);
    const auto a = exponents_on_grid(g, SubstrateContext(0.04), grid);
    const auto b = exponents_on_grid(g.with_qubits_swapped(), SubstrateContext(0.04), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(a.outer[i], b.outer[i], 1e-12);
        EXPECT_NEAR(a.inner[i], b.inner[i], 1e-12);
    }
}

TEST(Exponents, ZeroTemperatureKeepsCoherence)
{
    const auto grid = uniform_grid(100.0, 11);
    const auto ex = exponents_on_grid(QubitGeometry::standard(), SubstrateContext(0.0), grid);
    const auto co = coherences(0.8, ex);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(co.b[i], 0.8);
        EXPECT_NEAR(co.c[i], 0.2, 1e-16);
    }
}

TEST(Exponents, RejectsBadGrids)
{
    const auto g = QubitGeometry::standard();
    const std::array<double, 2> late{1.0, 2.0};
    const std::array<double, 3> unsorted{0.0, 2.0, 1.0};
    EXPECT_THROW(exponents_on_grid(g, SubstrateContext(0.01), late), ValidationError);
    EXPECT_THROW(exponents_on_grid(g, SubstrateContext(0.01), unsorted), ValidationError);
    EXPECT_THROW(uniform_grid(0.0, 10), ValidationError);
    EXPECT_THROW(uniform_grid(10.0, 1), ValidationError);
    DecoherenceExponents empty;
    EXPECT_THROW(coherences(1.5, empty), ValidationError);
}
