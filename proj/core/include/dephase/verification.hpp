#pragma once

#include <random>
#include <string>
#include <vector>

#include "dephase/config.hpp"
#include "dephase/correlations.hpp"

namespace dephase {

/// Outcome of one self-check suite run by `dephase verify`.
struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      ///< largest deviation observed
    double tolerance = 0.0;
    std::size_t cases = 0;
    std::string offender;    ///< description of the worst case
};

/// Uniform p in [0,1], then b in [0,p] and c in [0,1-p].
XState random_xstate(std::mt19937_64& rng);

/// Dense oracle maximisation vs 1 - K(w), plus argmax location (1e-6 bits, 1e-3 rad).
SuiteResult verify_oracle_equivalence(const RunConfig& config);
/// Quadrature of gamma(t;l) and of the exponents vs closed-form antiderivatives (1e-8).
SuiteResult verify_quadrature(const RunConfig& config);
/// I = C + D on random states (1e-12).
SuiteResult verify_identity(const RunConfig& config);
/// Eigenvalues >= -1e-12, unit trace and 0 < f <= 1 on evolved states.
SuiteResult verify_positivity(const RunConfig& config);
/// Dense conditional-entropy route vs 1 - K(g(theta, phi)) (1e-10).
SuiteResult verify_dense_vs_closed_form(const RunConfig& config);

std::vector<SuiteResult> run_verification(const RunConfig& config);

} // namespace dephase
