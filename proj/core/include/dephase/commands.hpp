#pragma once

#include <functional>
#include <iosfwd>

#include "dephase/config.hpp"

namespace dephase {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInvalidInput = 2,
    kExitNumericFailure = 3,
};

// Each command writes its artifact to config.out_path when set, otherwise to
// `out`; diagnostics go to `err`. Exceptions propagate; run_guarded maps them.

/// Time series t,b,c,C,D,I,S,basis for a single tau.
int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Regime report for a single tau.
int cmd_regimes(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Regime report per tau in tau_list plus the crossover context.
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Order-of-magnitude estimate and bisection crossover temperature, labelled separately.
int cmd_pointer_temp(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs the self-check suites; exit 1 when any fails.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Calls `command`, translating ValidationError to 2 and NumericError (or any
/// other failure) to 3 after printing the message to `err`.
int run_guarded(const std::function<int()>& command, std::ostream& err);

} // namespace dephase
