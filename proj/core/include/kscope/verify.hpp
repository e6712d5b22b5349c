#ifndef KSCOPE_VERIFY_HPP
#define KSCOPE_VERIFY_HPP

#include "kscope/fock.hpp"

#include <string>
#include <vector>

namespace kscope {

/// One named invariant check: measured residual against its pinned threshold.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Run the whole invariant suite for one (n, alpha) configuration:
/// mod-n exponential identities, Fock-space algebra, state construction,
/// photon statistics and the deformed operator algebra. dim_override = 0
/// lets the Poisson-tail rule pick the truncation.
std::vector<CheckResult> run_suite(int n, cx alpha, double tol = 1e-12, int dim_override = 0);

/// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace kscope

#endif
