#pragma once

#include <string>

#include "orthoharm/tools/config.hpp"
#include "orthoharm/tools/report.hpp"

namespace orthoharm::tools {

// Geometry, metric, star-product and Laplace identities at seeded random points.
Report run_identities(const SuiteParams& p);
// p, p_tilde and the xi-preimage property.
Report run_kernel(const SuiteParams& p);
// Truncated series: doubling, xi-consistency, modularity defects.
Report run_series(const SuiteParams& p);
// Tube boundary integrals around C_mu and their eps -> 0 limit.
Report run_tube_limit(const SuiteParams& p);
// Circle integrals around T_nu, restriction and residue vanishing.
Report run_restrict(const SuiteParams& p);
// Windowed Stokes identity behind the current equation.
Report run_current_eq(const SuiteParams& p);
// Pairing of the two cycle integrals (long running; skipped unless enabled).
Report run_duality(const SuiteParams& p);
// The constant C_{n,kappa}, Gamma and 2F1.
Report run_constants(const SuiteParams& p);

Report run_suite(const std::string& name, const SuiteParams& p);

}  // namespace orthoharm::tools
