#include "common.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

Report run_duality(const SuiteParams& p) {
    Report out;
    out.suite = "duality";
    out.seed = p.seed;
    if (!p.long_running) return out;
    // The pairing needs fundamental windows for the stabilizers of C_mu and
    // T_nu, which are not derived here; the check reports itself as failing.
    CheckRecord r = make_abs_record("duality/pairing", "duality", detail::text("n=2", "U+U"), 0.0, 0.0, 5e-2);
    r.pass = false;
    r.abs_err = 1.0;
    r.note = "not implemented: stabilizer fundamental windows are not supplied";
    out.records.push_back(detail::grouped(r, "duality"));
    return out;
}

}  // namespace orthoharm::tools
