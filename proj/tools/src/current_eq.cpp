#include <cmath>

#include "common.hpp"
#include "orthoharm/special_functions.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

Report run_current_eq(const SuiteParams& p) {
    Report out;
    out.suite = "current_eq";
    out.seed = p.seed;
    const std::vector<int> kappas = p.kappa_values.empty() ? std::vector<int>{3, 4} : p.kappa_values;
    const SmoothBump h{{{0, 0.0, 0.5}, {1, 1.5, 0.4}, {2, 0.1, 0.5}, {3, 0.0, 0.5}}};
    const std::string anchor = "stokes-current-equation";
    for (int kappa : kappas) {
        const std::string tag = "/n=2/kappa=" + std::to_string(kappa);
        std::vector<cplx> volume;
        for (double eps : p.eps_schedule) {
            const StokesCheck s = windowed_stokes_check(h, kappa, eps, 12, 4);
            const double scale = std::max({std::abs(s.omega_term), std::abs(s.dbar_term), std::abs(s.boundary_term)});
            const std::string in = text("stokes", kappa, eps);
            CheckRecord r = make_record("current/stokes" + tag + "/eps=" + num(eps), anchor, in, s.omega_term + s.dbar_term,
                                        s.boundary_term, tol_or(p, 1e-8), scale);
            out.records.push_back(grouped(r, "stokes"));
            volume.push_back(s.omega_term + s.dbar_term);
            out.curves.push_back({"current-volume" + tag, eps, s.omega_term + s.dbar_term});
        }
        const cplx limit = extrapolate_to_zero(p.eps_schedule, volume);
        RVec b1 = RVec::Zero(4);
        b1(2) = 1.0;
        const CycleChart chart = make_chart_C(b1, {{1.1, 1.9}, {-0.4, 0.6}});
        const cplx delta = cycle_integral_C(h.as_function(), kappa, chart, false).value;
        const std::string in = text("current-limit", kappa);
        CheckRecord flux = make_record("current/limit-vs-flux-constant" + tag, anchor, in, limit,
                                       tube_flux_constant(2, kappa) * delta, tol_or(p, 1e-3));
        out.records.push_back(grouped(flux, "current-limit"));
        CheckRecord printed =
            make_record("current/limit-vs-constant" + tag, anchor, in, limit, c_constant(2, kappa) * delta, tol_or(p, 1e-3));
        printed.note = "reference uses C_{n,kappa}; see current/limit-vs-flux-constant";
        out.records.push_back(grouped(printed, "current-constant"));
    }
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
