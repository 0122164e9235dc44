#include <cmath>

#include "common.hpp"
#include "orthoharm/special_functions.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

namespace {

RVec model_b1(int n) {
    RVec v = RVec::Zero(n + 2);
    v(2) = 1.0;
    return v;
}

// Test function supported inside the window y_1 in [1.1, 1.9], x_2 in [-0.4, 0.6].
SmoothBump window_bump() { return SmoothBump{{{1, 1.5, 0.4}, {2, 0.1, 0.5}}}; }

}  // namespace

Report run_tube_limit(const SuiteParams& p) {
    Report out;
    out.suite = "tube_limit";
    out.seed = p.seed;
    const int n = 2;
    const RVec mu = model_b1(n);
    const SmoothBump bump = window_bump();
    const ScalarFn h = bump.as_function();
    std::vector<int> kappas = p.kappa_values.empty() ? std::vector<int>{3, 4} : p.kappa_values;
    const std::vector<double>& eps = p.eps_schedule;
    const std::string anchor = "cycle-integral-limit";

    for (int kappa : kappas) {
        const std::string tag = "/n=2/kappa=" + std::to_string(kappa);
        const std::string in = text("tube", n, kappa, vec_text(Eigen::Map<const RVec>(eps.data(), static_cast<int>(eps.size()))));
        CycleChart chart = make_chart_C(mu, {{1.1, 1.9}, {-0.4, 0.6}});
        chart.workers = p.workers;
        const KernelParams kp{mu, kappa};
        std::vector<cplx> values;
        double worst_quad = 0.0;
        for (double e : eps) {
            const IntegralEstimate est = tube_boundary_integral(h, p_tilde_field(kp), e, chart, true);
            values.push_back(est.value);
            worst_quad = std::max(worst_quad, est.error / std::abs(est.value));
            out.curves.push_back({"tube-boundary" + tag, e, est.value});
        }
        const cplx limit = extrapolate_to_zero(eps, values);
        out.curves.push_back({"tube-boundary" + tag, 0.0, limit});
        const IntegralEstimate delta = cycle_integral_C(h, kappa, chart, true);

        CheckRecord printed = make_record("tube/limit-vs-constant" + tag, anchor, in, limit, -c_constant(n, kappa) * delta.value,
                                          tol_or(p, 1e-3));
        printed.note = "reference uses C_{n,kappa}; see tube/limit-vs-flux-constant";
        out.records.push_back(grouped(printed, "tube-limit"));
        CheckRecord flux = make_record("tube/limit-vs-flux-constant" + tag, anchor, in, limit,
                                       -tube_flux_constant(n, kappa) * delta.value, tol_or(p, 1e-3));
        flux.note = "reference uses the full normal solid angle";
        out.records.push_back(grouped(flux, "tube-flux"));
        out.records.push_back(grouped(
            make_abs_record("tube/quadrature-doubling" + tag, anchor, in, worst_quad, 0.0, tol_or(p, 1e-8)), "tube-quadrature"));
        out.records.push_back(grouped(make_abs_record("tube/cycle-quadrature-doubling" + tag, "cycle-integral-window", in,
                                                      delta.error / std::abs(delta.value), 0.0, tol_or(p, 1e-10)),
                                      "tube-quadrature"));

        // Orientation flip.
        CycleChart flipped = chart;
        flipped.orientation = -1;
        const IntegralEstimate dflip = cycle_integral_C(h, kappa, flipped, false);
        const IntegralEstimate tflip = tube_boundary_integral(h, p_tilde_field(kp), eps.front(), flipped, false);
        const IntegralEstimate tplain = tube_boundary_integral(h, p_tilde_field(kp), eps.front(), chart, false);
        const IntegralEstimate dplain = cycle_integral_C(h, kappa, chart, false);
        out.records.push_back(grouped(make_abs_record("tube/orientation-flip" + tag, "cycle-integral-window", in,
                                                      std::abs(dflip.value + dplain.value) + std::abs(tflip.value + tplain.value),
                                                      0.0, 0.0),
                                      "tube-orientation"));

        // Transport: the same integrals around a non-model vector agree with the model ones.
        const auto ctx = build_context(standard_lattice(2));
        const RVec mu_lat = ctx->frame.to_frame(LatticeVector::from_ints({1, 1, 0, 0}));
        CycleChart moved = make_chart_C(mu_lat, chart.window);
        moved.workers = p.workers;
        const ScalarFn h_moved = slash(h, kappa, moved.transport.inverse());
        const IntegralEstimate tmoved =
            tube_boundary_integral(h_moved, p_tilde_field({mu_lat, kappa}), eps.front(), moved, false);
        out.records.push_back(grouped(make_record("tube/transport-invariance" + tag, anchor, text(in, vec_text(mu_lat)),
                                                  tmoved.value, tplain.value, tol_or(p, 1e-9)),
                                      "tube-transport"));
        const IntegralEstimate dmoved = cycle_integral_C(h_moved, kappa, moved, false);
        out.records.push_back(grouped(make_record("tube/cycle-transport-invariance" + tag, "cycle-integral-window",
                                                  text(in, vec_text(mu_lat)), dmoved.value, dplain.value, tol_or(p, 1e-9)),
                                      "tube-transport"));
    }

    // One-dimensional oracles for the cycle integral.
    for (int kappa : kappas) {
        const std::string tag = "/kappa=" + std::to_string(kappa);
        CycleChart c1 = make_chart_C(model_b1(1), {{1.0, 2.0}});
        const IntegralEstimate d = cycle_integral_C([](const DomainPoint&) { return cplx(1.0); }, kappa, c1, true);
        const cplx oracle = std::pow(cplx(0.0, 2.0), kappa - 1) * (std::pow(2.0, kappa) - 1.0) / static_cast<double>(kappa);
        out.records.push_back(grouped(
            make_record("tube/cycle-integral-oracle/n=1" + tag, "cycle-integral-window", text("oracle", kappa), d.value, oracle,
                        tol_or(p, 1e-10)),
            "cycle-integral"));
        const double r = 3.0;
        CycleChart c3 = make_chart_C(r * model_b1(1), {{1.0, 2.0}});
        const IntegralEstimate d3 = cycle_integral_C([](const DomainPoint&) { return cplx(1.0); }, kappa, c3, false);
        out.records.push_back(grouped(make_record("tube/cycle-integral-scaling/n=1" + tag, "cycle-integral-window",
                                                  text("scaling", kappa, r), d3.value, std::pow(r, -kappa) * oracle,
                                                  tol_or(p, 1e-10)),
                                      "cycle-integral"));
    }
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
