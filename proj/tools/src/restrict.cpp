#include <cmath>
#include <numbers>

#include "common.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

namespace {

RVec model_minus_bn(int n, double scale = 1.0) {
    RVec v = RVec::Zero(n + 2);
    v(n + 1) = -scale;
    return v;
}

std::vector<Interval> window_T(int n) {
    std::vector<Interval> w{{-0.3, 0.3}, {1.0, 1.5}};
    for (int k = 1; k < n - 1; ++k) {
        w.push_back({-0.3, 0.3});
        w.push_back({-0.2, 0.2});
    }
    return w;
}

CheckRecord at_least(const std::string& id, const std::string& anchor, const std::string& inputs, double value, double bound) {
    CheckRecord r = make_abs_record(id, anchor, inputs, value, bound, 0.0);
    r.abs_err = std::max(0.0, bound - value);
    r.rel_err = r.abs_err / bound;
    r.pass = std::isfinite(value) && value >= bound;
    r.note = "pass iff value >= reference";
    return r;
}

struct TestForm {
    std::string name;
    TopFn H;
};

// Smooth forms across T_{-b_n}: kernels of vectors whose singular cycles stay
// away from the window, and a polynomial in z, zbar.
std::vector<TestForm> test_forms(int n, int kappa, const std::vector<CVec>& bases, Rng& rng) {
    std::vector<TestForm> forms;
    for (double sign : {1.0, -1.0}) {
        while (true) {
            const RVec lam = random_vector_with_sign(n, rng, sign);
            double gap = 1e300;
            for (const CVec& zp : bases)
                for (int m = 0; m < 16; ++m) {
                    CVec z(n);
                    z.head(n - 1) = zp;
                    z(n - 1) = std::polar(0.1 * std::sqrt(zp(0).imag() * zp(0).imag()), 2 * std::numbers::pi * m / 16);
                    const DomainPoint Z(z);
                    const double qp = q_plus_product(lam, Z);
                    gap = std::min(gap, sign > 0 ? qp - frame_q(lam) : qp);
                }
            if (gap > 0.2 * std::abs(frame_q(lam))) {
                forms.push_back({sign > 0 ? "kernel-q>0" : "kernel-q<0", p_tilde_field({lam, kappa})});
                break;
            }
        }
    }
    // z_n^a zbar_n^b contributes eps^{a+b+1-kappa}, nonzero only for a - b = kappa + 1;
    // terms with a + b + 1 < kappa would only add amplified rounding.
    forms.push_back({"polynomial", [n, kappa](const DomainPoint& Z) {
                         const CVec& z = Z.z();
                         CVec g = CVec::Zero(n);
                         const cplx zn = z(n - 1);
                         g(n - 1) = std::pow(zn, kappa + 1) * (1.0 + z(0)) + std::pow(zn, kappa + 2) * std::conj(zn) +
                                    std::pow(zn, kappa - 1) * std::conj(zn) * (1.0 + std::conj(z(0)));
                         if (n > 1) g(0) = zn * std::conj(zn) + z(0);
                         return g;
                     }});
    return forms;
}

}  // namespace

Report run_restrict(const SuiteParams& p) {
    Report out;
    out.suite = "restrict";
    out.seed = p.seed;
    const std::vector<int> ns = p.n_values.empty() ? std::vector<int>{2, 3} : p.n_values;
    const int samples = samples_or(p, 4);
    if (samples == 0) return out;
    const std::vector<double> slope_eps{1e-1, std::pow(10.0, -1.5), 1e-2, std::pow(10.0, -2.5), 1e-3};
    const std::string anchor = "antiholomorphic-residue";
    Rng root(p.seed);

    for (int n : ns) {
        Rng rng = root.split(static_cast<std::uint64_t>(n));
        const std::vector<Interval> window = window_T(n);
        std::vector<CVec> bases;
        for (int s = 0; s < samples; ++s) {
            CVec zp(n - 1);
            for (int k = 0; k < n - 1; ++k)
                zp(k) = cplx(rng.uniform(window[2 * k].lo, window[2 * k].hi), rng.uniform(window[2 * k + 1].lo, window[2 * k + 1].hi));
            bases.push_back(zp);
        }
        const std::vector<int> kappas = p.kappa_values.empty() ? std::vector<int>{n + 1} : p.kappa_values;
        for (int kappa : kappas) {
            const std::string tag = "/n=" + std::to_string(n) + "/kappa=" + std::to_string(kappa);
            CycleChart chart = make_chart_T(model_minus_bn(n), window);
            chart.workers = p.workers;
            chart.window_nodes = n == 2 ? 6 : 4;
            const CircleOptions conj{256, Sector::conjugate};
            for (const TestForm& form : test_forms(n, kappa, bases, rng)) {
                const std::string ftag = tag + "/" + form.name;
                const std::string in = text("restrict", n, kappa, form.name, samples, p.seed);
                double min_slope = 1e300, worst_extrap = 0.0, worst_doubling = 0.0;
                for (const CVec& zp : bases) {
                    std::vector<cplx> vals;
                    for (double e : slope_eps) {
                        const CircleIntegral c = fiber_integral(form.H, kappa, e, chart, zp, conj);
                        vals.push_back(c.value);
                        worst_doubling = std::max(worst_doubling, c.doubling_change);
                        out.curves.push_back({"residue" + ftag, e, c.value});
                    }
                    min_slope = std::min(min_slope, loglog_slope(slope_eps, vals));
                    std::vector<cplx> sched;
                    for (double e : p.eps_schedule) sched.push_back(fiber_integral(form.H, kappa, e, chart, zp, conj).value);
                    worst_extrap = std::max(worst_extrap, std::abs(extrapolate_to_zero(p.eps_schedule, sched)));
                }
                out.records.push_back(grouped(at_least("restrict/residue-slope" + ftag, anchor, in, min_slope, 0.9), "residue"));
                out.records.push_back(grouped(
                    make_abs_record("restrict/residue-extrapolated" + ftag, anchor, in, worst_extrap, 0.0, tol_or(p, 1e-6)),
                    "residue"));
                out.records.push_back(grouped(make_abs_record("restrict/fiber-doubling" + ftag, anchor, in, worst_doubling, 0.0,
                                                              tol_or(p, 1e-9)),
                                              "residue"));
                const CycleIntegralT ct = cycle_integral_T(form.H, kappa, p.eps_schedule.front(), chart, conj);
                out.records.push_back(grouped(make_abs_record("restrict/cycle-integral-T" + ftag, "restriction-to-T", in,
                                                              ct.extrapolated, 0.0, tol_or(p, 1e-6)),
                                              "residue"));
            }

            // Holomorphic sector oracle: z_n^{kappa-1} g(Z') on the hat(dzbar_n) slot.
            const double scale = 2.0;
            CycleChart scaled = make_chart_T(model_minus_bn(n, scale), window);
            auto g = [](const CVec& zp) { return std::exp(zp(0)) + std::conj(zp(0)) * zp(0); };
            TopFn H = [n, kappa, g](const DomainPoint& Z) {
                CVec c = CVec::Zero(n);
                c(n - 1) = std::pow(Z.z()(n - 1), kappa - 1) * g(Z.z().head(n - 1));
                return c;
            };
            auto oracle = worst("restrict/fiber-oracle" + tag, "restriction-to-T", "restriction",
                                text("oracle", n, kappa, scale, samples), tol_or(p, 1e-10));
            for (const CVec& zp : bases) {
                const cplx expect = cplx(0.0, 2.0 * std::numbers::pi) * g(zp) / std::pow(2.0 * scale, kappa);
                oracle.add(fiber_integral(H, kappa, p.eps_schedule.front(), scaled, zp).value, expect);
                std::vector<cplx> sched;
                for (double e : p.eps_schedule) sched.push_back(fiber_integral(H, kappa, e, scaled, zp).value);
                oracle.add(extrapolate_to_zero(p.eps_schedule, sched), expect);
            }
            out.records.push_back(oracle.record());

            // Transport: circle integrals around a non-model T_nu equal the model
            // ones for the pulled-back vector.
            const auto ctx = build_context(standard_lattice(n));
            std::vector<long long> coords(static_cast<size_t>(n + 2), 0);
            coords[0] = 1;
            coords[1] = -1;
            const RVec nu = ctx->frame.to_frame(LatticeVector::from_ints(coords));
            const CycleChart moved = make_chart_T(nu, window);
            const RVec mu = random_vector_with_sign(n, rng, 1.0);
            const RVec mu_model = moved.transport.inverse() * mu;
            auto tr = worst("restrict/transport" + tag, "restriction-to-T", "restriction",
                            text("transport", n, kappa, vec_text(mu)), tol_or(p, 1e-9));
            for (const CVec& zp : bases) {
                try {
                    tr.add(fiber_integral(p_tilde_field({mu, kappa}), kappa, 0.1, moved, zp).value,
                           fiber_integral(p_tilde_field({mu_model, kappa}), kappa, 0.1, make_chart_T(model_minus_bn(n), window), zp).value);
                } catch (const std::exception& ex) {
                    tr.fail(ex.what());
                }
            }
            out.records.push_back(tr.record());
        }
    }
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
