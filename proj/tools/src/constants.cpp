#include <cmath>
#include <numbers>

#include "common.hpp"
#include "orthoharm/quadrature.hpp"
#include "orthoharm/special_functions.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

namespace {

constexpr double kPi = std::numbers::pi;

double radial(int n, double r) { return std::pow(r, n - 2) / std::pow(std::sqrt(r * r + 1.0), n); }

double trapezoid(int n, long panels) {
    const double h = 1.0 / static_cast<double>(panels);
    double s = 0.5 * (radial(n, 0.0) + radial(n, 1.0));
    for (long i = 1; i < panels; ++i) s += radial(n, static_cast<double>(i) * h);
    return s * h;
}

double composite_gl(int n, int panels) {
    double s = 0.0;
    for (int k = 0; k < panels; ++k) {
        const QuadratureRule r = gauss_legendre(10, static_cast<double>(k) / panels, static_cast<double>(k + 1) / panels);
        for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * radial(n, r.nodes[i]);
    }
    return s;
}

}  // namespace

Report run_constants(const SuiteParams& p) {
    Report out;
    out.suite = "constants";
    out.seed = p.seed;
    const std::string anchor = "cycle-integral-constant";
    auto add = [&](CheckRecord r, const char* group) { out.records.push_back(grouped(std::move(r), group)); };

    add(make_record("constants/radial/n=2", anchor, text("radial", 2), c_radial_integral(2), kPi / 4.0, tol_or(p, 1e-10)),
        "constants");
    add(make_record("constants/radial/n=3", anchor, text("radial", 3), c_radial_integral(3), 1.0 - 1.0 / std::sqrt(2.0),
                    tol_or(p, 1e-10)),
        "constants");
    add(make_record("constants/radial/n=4", anchor, text("radial-trapezoid", 4, 1000000), c_radial_integral(4),
                    trapezoid(4, 1000000), tol_or(p, 1e-9)),
        "constants");
    add(make_record("constants/radial-closed-form/n=4", anchor, text("radial", 4), c_radial_integral(4),
                    0.5 * (kPi / 4.0 - 0.5), tol_or(p, 1e-10)),
        "constants");
    for (int n : {2, 3, 4}) {
        const double a = composite_gl(n, 64), b = composite_gl(n, 128);
        add(make_abs_record("constants/radial-panel-doubling/n=" + std::to_string(n), anchor, text("panels", n, 64, 128), b,
                            a, tol_or(p, 1e-12)),
            "constants");
    }
    std::vector<int> kappas = p.kappa_values.empty() ? std::vector<int>{3, 4, 5, 6} : p.kappa_values;
    for (int kappa : kappas) {
        if (kappa <= 2) continue;
        const std::string k = std::to_string(kappa);
        const cplx closed = -kPi / (2.0 * std::pow(4.0, kappa) * (kappa - 1));
        add(make_record("constants/c/n=2/kappa=" + k, anchor, text("c", 2, kappa), c_constant(2, kappa), closed,
                        tol_or(p, 1e-10)),
            "constants");
        add(make_record("constants/tube-flux-ratio/n=2/kappa=" + k, anchor, text("flux", 2, kappa),
                        tube_flux_constant(2, kappa), 2.0 * c_constant(2, kappa), tol_or(p, 1e-12)),
            "constants");
    }

    Rng rng(p.seed);
    const int samples = samples_or(p, 200);
    if (samples > 0) {
        const std::string in = text("special", samples, p.seed);
        auto gam = worst("special/gamma-recursion", "gamma-recursion", "special-functions", in, tol_or(p, 1e-12));
        auto power = worst("special/hyp2f1-power", "hypergeometric-special-values", "special-functions", in, tol_or(p, 1e-12));
        auto zero = worst("special/hyp2f1-at-zero", "hypergeometric-special-values", "special-functions", in, tol_or(p, 1e-15));
        auto lin = worst("special/hyp2f1-terminating", "hypergeometric-special-values", "special-functions", in,
                         tol_or(p, 1e-14));
        auto contig = worst("special/hyp2f1-contiguity", "hypergeometric-contiguity", "special-functions", in, tol_or(p, 1e-12));
        for (int s = 0; s < samples; ++s) {
            const double x = rng.uniform(0.5, 50.0);
            gam.add(gamma_fn(x + 1.0), x * gamma_fn(x));
            const double a = rng.uniform(-3.0, 3.0), b = rng.uniform(0.2, 4.0), c = rng.uniform(0.5, 6.0);
            const double z = rng.uniform(0.0, 0.9);
            power.add(hyp2f1(a, b, b, z), std::pow(1.0 - z, -a));
            zero.add(hyp2f1(a, b, c, 0.0), 1.0);
            lin.add(hyp2f1(-1.0, b, c, z), 1.0 - b * z / c, 1.0 + std::abs(b * z / c));
            // Gauss: c(c-1)(z-1) F(c-1) + c(c-1-(2c-a-b-1)z) F(c) + (c-a)(c-b) z F(c+1) = 0
            const double cc = c + 1.0;
            const double t1 = cc * (cc - 1.0) * (z - 1.0) * hyp2f1(a, b, cc - 1.0, z);
            const double t2 = cc * (cc - 1.0 - (2.0 * cc - a - b - 1.0) * z) * hyp2f1(a, b, cc, z);
            const double t3 = (cc - a) * (cc - b) * z * hyp2f1(a, b, cc + 1.0, z);
            contig.add(t1 + t2 + t3, 0.0, std::abs(t1) + std::abs(t2) + std::abs(t3));
        }
        out.records.push_back(gam.record());
        out.records.push_back(power.record());
        out.records.push_back(zero.record());
        out.records.push_back(lin.record());
        out.records.push_back(contig.record());
    }
    add(make_record("special/gamma-half", "gamma-recursion", "gamma(1/2)", gamma_fn(0.5), std::sqrt(kPi), tol_or(p, 1e-14)),
        "special-functions");
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
