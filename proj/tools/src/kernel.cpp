#include <cmath>

#include "common.hpp"
#include "orthoharm/special_functions.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

namespace {

// Coefficient vectors are compared through the norm of their difference.
void add_forms(WorstCase& w, const CVec& value, const CVec& reference) {
    w.add((value - reference).norm(), 0.0, reference.norm());
}

// (lambda, Z) away from the singular cycle of p_tilde(lambda): q(lambda_{Z-}) for
// q(lambda) > 0, q(lambda_{Z+}) for q(lambda) < 0, relative to |q(lambda)|.
std::pair<RVec, DomainPoint> admissible(int n, double sign, Rng& rng) {
    while (true) {
        RVec lam = random_vector_with_sign(n, rng, sign);
        DomainPoint Z = random_point(n, rng);
        const double ql = frame_q(lam);
        const double qp = q_plus_product(lam, Z);
        const double qm = ql - qp;
        const double gap = sign > 0 ? -qm : qp;
        if (gap >= 0.1 * std::abs(ql)) return {lam, Z};
    }
}

}  // namespace

Report run_kernel(const SuiteParams& p) {
    Report out;
    out.suite = "kernel";
    out.seed = p.seed;
    const std::vector<int> ns = p.n_values.empty() ? std::vector<int>{2, 4} : p.n_values;
    const int samples = samples_or(p, 100);
    if (samples == 0) return out;
    Rng root(p.seed);
    for (int n : ns) {
        Rng rng = root.split(static_cast<std::uint64_t>(n));
        // Equivariance uses the generators of the standard lattice in frame coordinates.
        std::vector<RMat> gens;
        if (n <= 4) {
            const auto ctx = build_context(standard_lattice(n));
            for (const Isometry& g : ctx->group.generators) gens.push_back(ctx->frame.isometry_to_frame(g.matrix));
        } else {
            gens.push_back(random_isometry(n, rng));
        }
        const std::string tag = "/n=" + std::to_string(n);
        std::vector<int> kappas = p.kappa_values;
        if (kappas.empty())
            for (int k = n + 1; k <= n + 3; ++k) kappas.push_back(k);
        for (int kappa : kappas) {
            for (double sign : {1.0, -1.0}) {
                const std::string ktag = tag + "/kappa=" + std::to_string(kappa) + (sign > 0 ? "/q>0" : "/q<0");
                const std::string in = text("kernel", n, kappa, sign, samples, p.seed);
                auto pre = worst("kernel/xi-preimage" + ktag, "xi-preimage", "xi-preimage", in, tol_or(p, 1e-6));
                auto rep = worst("kernel/representations" + ktag, "p-tilde-representations", "kernel", in, tol_or(p, 1e-9));
                auto eqv = worst("kernel/equivariance" + ktag, "p-tilde-equivariance", "kernel", in, tol_or(p, 1e-9));
                for (int s = 0; s < samples; ++s) {
                    auto [lam, Z] = admissible(n, sign, rng);
                    const KernelParams kp{lam, kappa};
                    try {
                        pre.add(xi_top(p_tilde_field(kp), kappa, Z), omega_kernel(kp, Z));
                        add_forms(rep, p_tilde_definition(kp, Z).coeffs, p_tilde_rewritten(kp, Z).coeffs);
                        const RMat& g = gens[static_cast<size_t>(s) % gens.size()];
                        const KernelParams moved{RVec(g.inverse() * lam), kappa};
                        add_forms(eqv, slash_top(p_tilde_field(kp), kappa, g)(Z), p_tilde(moved, Z).coeffs);
                    } catch (const std::exception& ex) {
                        pre.fail(ex.what());
                    }
                }
                out.records.push_back(pre.record());
                out.records.push_back(rep.record());
                out.records.push_back(eqv.record());
            }
        }

        const std::string in = text("kernel-closed", n, samples, p.seed);
        auto closed = worst("kernel/xi-closedness" + tag, "xi-closedness", "xi-preimage", in, tol_or(p, 1e-6), true);
        auto pform = worst("kernel/p-form-closed" + tag, "p-form", "kernel", in, tol_or(p, 1e-9));
        auto pform_fd = worst("kernel/p-form-fd" + tag, "p-form", "kernel", in, tol_or(p, 1e-6));
        auto hyp = worst("kernel/hypergeometric-dbar" + tag, "hypergeometric-dbar", "kernel", in, tol_or(p, 1e-6));
        for (int s = 0; s < samples; ++s) {
            const double sign = s % 2 == 0 ? 1.0 : -1.0;
            auto [lam, Z] = admissible(n, sign, rng);
            const double ql = frame_q(lam);
            if (ql - q_plus_product(lam, Z) > -0.1) {
                --s;
                continue;
            }
            TopFn H = [lam, n](const DomainPoint& W) {
                const double qm = frame_q(lam) - q_plus_product(lam, W);
                return CVec(p_form(lam, W).coeffs / std::pow(cplx(qm), 0.5 * n));
            };
            const CatalogField f = CatalogField::pair_psi_bar(lam) / CatalogField::q_Y();
            try {
                closed.add(xi_top(H, 1, Z), 0.0);
                add_forms(pform, p_form(lam, Z).coeffs, xi(f, 1, Z).coeffs);
                add_forms(pform_fd, xi(f.as_function(), 1, Z).coeffs, p_form(lam, Z).coeffs);
            } catch (const std::exception& ex) {
                closed.fail(ex.what());
            }
            if (n % 2 == 0) {
                const int kappa = n + 1;
                const double a = 1.0 - 0.5 * n, b = kappa - 0.5 * n;
                // q(lambda_{Z+})^{n/2 - kappa} F(1 - n/2, kappa - n/2; kappa - n/2 + 1; q(lambda) / q(lambda_{Z+}))
                ScalarFn g = [lam, a, b](const DomainPoint& W) {
                    const double qp = q_plus_product(lam, W);
                    return cplx(std::pow(qp, -b) * hyp2f1(a, b, b + 1.0, frame_q(lam) / qp));
                };
                const double qp = q_plus_product(lam, Z), qm = ql - qp;
                const cplx sgn = (n / 2) % 2 == 0 ? 1.0 : -1.0;
                const CVec rhs = sgn / 4.0 * pair_psi(lam, Z) * b * std::pow(qp, -kappa) * std::pow(qm, 0.5 * n - 1.0) *
                                 f.dbar(Z).coeffs;
                try {
                    add_forms(hyp, dbar_scalar(g, Z).coeffs, rhs);
                } catch (const std::exception& ex) {
                    hyp.fail(ex.what());
                }
            }
        }
        out.records.push_back(closed.record());
        out.records.push_back(pform.record());
        out.records.push_back(pform_fd.record());
        if (n % 2 == 0) out.records.push_back(hyp.record());
    }
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
