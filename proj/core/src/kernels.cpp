#include "orthoharm/kernels.hpp"

#include <cmath>

#include "orthoharm/errors.hpp"
#include "orthoharm/special_functions.hpp"

namespace orthoharm {

namespace {

constexpr double kSingularTol = 1e-12;

void check_params(const KernelParams& p, const DomainPoint& Z) {
    if (p.lambda.size() != Z.n() + 2) throw InputError("kernel: lambda has wrong dimension");
    if (p.kappa <= p.n()) throw InputError("kernel: kappa > n required");
    if (frame_q(p.lambda) == 0.0) throw InputError("kernel: q(lambda) must be nonzero");
}

double natural_scale(const RVec& lambda, const DomainPoint& Z) {
    return std::abs(frame_q(lambda)) + q_plus_product(lambda, Z);
}

}  // namespace

cplx KernelParams::branch_phase() const { return std::pow(cplx(0.0, 1.0), n()); }

cplx omega_kernel(const KernelParams& p, const DomainPoint& Z) {
    if (p.lambda.size() != Z.n() + 2) throw InputError("kernel: lambda has wrong dimension");
    const cplx s = pair_psi(p.lambda, Z);
    const double scale = std::sqrt(natural_scale(p.lambda, Z) * 4.0 * Z.qY());
    if (std::abs(s) <= kSingularTol * scale)
        throw SingularityError("omega kernel: Z lies on the pole divisor of lambda", std::abs(s));
    return std::pow(s, -p.kappa);
}

FormTop p_form(const RVec& lambda, const DomainPoint& Z) {
    const int n = Z.n();
    const double q = Z.qY();
    const cplx a = pair_psi_bar(lambda, Z);
    CVec f(n);
    for (int j = 0; j < n; ++j) {
        const cplx da = 2.0 * eps_sign(j) * (lambda(2 + j) - lambda(1) * std::conj(Z.z()(j)));
        const cplx dq = cplx(0.0, eps_sign(j) * Z.z()(j).imag());
        f(j) = (q * da - a * dq) / (q * q);
    }
    FormTop s = star01(Form01{f}, Z);
    s.coeffs *= q;
    return s;
}

FormTop p_tilde_definition(const KernelParams& p, const DomainPoint& Z) {
    check_params(p, Z);
    const int n = Z.n();
    const double h = 0.5 * n;
    const double ql = frame_q(p.lambda);
    const Projection pr = project(p.lambda, Z);
    const double scale = natural_scale(p.lambda, Z);
    if (std::abs(pr.q_minus) <= kSingularTol * scale)
        throw SingularityError("p_tilde: Z lies on the real cycle of lambda", std::abs(pr.q_minus));
    if (pr.q_plus <= kSingularTol * scale)
        throw SingularityError("p_tilde: Z lies on the divisor of lambda", pr.q_plus);
    const double k = p.kappa;
    const double F = hyp2f1(1.0 - h, k - h, k - h + 1.0, ql / pr.q_plus);
    cplx denom;
    if (p.branch == Branch::real) {
        denom = -std::pow(-pr.q_minus, h);
    } else {
        const cplx phase = p.branch_phase();
        denom = -phase * std::pow(cplx(pr.q_minus, 0.0), h);
    }
    const cplx pre = std::pow(pair_psi(p.lambda, Z), p.kappa - 1) / (std::pow(4.0, k) * (k - h) * denom) *
                     std::pow(pr.q_plus, h - k) * F;
    FormTop out = p_form(p.lambda, Z);
    out.coeffs *= pre;
    return out;
}

FormTop p_tilde_rewritten(const KernelParams& p, const DomainPoint& Z) {
    check_params(p, Z);
    const int n = Z.n();
    const double h = 0.5 * n;
    const double ql = frame_q(p.lambda);
    const Projection pr = project(p.lambda, Z);
    const double scale = natural_scale(p.lambda, Z);
    if (std::abs(pr.q_minus) <= kSingularTol * scale)
        throw SingularityError("p_tilde: Z lies on the real cycle of lambda", std::abs(pr.q_minus));
    const cplx abar = pair_psi_bar(p.lambda, Z);
    if (std::abs(abar) <= kSingularTol * std::sqrt(scale * 4.0 * Z.qY()))
        throw SingularityError("p_tilde: Z lies on the divisor of lambda", std::abs(abar));
    const double k = p.kappa;
    const double F = hyp2f1(1.0 - h, 1.0, k - h + 1.0, ql / pr.q_minus);
    const cplx pre = std::pow(abar, 1 - p.kappa) * std::pow(Z.qY(), p.kappa - 1) / (4.0 * (k - h) * pr.q_minus) * F;
    FormTop out = p_form(p.lambda, Z);
    out.coeffs *= pre;
    return out;
}

FormTop p_tilde(const KernelParams& p, const DomainPoint& Z) {
    return frame_q(p.lambda) > 0.0 ? p_tilde_definition(p, Z) : p_tilde_rewritten(p, Z);
}

TopFn p_tilde_field(const KernelParams& p) {
    return [p](const DomainPoint& Z) { return p_tilde(p, Z).coeffs; };
}

}  // namespace orthoharm
