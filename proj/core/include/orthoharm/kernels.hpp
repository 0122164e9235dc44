#pragma once

#include "orthoharm/calculus.hpp"

namespace orthoharm {

// How (-1)^{n/2 - 1} q(lambda_{Z-})^{n/2} is read in the q(lambda) > 0 kernel.
enum class Branch {
    // -(-q(lambda_{Z-}))^{n/2}: real, consistent with the rewritten kernel
    // for every n (the default).
    real,
    // Principal powers with (-1)^{n/2} = i^n; agrees with `real` for even n.
    principal,
};

struct KernelParams {
    RVec lambda;  // frame coordinates, q(lambda) != 0
    int kappa;
    Branch branch = Branch::real;

    int n() const { return static_cast<int>(lambda.size()) - 2; }
    // i^n, the reading of (-1)^{n/2} under Branch::principal.
    cplx branch_phase() const;
};

// (lambda, psi(Z))^{-kappa}.
cplx omega_kernel(const KernelParams& p, const DomainPoint& Z);

// p_Z(lambda) = xi_1 ((lambda, psi(Zbar)) / q(Y)), closed form.
FormTop p_form(const RVec& lambda, const DomainPoint& Z);

// Hypergeometric kernel with argument q(lambda)/q(lambda_{Z+}).
FormTop p_tilde_definition(const KernelParams& p, const DomainPoint& Z);
// Same kernel after the Pfaff transformation, argument q(lambda)/q(lambda_{Z-}):
// (lambda, psi(Zbar))^{1-kappa} q(Y)^{kappa-1} / (4 (kappa - n/2) q(lambda_{Z-}))
//   * F(1 - n/2, 1; kappa - n/2 + 1; q(lambda)/q(lambda_{Z-})) p_Z(lambda).
FormTop p_tilde_rewritten(const KernelParams& p, const DomainPoint& Z);
// Definition form for q(lambda) > 0, rewritten form for q(lambda) < 0.
FormTop p_tilde(const KernelParams& p, const DomainPoint& Z);

TopFn p_tilde_field(const KernelParams& p);

}  // namespace orthoharm
