#include <gtest/gtest.h>

#include "orthoharm/errors.hpp"
#include "orthoharm/kernels.hpp"
#include "test_helpers.hpp"

using namespace orthoharm;
using namespace orthoharm::testing;

namespace {

// Keeps Z away from the real cycle and the divisor of lambda.
DomainPoint admissible_point(std::mt19937_64& rng, const RVec& lam) {
    const int n = static_cast<int>(lam.size()) - 2;
    while (true) {
        const DomainPoint Z = point(rng, n);
        const double qp = q_plus_product(lam, Z), qm = frame_q(lam) - qp;
        if (qm < -0.1 * std::abs(frame_q(lam)) && qp > 0.1 * std::abs(frame_q(lam))) return Z;
    }
}

}  // namespace

TEST(Kernels, PFormIsXiOfPairing) {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 4; ++n) {
        const RVec lam = vec(rng, n);
        const DomainPoint Z = point(rng, n);
        const CatalogField h = CatalogField::pair_psi_bar(lam) / CatalogField::q_Y();
        EXPECT_LT((p_form(lam, Z).coeffs - xi(h, 1, Z).coeffs).norm(), 1e-12 * p_form(lam, Z).coeffs.norm());
    }
}

TEST(Kernels, RepresentationsAgree) {
    std::mt19937_64 rng(22);
    for (int n : {1, 2, 3, 4})
        for (double sign : {1.0, -1.0}) {
            const RVec lam = vec_with_sign(rng, n, sign);
            const KernelParams kp{lam, n + 2};
            for (int s = 0; s < 10; ++s) {
                const DomainPoint Z = admissible_point(rng, lam);
                const CVec a = p_tilde_definition(kp, Z).coeffs, b = p_tilde_rewritten(kp, Z).coeffs;
                EXPECT_LT((a - b).norm(), 1e-10 * b.norm()) << "n = " << n << " sign " << sign;
            }
        }
}

TEST(Kernels, XiPreimage) {
    std::mt19937_64 rng(23);
    for (int n : {1, 2, 3, 4})
        for (double sign : {1.0, -1.0}) {
            const RVec lam = vec_with_sign(rng, n, sign);
            const int kappa = n + 1;
            const KernelParams kp{lam, kappa};
            for (int s = 0; s < 4; ++s) {
                const DomainPoint Z = admissible_point(rng, lam);
                EXPECT_LT(rel(xi_top(p_tilde_field(kp), kappa, Z), omega_kernel(kp, Z)), 1e-6) << "n = " << n;
            }
        }
}

TEST(Kernels, BranchesAgreeForEvenN) {
    std::mt19937_64 rng(24);
    for (int n : {1, 2, 3, 4}) {
        const RVec lam = vec_with_sign(rng, n, 1.0);
        const DomainPoint Z = admissible_point(rng, lam);
        const CVec real = p_tilde_definition({lam, n + 2, Branch::real}, Z).coeffs;
        const CVec principal = p_tilde_definition({lam, n + 2, Branch::principal}, Z).coeffs;
        if (n % 2 == 0)
            EXPECT_LT((real - principal).norm(), 1e-12 * real.norm());
        else
            EXPECT_NEAR(std::abs(principal.norm() - real.norm()), 0.0, 1e-12 * real.norm());
    }
}

TEST(Kernels, OmegaKernelSingularity) {
    RVec lam = RVec::Zero(4);
    lam(2) = 1.0;  // b_1: (lambda, psi(Z)) = 2 z_1
    RVec x = RVec::Zero(2), y(2);
    y << 1.0, 0.0;
    const DomainPoint Z = DomainPoint::from_xy(x, y);
    EXPECT_NEAR(std::abs(omega_kernel({lam, 3}, Z) - std::pow(cplx(0.0, 2.0), -3)), 0.0, 1e-15);
    EXPECT_THROW(omega_kernel({RVec::Zero(4), 3}, Z), SingularityError);
    EXPECT_THROW(omega_kernel({RVec::Zero(3), 3}, Z), InputError);
    EXPECT_THROW(p_tilde({RVec::Zero(4), 3}, Z), InputError);
    EXPECT_THROW(p_tilde({lam, 2}, Z), InputError);
}
