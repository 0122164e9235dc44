#include <gtest/gtest.h>

#include "orthoharm/calculus.hpp"
#include "test_helpers.hpp"

using namespace orthoharm;
using namespace orthoharm::testing;

TEST(Calculus, CatalogDbarMatchesFiniteDifferences) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        const RVec lam = vec(rng, n), mu = vec(rng, n);
        const CatalogField f = CatalogField::pair_psi_bar(lam) * CatalogField::q_Y().pow(-2) +
                               cplx(0.5, 1.0) * CatalogField::pair_psi(mu) / CatalogField::q_plus(lam) +
                               CatalogField::q_minus(mu) * CatalogField::constant(3.0);
        for (int s = 0; s < 5; ++s) {
            const DomainPoint Z = point(rng, n);
            const CVec exact = f.dbar(Z).coeffs;
            const CVec fd = dbar_scalar(f.as_function(), Z).coeffs;
            EXPECT_LT((exact - fd).norm(), 1e-7 * (1.0 + exact.norm())) << "n = " << n;
        }
    }
}

TEST(Calculus, HolomorphicFieldsHaveNoDbar) {
    std::mt19937_64 rng(12);
    const RVec lam = vec(rng, 3);
    const DomainPoint Z = point(rng, 3);
    EXPECT_LT(CatalogField::pair_psi(lam).dbar(Z).coeffs.norm(), 1e-14);
}

TEST(Calculus, StarPairingOfDqIsOne) {
    // star(dbar q ^ star dbar q) / q(Y)^2 = 1 for q = q(Y).
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 4; ++n) {
        const DomainPoint Z = point(rng, n);
        const Form01 dq = CatalogField::q_Y().dbar(Z);
        EXPECT_NEAR(std::abs(star_pairing(dq, dq, Z) / (Z.qY() * Z.qY()) - 1.0), 0.0, 1e-12);
    }
}

TEST(Calculus, StarIsAntilinearAndPairingConsistent) {
    std::mt19937_64 rng(14);
    for (int n = 1; n <= 4; ++n) {
        const DomainPoint Z = point(rng, n);
        CVec a(n), b(n);
        for (int j = 0; j < n; ++j) {
            a(j) = cplx(rng() % 7 - 3.0, rng() % 5 - 2.0);
            b(j) = cplx(rng() % 3 - 1.0, rng() % 9 - 4.0);
        }
        const cplx c(0.3, -1.2);
        EXPECT_LT((star01({c * a}, Z).coeffs - std::conj(c) * star01({a}, Z).coeffs).norm(), 1e-12 * (1 + a.norm()));
        // alpha ^ star(beta) = star_pairing(alpha, beta) dmu
        EXPECT_LT(rel(wedge_top({a}, star01({b}, Z), Z), star_pairing({a}, {b}, Z)), 1e-12);
    }
}

TEST(Calculus, XiClosedFormAgreesWithFiniteDifferences) {
    std::mt19937_64 rng(15);
    for (int n = 1; n <= 4; ++n) {
        const RVec lam = vec(rng, n);
        const CatalogField h = CatalogField::pair_psi_bar(lam) / CatalogField::q_Y();
        const DomainPoint Z = point(rng, n);
        const CVec a = xi(h, 1, Z).coeffs;
        const CVec b = xi(h.as_function(), 1, Z).coeffs;
        EXPECT_LT((a - b).norm(), 1e-7 * a.norm());
    }
}

TEST(Calculus, LaplaceEigenfunction) {
    std::mt19937_64 rng(16);
    for (int n = 1; n <= 4; ++n) {
        const RVec lam = vec(rng, n);
        const CatalogField h = CatalogField::pair_psi_bar(lam) / CatalogField::q_Y();
        for (int s = 0; s < 3; ++s) {
            const DomainPoint Z = point(rng, n);
            EXPECT_LT(rel(laplace(h, 1, Z), 0.5 * n * h.value(Z)), 1e-6);
        }
    }
}

TEST(Calculus, RichardsonImprovesOnCentralDifferences) {
    std::mt19937_64 rng(17);
    const RVec lam = vec(rng, 2);
    const CatalogField f = CatalogField::pair_psi_bar(lam).pow(3) / CatalogField::q_Y().pow(2);
    const DomainPoint Z = point(rng, 2);
    const CVec exact = f.dbar(Z).coeffs;
    const double plain = (dbar_scalar(f.as_function(), Z, {1e-3, 0}).coeffs - exact).norm();
    const double rich = (dbar_scalar(f.as_function(), Z, {1e-3, 1}).coeffs - exact).norm();
    EXPECT_LT(rich, plain);
}
