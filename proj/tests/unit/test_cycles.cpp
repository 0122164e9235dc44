#include <gtest/gtest.h>

#include <numbers>

#include "orthoharm/cycles.hpp"
#include "orthoharm/errors.hpp"
#include "orthoharm/kernels.hpp"
#include "orthoharm/special_functions.hpp"
#include "test_helpers.hpp"

using namespace orthoharm;
using namespace orthoharm::testing;

namespace {

RVec basis(int n, int j, double s = 1.0) {
    RVec v = RVec::Zero(n + 2);
    v(j) = s;
    return v;
}

}  // namespace

TEST(Cycles, TransportMapsModelToTarget) {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 4; ++n)
        for (double sign : {1.0, -1.0}) {
            if (n == 1 && sign < 0) continue;
            const RVec model = sign > 0 ? basis(n, 2) : basis(n, n + 1, 1.0);
            for (int s = 0; s < 10; ++s) {
                RVec target = vec_with_sign(rng, n, sign);
                target /= std::sqrt(std::abs(frame_q(target)) / std::abs(frame_q(model)));
                const RMat g = transport_to(model, target);
                EXPECT_LT((g * model - target).norm(), 1e-10 * target.norm());
                EXPECT_TRUE(preserves_component(g));
                for (int i = 0; i < n + 2; ++i)
                    for (int j = 0; j < n + 2; ++j)
                        EXPECT_NEAR(frame_pairing(RVec(g.col(i)), RVec(g.col(j))),
                                    frame_pairing(basis(n, i), basis(n, j)), 1e-9);
            }
        }
    EXPECT_THROW(transport_to(basis(2, 2), basis(2, 3)), InputError);
}

TEST(Cycles, ModelPointsLieOnTheCycles) {
    RVec params(2);
    params << 1.4, 0.3;
    const DomainPoint c = model_point_C(params);
    EXPECT_NEAR(std::abs(q_plus_product(basis(2, 2), c) - frame_q(basis(2, 2))), 0.0, 1e-14);
    const DomainPoint t = model_point_T(params, 2);
    EXPECT_NEAR(std::abs(pair_psi(basis(2, 3), t)), 0.0, 1e-14);
}

TEST(Cycles, EvaluateTopOnCoordinateVectors) {
    CVec g(1);
    g << 1.0;  // hat(dzbar_1) = dz_1 at n = 1
    RVec ex(2), ey(2);
    ex << 1.0, 0.0;
    ey << 0.0, 1.0;
    EXPECT_NEAR(std::abs(evaluate_top(g, {ex}) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(evaluate_top(g, {ey}) - cplx(0.0, 1.0)), 0.0, 1e-15);
}

TEST(Cycles, ExtrapolationAndSlope) {
    const std::vector<double> eps{0.1, 0.05, 0.025};
    std::vector<cplx> v;
    for (double e : eps) v.push_back(cplx(2.0, -1.0) + 3.0 * e * e - 7.0 * e * e * e * e);
    EXPECT_NEAR(std::abs(extrapolate_to_zero(eps, v) - cplx(2.0, -1.0)), 0.0, 1e-13);
    std::vector<cplx> p;
    for (double e : eps) p.push_back(4.0 * e * e);
    EXPECT_NEAR(loglog_slope(eps, p), 2.0, 1e-12);
}

TEST(Cycles, HolomorphicFiberOracle) {
    // Residue of z_n^{kappa-1} g(Z') / (2 z_n)^kappa around z_n = 0.
    const int n = 2, kappa = 4;
    const CycleChart chart = make_chart_T(basis(n, n + 1, -1.0), {{-0.3, 0.3}, {1.0, 1.5}});
    TopFn H = [](const DomainPoint& Z) {
        CVec c = CVec::Zero(2);
        c(1) = std::pow(Z.z()(1), kappa - 1) * (1.0 + Z.z()(0) * Z.z()(0));
        return c;
    };
    CVec zp(1);
    zp << cplx(0.1, 1.2);
    const CircleIntegral c = fiber_integral(H, kappa, 0.05, chart, zp);
    const cplx expect = cplx(0.0, 2.0 * std::numbers::pi) * (1.0 + zp(0) * zp(0)) / std::pow(2.0, kappa);
    EXPECT_LT(rel(c.value, expect), 1e-12);
    EXPECT_LT(c.doubling_change, 1e-12);
}

TEST(Cycles, ConjugateSectorResidueVanishes) {
    const int n = 2, kappa = 3;
    const CycleChart chart = make_chart_T(basis(n, n + 1, -1.0), {{-0.3, 0.3}, {1.0, 1.5}});
    const KernelParams kp{RVec((RVec(4) << 1.0, 0.5, 0.3, 1.1).finished()), kappa};
    CVec zp(1);
    zp << cplx(0.05, 1.25);
    CircleOptions conj;
    conj.sector = Sector::conjugate;
    std::vector<double> eps{1e-1, 1e-2, 1e-3};
    std::vector<cplx> vals;
    for (double e : eps) vals.push_back(fiber_integral(p_tilde_field(kp), kappa, e, chart, zp, conj).value);
    EXPECT_GE(loglog_slope(eps, vals), 0.9);
    EXPECT_LT(std::abs(extrapolate_to_zero(eps, vals)), 1e-6);
}

TEST(Cycles, BumpDbarMatchesFiniteDifferences) {
    const SmoothBump b{{{0, 0.1, 0.5}, {1, 1.5, 0.4}, {2, 0.0, 0.6}}};
    RVec x(2), y(2);
    x << 0.2, 0.1;
    y << 1.6, 0.3;
    const DomainPoint Z = DomainPoint::from_xy(x, y);
    EXPECT_LT((b.dbar(Z).coeffs - dbar_scalar(b.as_function(), Z).coeffs).norm(), 1e-7);
}

TEST(Cycles, TubeIntegralApproachesFluxConstant) {
    const int n = 2, kappa = 3;
    const SmoothBump bump{{{1, 1.5, 0.4}, {2, 0.1, 0.5}}};
    const CycleChart chart = make_chart_C(basis(n, 2), {{1.1, 1.9}, {-0.4, 0.6}});
    const KernelParams kp{basis(n, 2), kappa};
    const cplx delta = cycle_integral_C(bump.as_function(), kappa, chart, false).value;
    const cplx tube = tube_boundary_integral(bump.as_function(), p_tilde_field(kp), 0.05, chart, false).value;
    const cplx tube2 = tube_boundary_integral(bump.as_function(), p_tilde_field(kp), 0.1, chart, false).value;
    const cplx limit = extrapolate_to_zero({0.1, 0.05}, {tube2, tube});
    EXPECT_LT(rel(limit, -tube_flux_constant(n, kappa) * delta), 1e-3);
    EXPECT_GT(rel(limit, -c_constant(n, kappa) * delta), 0.4);
    CycleChart flipped = chart;
    flipped.orientation = -1;
    EXPECT_EQ(tube_boundary_integral(bump.as_function(), p_tilde_field(kp), 0.05, flipped, false).value, -tube);
}

TEST(Cycles, WindowedStokes) {
    const SmoothBump bump{{{0, 0.0, 0.5}, {1, 1.5, 0.4}, {2, 0.1, 0.5}, {3, 0.0, 0.5}}};
    const StokesCheck s = windowed_stokes_check(bump, 3, 0.05, 12, 4);
    const double scale = std::max({std::abs(s.omega_term), std::abs(s.dbar_term), std::abs(s.boundary_term)});
    EXPECT_LT(s.residual, 1e-8 * scale);
}
