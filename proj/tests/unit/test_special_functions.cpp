#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>

#include "orthoharm/errors.hpp"
#include "orthoharm/quadrature.hpp"
#include "orthoharm/special_functions.hpp"

using namespace orthoharm;

namespace {

// Boost's pFq series needs |z| < 1; for z < -1/2 the Pfaff transformation
// moves the argument into (1/3, 1).
double oracle(double a, double b, double c, double z) {
    if (z < -0.5) return std::pow(1.0 - z, -a) * boost::math::hypergeometric_pFq({a, c - b}, {c}, z / (z - 1.0));
    return boost::math::hypergeometric_pFq({a, b}, {c}, z);
}

}  // namespace

TEST(Hyp2f1, MatchesBoostPfq) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> A(-3.0, 3.0), Bd(0.2, 4.0), C(0.5, 6.0), Zd(-3.0, 0.95);
    for (int i = 0; i < 200; ++i) {
        const double a = A(rng), b = Bd(rng), c = C(rng), z = Zd(rng);
        const double ref = oracle(a, b, c, z);
        EXPECT_NEAR(hyp2f1(a, b, c, z), ref, 1e-10 * std::max(1.0, std::abs(ref))) << a << " " << b << " " << c << " " << z;
    }
}

TEST(Hyp2f1, KernelParameters) {
    // Parameters the kernels use: F(1 - n/2, kappa - n/2; kappa - n/2 + 1; z) and F(1 - n/2, 1; kappa - n/2 + 1; z).
    for (int n : {1, 2, 3, 4, 5}) {
        for (int kappa = n + 1; kappa <= n + 3; ++kappa) {
            const double a = 1.0 - n / 2.0, b = kappa - n / 2.0, c = b + 1.0;
            for (double z : {-50.0, -3.0, -0.5, 0.0, 0.3, 0.9, 0.999}) {
                const double r1 = oracle(a, b, c, z);
                EXPECT_NEAR(hyp2f1(a, b, c, z), r1, 1e-10 * std::max(1.0, std::abs(r1)));
                const double r2 = oracle(a, 1.0, c, z);
                EXPECT_NEAR(hyp2f1(a, 1.0, c, z), r2, 1e-10 * std::max(1.0, std::abs(r2)));
            }
        }
    }
}

TEST(Hyp2f1, UnitArgument) {
    // Gauss summation when c - a - b > 0.
    const double a = 0.3, b = 0.7, c = 2.5;
    const double gauss = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
    EXPECT_NEAR(hyp2f1(a, b, c, 1.0), gauss, 1e-12);
    EXPECT_THROW(hyp2f1(0.5, 0.5, 0.5, 1.5), InputError);
}

TEST(Gamma, RecursionAndPoles) {
    for (double x : {0.5, 1.0, 2.5, 7.25, 30.0}) EXPECT_NEAR(gamma_fn(x + 1.0) / (x * gamma_fn(x)), 1.0, 1e-13);
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(gamma_fn(-0.5), -2.0 * std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_THROW(gamma_fn(0.0), InputError);
    EXPECT_THROW(gamma_fn(-2.0), InputError);
}

TEST(SphereVolume, LowDimensions) {
    EXPECT_NEAR(sphere_volume(0), 2.0, 1e-15);
    EXPECT_NEAR(sphere_volume(1), 2.0 * std::numbers::pi, 1e-14);
    EXPECT_NEAR(sphere_volume(2), 4.0 * std::numbers::pi, 1e-14);
    EXPECT_NEAR(sphere_volume(3), 2.0 * std::numbers::pi * std::numbers::pi, 1e-13);
}

TEST(Constant, RadialIntegralOracles) {
    EXPECT_NEAR(c_radial_integral(2), std::numbers::pi / 4.0, 1e-14);
    EXPECT_NEAR(c_radial_integral(3), 1.0 - 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(c_radial_integral(4), 0.5 * (std::numbers::pi / 4.0 - 0.5), 1e-14);
}

TEST(Constant, ClosedFormAtTwo) {
    for (int kappa = 3; kappa <= 8; ++kappa) {
        const double closed = -std::numbers::pi / (2.0 * std::pow(4.0, kappa) * (kappa - 1));
        EXPECT_NEAR(c_constant(2, kappa).real(), closed, 1e-12 * std::abs(closed));
        EXPECT_NEAR(c_constant(2, kappa).imag(), 0.0, 1e-18);
        EXPECT_NEAR(std::abs(tube_flux_constant(2, kappa) - 2.0 * c_constant(2, kappa)), 0.0, 1e-15);
    }
    EXPECT_THROW(c_constant(2, 2), InputError);
    EXPECT_THROW(c_constant(1, 3), InputError);
}

TEST(Quadrature, GaussLegendreExactness) {
    for (int n : {1, 2, 5, 12, 24}) {
        const QuadratureRule r = gauss_legendre(n, -1.0, 2.0);
        for (int deg = 0; deg <= 2 * n - 1; ++deg) {
            double s = 0.0;
            for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
            const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
            EXPECT_NEAR(s, exact, 1e-12 * std::max(1.0, std::abs(exact))) << n << " " << deg;
        }
    }
}

TEST(Quadrature, GradedRuleIntegratesSingularWeight) {
    // int_0^1 x^{-1/2} dx = 2; the error sits in the innermost panel and
    // shrinks like the square root of its length.
    double last = 1.0;
    for (int panels : {10, 20, 40}) {
        const QuadratureRule r = graded_gauss_legendre(12, 0.0, 1.0, panels, 0.3);
        double s = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] / std::sqrt(r.nodes[i]);
        const double err = std::abs(s - 2.0);
        EXPECT_LT(err, 0.2 * last) << panels;
        last = err;
    }
    EXPECT_LT(last, 1e-9);
}

TEST(Quadrature, Adaptive) {
    const QuadResult q = adaptive_gauss_legendre([](double x) { return std::exp(-x * x); }, 0.0, 3.0, 1e-13);
    EXPECT_NEAR(q.value, std::sqrt(std::numbers::pi) / 2.0 * std::erf(3.0), 1e-13);
}
