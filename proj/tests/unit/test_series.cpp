#include <gtest/gtest.h>

#include "orthoharm/errors.hpp"
#include "orthoharm/series.hpp"
#include "orthoharm/tools/config.hpp"

using namespace orthoharm;

namespace {

SeriesSpec spec_for(int n, Rational m, int kappa, double bound, int workers = 1) {
    const auto ctx = tools::build_context(tools::standard_lattice(n));
    return SeriesSpec{ctx, ctx->cosets.front(), m, kappa, bound, workers};
}

DomainPoint sample_point(int n) {
    RVec x(n), y(n);
    for (int j = 0; j < n; ++j) {
        x(j) = 0.17 * (j + 1);
        y(j) = j == 0 ? 1.3 : 0.21;
    }
    return DomainPoint::from_xy(x, y);
}

}  // namespace

TEST(Series, EqualsDirectSumOverEnumeratedVectors) {
    const SeriesSpec spec = spec_for(2, Rational(1), 4, 30.0);
    const DomainPoint Z = sample_point(2);
    const auto vecs = enumerate_majorant(spec.context->lattice, spec.context->frame, Z, spec.m, spec.coset, spec.bound);
    cplx direct = 0.0;
    for (const auto& v : vecs) direct += std::pow(pair_psi(spec.context->frame.to_frame(v), Z), -spec.kappa);
    const SeriesValue s = eval_omega(spec, Z);
    EXPECT_EQ(s.count, vecs.size());
    EXPECT_LT(std::abs(s.value - direct), 1e-13 * (1.0 + std::abs(direct)));
    EXPECT_GT(s.tail, 0.0);
}

TEST(Series, OddWeightVanishesForTheZeroCoset) {
    const SeriesValue s = eval_omega(spec_for(1, Rational(1), 3, 30.0), sample_point(1));
    EXPECT_GT(s.count, 0u);
    EXPECT_LT(std::abs(s.value), 1e-15);
}

TEST(Series, DeterministicAcrossWorkers) {
    const DomainPoint Z = sample_point(2);
    const SeriesValue a = eval_omega(spec_for(2, Rational(2), 4, 60.0, 1), Z);
    const SeriesValue b = eval_omega(spec_for(2, Rational(2), 4, 60.0, 4), Z);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.count, b.count);
}

TEST(Series, DoublingWithinTail) {
    const DomainPoint Z = sample_point(2);
    for (double B : {10.0, 20.0, 40.0}) {
        const SeriesValue a = eval_omega(spec_for(2, Rational(1), 4, B), Z);
        const SeriesValue b = eval_omega(spec_for(2, Rational(1), 4, 2 * B), Z);
        EXPECT_LE(std::abs(b.value - a.value), 2.0 * a.tail) << "B = " << B;
    }
}

TEST(Series, ModularUnderGenerators) {
    const SeriesSpec spec = spec_for(2, Rational(1), 4, 40.0);
    const DomainPoint Z = sample_point(2);
    for (const Isometry& g : spec.context->group.generators) EXPECT_LT(modularity_defect(spec, Z, g), 1e-12);
}

TEST(Series, XiOfOmegaFieldIsOmega) {
    const SeriesSpec spec = spec_for(2, Rational(1), 4, 20.0);
    const DomainPoint Z = sample_point(2);
    const TruncatedSeries ts(spec, Z);
    EXPECT_LT(std::abs(xi_top(ts.Omega_field(), spec.kappa, Z) - ts.omega(Z).value), 1e-6);
}

TEST(Series, RejectsBadSpecs) {
    const DomainPoint Z = sample_point(2);
    EXPECT_THROW(eval_omega(spec_for(2, Rational(1), 2, 10.0), Z), InputError);
    EXPECT_THROW(eval_omega(spec_for(2, Rational(1), 4, -1.0), Z), InputError);
    EXPECT_THROW(eval_omega(spec_for(2, Rational(0), 4, 10.0), Z), InputError);
}

TEST(CompensatedSum, RecoversCancelledTerms) {
    CompensatedSum s;
    s.add(1e16);
    for (int i = 0; i < 10; ++i) s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), cplx(10.0, 0.0));
}
