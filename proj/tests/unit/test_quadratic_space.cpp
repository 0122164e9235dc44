#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "orthoharm/domain.hpp"
#include "orthoharm/errors.hpp"
#include "orthoharm/quadratic_space.hpp"

using namespace orthoharm;

namespace {

QuadraticLattice u_plus_u() { return QuadraticLattice::from_ints({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }

QuadraticLattice u_plus_2() { return QuadraticLattice::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}); }

}  // namespace

TEST(Rational, ParsesLiterals) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational(" -3/6 "), Rational(-1, 2));
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("x"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, CompareWithIntegers) {
    EXPECT_TRUE(Rational(0) == 0);
    EXPECT_TRUE(0 == Rational(0));
    EXPECT_TRUE(Rational(1, 2) != 0);
    EXPECT_FALSE(Rational(4, 2) != 2);
}

TEST(RationalMatrix, InverseRoundTrip) {
    RationalMatrix m(3, 3);
    m(0, 1) = m(1, 0) = 1;
    m(2, 2) = 2;
    m(0, 2) = 3;
    m(2, 0) = 3;
    const RationalMatrix inv = m.inverse();
    EXPECT_EQ(m * inv, RationalMatrix::identity(3));
    EXPECT_EQ(inv * m, RationalMatrix::identity(3));
    RationalMatrix singular(2, 2);
    singular(0, 0) = 1;
    EXPECT_THROW(singular.inverse(), InputError);
}

TEST(RationalMatrix, Nullspace) {
    RationalMatrix m(1, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    const auto ns = m.nullspace();
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_EQ(m * v, std::vector<Rational>{Rational(0)});
}

TEST(QuadraticLattice, RejectsBadGram) {
    EXPECT_THROW(QuadraticLattice::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), InputError);    // odd diagonal
    EXPECT_THROW(QuadraticLattice::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}), InputError);   // signature (1, 2)
    EXPECT_THROW(QuadraticLattice::from_ints({{0, 1, 0}, {2, 0, 0}, {0, 0, 2}}), InputError);    // not symmetric
    EXPECT_THROW(QuadraticLattice::from_ints({{0, 1}, {1, 0}}), InputError);                     // too small
    EXPECT_THROW(QuadraticLattice::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), InputError);    // degenerate
}

TEST(QuadraticLattice, SignatureAndDual) {
    const QuadraticLattice L = u_plus_2();
    EXPECT_EQ(L.signature(), std::make_pair(2, 1));
    EXPECT_EQ(L.n(), 1);
    LatticeVector half({Rational(0), Rational(0), Rational(1, 2)});
    EXPECT_TRUE(L.in_dual(half));
    EXPECT_FALSE(L.contains(half));
    LatticeVector third({Rational(0), Rational(0), Rational(1, 3)});
    EXPECT_FALSE(L.in_dual(third));
    EXPECT_EQ(L.q(LatticeVector::from_ints({1, 1, 1})), Rational(2));
}

TEST(QuadraticLattice, EichlerAndReflectionAreIsometries) {
    const QuadraticLattice L = u_plus_u();
    const LatticeVector e = LatticeVector::from_ints({1, 0, 0, 0});
    const Isometry E = eichler_transformation(L, e, LatticeVector::from_ints({0, 0, 1, 2}));
    EXPECT_TRUE(preserves_form(L, E.matrix));
    EXPECT_TRUE(preserves_lattice(E.matrix));
    const Isometry R = reflection(L, LatticeVector::from_ints({1, -1, 0, 0}));
    EXPECT_TRUE(preserves_form(L, R.matrix));
    EXPECT_EQ(R.matrix * R.matrix, RationalMatrix::identity(4));
    EXPECT_THROW(reflection(L, LatticeVector::from_ints({1, 0, 0, 0})), InputError);
}

TEST(WittFrame, RelationsHold) {
    for (const QuadraticLattice& L : {u_plus_2(), u_plus_u()}) {
        const int d = L.dim();
        LatticeVector e = LatticeVector::zero(d), ep = LatticeVector::zero(d);
        e.coords[0] = 1;
        ep.coords[1] = 1;
        const WittFrame F(L, e, ep);
        EXPECT_LT(F.residual(), 1e-12);
        for (int i = 0; i < d; ++i) {
            RVec v = RVec::Zero(d);
            v(i) = 1.0;
            for (int j = 0; j < d; ++j) {
                RVec w = RVec::Zero(d);
                w(j) = 1.0;
                const double lattice_pairing = v.dot(F.gram() * w);
                EXPECT_NEAR(frame_pairing(F.to_frame(v), F.to_frame(w)), lattice_pairing, 1e-12);
            }
        }
    }
}

TEST(WittFrame, RejectsBadInput) {
    const QuadraticLattice L = u_plus_u();
    EXPECT_THROW(WittFrame(L, LatticeVector::from_ints({1, 1, 0, 0}), LatticeVector::from_ints({0, 1, 0, 0})), InputError);
    EXPECT_THROW(WittFrame(L, LatticeVector::from_ints({1, 0, 0, 0}), LatticeVector::from_ints({1, 0, 0, 0})), InputError);
}

// Brute force over a box that contains every vector with majorant <= B.
TEST(Enumeration, MatchesBruteForce) {
    const QuadraticLattice L = u_plus_u();
    const WittFrame F(L, LatticeVector::from_ints({1, 0, 0, 0}), LatticeVector::from_ints({0, 1, 0, 0}));
    RVec x(2), y(2);
    x << 0.3, -0.1;
    y << 1.3, 0.4;
    const DomainPoint Z = DomainPoint::from_xy(x, y);
    const Eigen::MatrixXd G = majorant_gram(F, Z);
    const double min_ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(G).eigenvalues().minCoeff();
    for (int m : {1, 2, -1}) {
        const double B = 12.0;
        const int R = static_cast<int>(std::ceil(std::sqrt(B / min_ev))) + 1;
        std::set<std::vector<long long>> brute;
        std::vector<long long> v(4);
        for (v[0] = -R; v[0] <= R; ++v[0])
            for (v[1] = -R; v[1] <= R; ++v[1])
                for (v[2] = -R; v[2] <= R; ++v[2])
                    for (v[3] = -R; v[3] <= R; ++v[3]) {
                        const LatticeVector lv = LatticeVector::from_ints(v);
                        if (L.q(lv) != m) continue;
                        if (majorant(F.to_frame(lv), Z) <= B) brute.insert(v);
                    }
        const auto found = enumerate_majorant(L, F, Z, Rational(m), LatticeVector::zero(4), B);
        std::set<std::vector<long long>> got;
        for (const auto& lv : found) {
            std::vector<long long> c;
            for (const auto& r : lv.coords) c.push_back(r.numerator());
            got.insert(c);
        }
        EXPECT_EQ(got, brute) << "m = " << m;
        EXPECT_FALSE(brute.empty());
        EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
    }
}

TEST(Enumeration, WorkerCountDoesNotMatter) {
    const QuadraticLattice L = u_plus_u();
    const WittFrame F(L, LatticeVector::from_ints({1, 0, 0, 0}), LatticeVector::from_ints({0, 1, 0, 0}));
    RVec x(2), y(2);
    x << 0.1, 0.2;
    y << 1.1, -0.3;
    const DomainPoint Z = DomainPoint::from_xy(x, y);
    const auto a = enumerate_majorant(L, F, Z, Rational(1), LatticeVector::zero(4), 40.0, {1});
    const auto b = enumerate_majorant(L, F, Z, Rational(1), LatticeVector::zero(4), 40.0, {3});
    EXPECT_EQ(a, b);
}

TEST(Enumeration, NonzeroCoset) {
    const QuadraticLattice L = u_plus_2();
    const WittFrame F(L, LatticeVector::from_ints({1, 0, 0}), LatticeVector::from_ints({0, 1, 0}));
    RVec x(1), y(1);
    x << 0.2;
    y << 1.4;
    const DomainPoint Z = DomainPoint::from_xy(x, y);
    const LatticeVector coset({Rational(0), Rational(0), Rational(1, 2)});
    const auto found = enumerate_majorant(L, F, Z, Rational(1, 4), coset, 20.0);
    ASSERT_FALSE(found.empty());
    for (const auto& v : found) {
        EXPECT_EQ(L.q(v), Rational(1, 4));
        EXPECT_TRUE((v - coset).is_integral());
    }
}
