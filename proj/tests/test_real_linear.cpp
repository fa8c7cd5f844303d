#include <gtest/gtest.h>

#include <elko/real_linear.hpp>
#include <elko/sampling.hpp>

using namespace elko;

TEST(RealLinear, IdentityLeavesSpinorAlone) {
    Sampler s(1);
    const Spinor psi = s.spinor();
    EXPECT_EQ((rl_apply(RealLinearOp::identity(), psi) - psi).norm(), 0.0);
}

TEST(RealLinear, ConjugationConjugates) {
    Sampler s(2);
    const Spinor psi = s.spinor();
    EXPECT_EQ((rl_apply(RealLinearOp::conjugation(), psi) - psi.conjugate()).norm(), 0.0);
}

TEST(RealLinear, ComplexScalarPassesThroughWithSignFlipOnAntilinearPart) {
    Sampler s(3);
    for (int t = 0; t < 20; ++t) {
        const RealLinearOp op = s.op();
        const Spinor psi = s.spinor();
        const Spinor lhs = rl_apply(op, I_unit * psi);
        const Spinor rhs = I_unit * rl_apply(RealLinearOp{op.A, -op.B}, psi);
        EXPECT_LE((lhs - rhs).norm(), 1e-13);
    }
}

TEST(RealLinear, AdditiveAndRealHomogeneous) {
    Sampler s(4);
    const RealLinearOp op = s.op();
    const Spinor a = s.spinor(), b = s.spinor();
    EXPECT_LE((rl_apply(op, a + b) - rl_apply(op, a) - rl_apply(op, b)).norm(), 1e-13);
    EXPECT_LE((rl_apply(op, 2.5 * a) - 2.5 * rl_apply(op, a)).norm(), 1e-13);
}

TEST(RealLinear, DoubleConjugationIsIdentity) {
    const RealLinearOp k = RealLinearOp::conjugation();
    const RealLinearOp kk = rl_compose(k, k);
    EXPECT_EQ((kk.A - Mat4::Identity()).norm(), 0.0);
    EXPECT_EQ(kk.B.norm(), 0.0);
}

TEST(RealLinear, ComposeWithIdentity) {
    Sampler s(5);
    const RealLinearOp f = s.op();
    const RealLinearOp g = rl_compose(f, RealLinearOp::identity());
    EXPECT_EQ((g.A - f.A).norm(), 0.0);
    EXPECT_EQ((g.B - f.B).norm(), 0.0);
}

TEST(RealLinear, CompositionMatchesSequentialApplication) {
    Sampler s(6);
    const RealLinearOp f = s.op(), g = s.op();
    const RealLinearOp fg = rl_compose(f, g);
    for (int t = 0; t < 100; ++t) {
        const Spinor psi = s.spinor();
        const Spinor lhs = rl_apply(fg, psi);
        EXPECT_LE((lhs - rl_apply(f, rl_apply(g, psi))).norm(), 1e-12 * (1.0 + lhs.norm()));
    }
}

TEST(RealLinear, RealRepresentationActsOnRealAndImaginaryParts) {
    Sampler s(7);
    const RealLinearOp op = s.op();
    const Spinor psi = s.spinor();
    Eigen::Matrix<double, 8, 1> v;
    v << psi.real(), psi.imag();
    const Eigen::Matrix<double, 8, 1> w = real_representation(op) * v;
    const Spinor out = rl_apply(op, psi);
    EXPECT_LE((w.head<4>() - out.real()).norm(), 1e-13);
    EXPECT_LE((w.tail<4>() - out.imag()).norm(), 1e-13);
    const RealLinearOp back = from_real_representation(real_representation(op));
    EXPECT_LE((back.A - op.A).norm() + (back.B - op.B).norm(), 1e-14);
}

TEST(RealLinear, InvertScalar) {
    const RealLinearOp inv = rl_invert(RealLinearOp::scalar(2.0));
    EXPECT_LE((inv.A - 0.5 * Mat4::Identity()).norm(), 1e-15);
    EXPECT_LE(inv.B.norm(), 1e-15);
}

TEST(RealLinear, ConjugationIsItsOwnInverse) {
    const RealLinearOp inv = rl_invert(RealLinearOp::conjugation());
    EXPECT_LE(inv.A.norm(), 1e-15);
    EXPECT_LE((inv.B - Mat4::Identity()).norm(), 1e-15);
}

TEST(RealLinear, InverseRoundTripBothSides) {
    Sampler s(8);
    for (int k = 0; k < 5; ++k) {
        const RealLinearOp op = s.op();
        const RealLinearOp inv = rl_invert(op);
        for (int t = 0; t < 100; ++t) {
            const Spinor psi = s.spinor();
            EXPECT_LE((rl_apply(inv, rl_apply(op, psi)) - psi).norm(), 1e-12 * psi.norm());
            EXPECT_LE((rl_apply(op, rl_apply(inv, psi)) - psi).norm(), 1e-12 * psi.norm());
        }
    }
}

TEST(RealLinear, SingularInverseReportsConditionNumber) {
    // psi -> psi + conj(psi) kills the imaginary part
    const RealLinearOp op{Mat4::Identity(), Mat4::Identity()};
    try {
        rl_invert(op);
        FAIL() << "expected singular_operator";
    } catch (const singular_operator& e) {
        EXPECT_GT(e.condition, 1e12);
    }
}

TEST(RealLinear, AdjointOfLinearOperatorIsConjugateTranspose) {
    Sampler s(9);
    const Mat4 a = s.matrix();
    for (auto c : {AdjointConvention::real_pairing, AdjointConvention::formal_dagger}) {
        const RealLinearOp adj = rl_adjoint(RealLinearOp::linear(a), c);
        EXPECT_EQ((adj.A - a.adjoint()).norm(), 0.0);
        EXPECT_EQ(adj.B.norm(), 0.0);
    }
}

TEST(RealLinear, ConjugationIsSelfAdjointUnderRealPairing) {
    const RealLinearOp adj = rl_adjoint(RealLinearOp::conjugation(), AdjointConvention::real_pairing);
    EXPECT_EQ(adj.A.norm(), 0.0);
    EXPECT_EQ((adj.B - Mat4::Identity()).norm(), 0.0);
    Sampler s(10);
    const Spinor phi = s.spinor(), psi = s.spinor();
    EXPECT_NEAR(real_pairing(phi, psi.conjugate()), real_pairing(psi, phi.conjugate()), 1e-13);
}

TEST(RealLinear, RealPairingAdjointSatisfiesPairingIdentity) {
    Sampler s(11);
    for (int t = 0; t < 50; ++t) {
        const RealLinearOp op = s.op();
        const Spinor phi = s.spinor(), psi = s.spinor();
        const RealLinearOp adj = rl_adjoint(op);
        EXPECT_NEAR(real_pairing(phi, rl_apply(op, psi)), real_pairing(rl_apply(adj, phi), psi), 1e-11);
    }
}

TEST(RealLinear, FormalDaggerFailsPairingIdentityForAntilinearContent) {
    Sampler s(12);
    const RealLinearOp op{Mat4::Zero(), s.matrix()};
    const Spinor phi = s.spinor(), psi = s.spinor();
    const RealLinearOp adj = rl_adjoint(op, AdjointConvention::formal_dagger);
    EXPECT_GT(std::abs(real_pairing(phi, rl_apply(op, psi)) - real_pairing(rl_apply(adj, phi), psi)), 1e-3);
}

TEST(RealLinear, AdjointReversesComposition) {
    Sampler s(13);
    for (int t = 0; t < 20; ++t) {
        const RealLinearOp f = s.op(), g = s.op();
        const RealLinearOp lhs = rl_adjoint(rl_compose(f, g));
        const RealLinearOp rhs = rl_compose(rl_adjoint(g), rl_adjoint(f));
        EXPECT_LE((lhs.A - rhs.A).norm() + (lhs.B - rhs.B).norm(), 1e-12);
        const RealLinearOp twice = rl_adjoint(rl_adjoint(f));
        EXPECT_LE((twice.A - f.A).norm() + (twice.B - f.B).norm(), 1e-14);
    }
}

TEST(RowFunctionalTest, PullbackThroughOperatorMatchesEvaluation) {
    Sampler s(14);
    const RowFunctional r{s.row(), s.row()};
    const RealLinearOp op = s.op();
    const RowFunctional pulled = r * op;
    for (int t = 0; t < 20; ++t) {
        const Spinor v = s.spinor();
        EXPECT_LE(std::abs(pulled(v) - r(rl_apply(op, v))), 1e-12 * (1.0 + std::abs(pulled(v))));
    }
}

TEST(RowFunctionalTest, PlainRowStaysPlainThroughLinearOperators) {
    Sampler s(15);
    const RowFunctional r = RowFunctional::row(s.row()) * RealLinearOp::linear(s.matrix());
    EXPECT_TRUE(r.is_row_spinor());
}
