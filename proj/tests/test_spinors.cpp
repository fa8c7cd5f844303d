#include <gtest/gtest.h>

#include <elko/sampling.hpp>
#include <elko/spinors.hpp>

using namespace elko;

namespace {

// Components written out from the half-angle formulas, independent of the library's construction.
Spinor hand_elko(const ElkoLabel& l, double th, double ph, double m) {
    const double r = std::sqrt(m), c = std::cos(th / 2), s = std::sin(th / 2);
    const cplx em = std::polar(1.0, -ph / 2), ep = std::polar(1.0, ph / 2);
    const double sign = l.conjugacy == Conjugacy::S ? 1.0 : -1.0;
    Spinor v;
    if (l.pair == HelicityPair::minus_plus)
        v << sign * r * (-I_unit * s * em), sign * r * (I_unit * c * ep), r * c * em, r * s * ep;
    else
        v << sign * r * (-I_unit * c * em), sign * r * (-I_unit * s * ep), -r * s * em, r * c * ep;
    return v;
}

} // namespace

TEST(RestWeyl, PositiveHelicityAtPole) {
    const Vec2 v = rest_weyl(Helicity::plus, 0.0, 0.0, 1.0);
    EXPECT_NEAR(std::abs(v(0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v(1)), 0.0, 1e-15);
}

TEST(RestWeyl, HelicityEigenvaluesAndOrthogonality) {
    Sampler s(21);
    for (int t = 0; t < 50; ++t) {
        const double th = s.angle_theta(), ph = s.angle_phi(), m = s.uniform(0.5, 3.0);
        const Mat2 h = sigma_dot(direction(th, ph));
        const Vec2 up = rest_weyl(Helicity::plus, th, ph, m), dn = rest_weyl(Helicity::minus, th, ph, m);
        EXPECT_LE((h * up - up).norm(), 1e-12);
        EXPECT_LE((h * dn + dn).norm(), 1e-12);
        EXPECT_LE(std::abs(up.dot(dn)), 1e-12);
        EXPECT_NEAR(up.squaredNorm(), m, 1e-12);
    }
}

TEST(RestWeyl, RejectsNonPositiveMass) {
    EXPECT_THROW(rest_weyl(Helicity::plus, 0.1, 0.2, 0.0), argument_error);
    EXPECT_THROW(elko_rest({}, 0.1, 0.2, -1.0), argument_error);
}

TEST(ElkoRest, SelfConjugateMinusPlusAtPole) {
    const ElkoSpinor e = elko_rest({Conjugacy::S, HelicityPair::minus_plus}, 0.0, 0.0, 1.0);
    Spinor expected;
    expected << 0.0, I_unit, 1.0, 0.0;
    EXPECT_LE((e.value - expected).norm(), 1e-15);
}

TEST(ElkoRest, MatchesHandSubstitution) {
    Sampler s(22);
    for (int t = 0; t < 20; ++t) {
        const double th = s.angle_theta(), ph = s.angle_phi(), m = s.uniform(0.5, 3.0);
        for (const auto& l : ElkoLabel::all())
            EXPECT_LE((elko_rest(l, th, ph, m).value - hand_elko(l, th, ph, m)).norm(), 1e-13);
    }
}

TEST(ElkoRest, UpperBlockCarriesOppositeHelicity) {
    Sampler s(23);
    for (int t = 0; t < 20; ++t) {
        const double th = s.angle_theta(), ph = s.angle_phi();
        const Mat2 h = sigma_dot(direction(th, ph));
        for (const auto& l : ElkoLabel::all()) {
            const Spinor v = elko_rest(l, th, ph, 1.0).value;
            const double lower_sign = l.pair == HelicityPair::minus_plus ? 1.0 : -1.0;
            EXPECT_LE((h * v.tail<2>() - lower_sign * v.tail<2>()).norm(), 1e-12);
            EXPECT_LE((h * v.head<2>() + lower_sign * v.head<2>()).norm(), 1e-12);
        }
    }
}

TEST(ChargeConjugation, EigenvaluesForAllLabels) {
    Sampler s(24);
    for (int t = 0; t < 50; ++t) {
        const FourMomentum k = s.on_shell(s.uniform(0.5, 2.0));
        const double th = s.angle_theta(), ph = s.angle_phi();
        for (const auto& l : ElkoLabel::all()) {
            const Spinor v = make_elko(l, th, ph, k).value;
            const double ev = l.conjugacy == Conjugacy::S ? 1.0 : -1.0;
            EXPECT_LE((charge_conjugate(v) - ev * v).norm(), 1e-10 * v.norm());
            if (l.conjugacy == Conjugacy::S) EXPECT_LE((-gamma(2) * v.conjugate() - v).norm(), 1e-10 * v.norm());
        }
    }
}

TEST(ChargeConjugation, InvolutionAndBlockForm) {
    Sampler s(25);
    for (int t = 0; t < 50; ++t) {
        const Spinor psi = s.spinor();
        EXPECT_LE((charge_conjugate(charge_conjugate(psi)) - psi).norm(), 1e-14);
        EXPECT_LE((charge_conjugate_block(psi) - charge_conjugate(psi)).norm(), 1e-14);
    }
}

TEST(Boost, RestMomentumGivesIdentity) {
    EXPECT_LE((boost_matrix(FourMomentum::at_rest(1.3)) - Mat4::Identity()).norm(), 1e-15);
}

TEST(Boost, UnitDeterminantAndPreservesDiracAdjointForm) {
    Sampler s(26);
    for (int t = 0; t < 50; ++t) {
        const Mat4 b = boost_matrix(s.on_shell(s.uniform(0.5, 2.0)));
        EXPECT_NEAR(std::abs(b.determinant() - 1.0), 0.0, 1e-10);
        EXPECT_LE((b.adjoint() * gamma(0) * b - gamma(0)).norm(), 1e-10);
    }
}

TEST(Boost, RejectsOffShellMomentum) {
    FourMomentum k = FourMomentum::on_shell_with(1.0, {0.3, 0.0, 0.1});
    k.E += 0.01;
    EXPECT_THROW(boost_matrix(k), precondition_error);
    EXPECT_THROW(boost_matrix(FourMomentum::off_shell(0.1, {1.0, 0.0, 0.0})), precondition_error);
}

TEST(Boost, AxisAlignedMatchesScalarFactor) {
    Sampler s(27);
    for (int t = 0; t < 25; ++t) {
        const double th = s.angle_theta(), ph = s.angle_phi(), m = s.uniform(0.5, 2.0);
        const double mag = s.uniform(0.0, 5.0);
        const auto n = direction(th, ph);
        const FourMomentum k = FourMomentum::on_shell_with(m, {mag * n[0], mag * n[1], mag * n[2]});
        const double pref = std::sqrt((k.E + m) / (2 * m));
        for (const auto& l : ElkoLabel::all()) {
            const double sign = l.pair == HelicityPair::minus_plus ? -1.0 : 1.0;
            const Spinor expected = pref * (1.0 + sign * mag / (k.E + m)) * elko_rest(l, th, ph, m).value;
            EXPECT_LE((make_elko(l, th, ph, k).value - expected).norm(), 1e-10);
        }
    }
}

TEST(Boost, ChiRelatesTheWeylHalves) {
    Sampler s(28);
    const FourMomentum k = s.on_shell(1.2);
    const Mat4 b = boost_matrix(k);
    const Mat2 chi = (k.E * Mat2::Identity() + sigma_dot(k.p)) / k.m;
    EXPECT_LE((chi * b.block<2, 2>(2, 2) - b.block<2, 2>(0, 0)).norm(), 1e-12);
}

TEST(ElkoDual, GoldenRestNorms) {
    // brute-force evaluation at m = 1, p = 0; independent of the angles
    const double golden[4] = {-2.0, -2.0, 2.0, 2.0};
    Sampler s(29);
    for (int t = 0; t < 10; ++t) {
        const double th = s.angle_theta(), ph = s.angle_phi();
        for (int i = 0; i < 4; ++i) {
            const auto l = ElkoLabel::all()[i];
            EXPECT_NEAR(std::abs(dual_norm(elko_rest(l, th, ph, 1.0)) - golden[i]), 0.0, 1e-12);
            // same value from the hand-written components
            const double sgn = l.pair == HelicityPair::minus_plus ? 1.0 : -1.0;
            const cplx hand =
                ((sgn * I_unit) * hand_elko(l.partner(), th, ph, 1.0).adjoint() * gamma(0) * hand_elko(l, th, ph, 1.0))(0, 0);
            EXPECT_NEAR(std::abs(hand - golden[i]), 0.0, 1e-12);
        }
    }
}

TEST(ElkoDual, RealBoostInvariantWithTwoPositiveTwoNegative) {
    Sampler s(30);
    for (int t = 0; t < 50; ++t) {
        const double m = s.uniform(0.5, 2.0), th = s.angle_theta(), ph = s.angle_phi();
        const FourMomentum k = s.on_shell(m);
        int pos = 0, neg = 0;
        for (const auto& l : ElkoLabel::all()) {
            const cplx rest = dual_norm(elko_rest(l, th, ph, m));
            const cplx moving = dual_norm(make_elko(l, th, ph, k));
            EXPECT_LE(std::abs(moving.imag()), 1e-10);
            EXPECT_LE(std::abs(moving - rest), 1e-10 * std::max(1.0, m));
            EXPECT_NEAR(std::abs(moving), 2.0 * m, 1e-10 * std::max(1.0, m));
            (moving.real() > 0 ? pos : neg)++;
        }
        EXPECT_EQ(pos, 2);
        EXPECT_EQ(neg, 2);
    }
}

TEST(Wigner, ConjugatesRotationGenerators) {
    const Mat2 f = wigner_phi();
    for (int k = 1; k <= 3; ++k) {
        const Mat2 j = 0.5 * pauli(k);
        EXPECT_LE((f * j * f.inverse() + j.conjugate()).norm(), 1e-15);
    }
}

TEST(FourMomentumTest, OnShellDispersion) {
    Sampler s(31);
    for (int t = 0; t < 50; ++t) {
        const double m = s.uniform(0.1, 3.0);
        const FourMomentum k = s.on_shell(m);
        EXPECT_LE(k.dispersion_residual(), 1e-12 * std::max(1.0, k.E * k.E));
        EXPECT_TRUE(k.on_shell);
    }
}
