#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "mapping.hpp"
#include "real_linear.hpp"
#include "spinors.hpp"

namespace elko {

inline constexpr double kPropagatorTolerance = 1e-12;

inline Mat4 dirac_op(const FourMomentum& p, double m_D) { return slash(p) - m_D * Mat4::Identity(); }

inline Mat4 dirac_op_inverse(const FourMomentum& p, double m_D) {
    const double p2 = p.square();
    const double den = p2 - m_D * m_D;
    const double scale = std::max({1.0, std::abs(p2), m_D * m_D});
    if (std::abs(den) <= kPropagatorTolerance * scale) {
        std::ostringstream os;
        os << "Dirac propagator is singular: p^2 - m_D^2 = " << den;
        throw singular_propagator(os.str());
    }
    return (slash(p) + m_D * Mat4::Identity()) / den;
}

// The map M keeps its own momentum; p is the plane-wave momentum the operators act at.
struct ThetaContext {
    RealLinearOp M;
    RealLinearOp M_inv;
    double m = 1.0;
    double m_D = 1.0;
    FourMomentum p;
    AdjointConvention convention = AdjointConvention::real_pairing;

    static ThetaContext make(const MappingOperator& map, double m, double m_D, const FourMomentum& p,
                             AdjointConvention convention = AdjointConvention::real_pairing) {
        return make(map.realized, map.inverse, m, m_D, p, convention);
    }

    static ThetaContext make(const RealLinearOp& M, const RealLinearOp& M_inv, double m, double m_D,
                             const FourMomentum& p, AdjointConvention convention) {
        if (p.p[1] != 0.0) throw precondition_error("theta sector is restricted to p_y = 0");
        ThetaContext c;
        c.M = M;
        c.M_inv = M_inv;
        c.m = m;
        c.m_D = m_D;
        c.p = p;
        c.convention = convention;
        return c;
    }

    ThetaContext at(const FourMomentum& q) const {
        ThetaContext c = *this;
        if (q.p[1] != 0.0) throw precondition_error("theta sector is restricted to p_y = 0");
        c.p = q;
        return c;
    }
};

// g^0 M^dagger i g^0 M
inline RealLinearOp mass_kernel(const RealLinearOp& M, AdjointConvention convention) {
    const RealLinearOp g0 = RealLinearOp::linear(gamma(0));
    return g0 * rl_adjoint(M, convention) * RealLinearOp::scalar(I_unit) * g0 * M;
}

inline RealLinearOp mass_kernel(const ThetaContext& ctx) { return mass_kernel(ctx.M, ctx.convention); }

// box -> -p^2 on e^{-ip.x}
inline RealLinearOp slash_theta(const ThetaContext& ctx) {
    return mass_kernel(ctx) * ctx.M_inv * RealLinearOp::scalar(-ctx.p.square()) * rl_conj(ctx.M) *
           RealLinearOp::scalar(I_unit);
}

inline RealLinearOp p_operator(const ThetaContext& ctx, const RealLinearOp& candidate) {
    const RealLinearOp g0 = RealLinearOp::linear(gamma(0));
    return g0 * rl_adjoint(ctx.M_inv, ctx.convention) * g0 * candidate * ctx.M_inv +
           RealLinearOp::scalar(-ctx.p.square());
}

// -(m^2/2) psibar (g^0 M^dagger i g^0 M) D^-1
inline RowFunctional theta_psi_bar(const ThetaContext& ctx, const RowSpinor& psi_bar) {
    const RealLinearOp k = mass_kernel(ctx) * RealLinearOp::linear(dirac_op_inverse(ctx.p, ctx.m_D));
    return cplx(-0.5 * ctx.m * ctx.m) * (RowFunctional::row(psi_bar) * k);
}

// box M^* inverted: (-p^2 M^*)^-1
inline RealLinearOp box_conj_M_inverse(const ThetaContext& ctx) {
    const double p2 = ctx.p.square();
    if (std::abs(p2) <= kPropagatorTolerance * std::max(1.0, ctx.p.E * ctx.p.E))
        throw singular_operator("box of M* is not invertible on the light cone", std::numeric_limits<double>::infinity());
    return rl_invert(RealLinearOp::scalar(-ctx.p.square()) * rl_conj(ctx.M));
}

// the form written through the constraint operator
inline RealLinearOp constraint_factor(const ThetaContext& ctx) {
    return slash_theta(ctx) * box_conj_M_inverse(ctx) * ctx.M;
}

inline RowFunctional theta_psi_bar_constraint_form(const ThetaContext& ctx, const RowSpinor& psi_bar) {
    const Mat4 dinv = dirac_op_inverse(ctx.p, ctx.m_D);
    const RealLinearOp k = constraint_factor(ctx) * RealLinearOp::linear(dinv);
    return cplx(0.0, 0.5 * ctx.m * ctx.m) * (RowFunctional::row(psi_bar) * k);
}

inline Spinor theta_psi(const ThetaContext& ctx, const Spinor& psi) {
    const Mat4 dinv = dirac_op_inverse(ctx.p, ctx.m_D);
    return -dinv * (0.5 * ctx.m * ctx.m * rl_apply(mass_kernel(ctx), psi));
}

// with the stray psibar factor of the printed version dropped
inline Spinor theta_psi_constraint_form(const ThetaContext& ctx, const Spinor& psi) {
    const Mat4 dinv = dirac_op_inverse(ctx.p, ctx.m_D);
    return cplx(0.0, 0.5 * ctx.m * ctx.m) * (dinv * rl_apply(constraint_factor(ctx), psi));
}

struct ChainSweepEntry {
    AdjointConvention convention;
    DualSignRule rule;
    cplx value2;
    cplx value3;
    double residual23 = 0.0;
};

struct MassTermChain {
    cplx value1, value2, value3;
    double residual12 = 0.0;
    double residual23 = 0.0;
    double lambda_mismatch = 0.0;
    std::vector<ChainSweepEntry> sweep;
};

namespace detail {

// -(m^2/2) (M^-1 lambda)^dagger g^0 . (g^0 M^dagger i g^0 M) M^-1 lambda
inline cplx chain_value2(const ThetaContext& ctx, const Spinor& lambda, AdjointConvention convention) {
    const Spinor psi = rl_apply(ctx.M_inv, lambda);
    const RowSpinor row = psi.adjoint() * gamma(0);
    const Spinor right = rl_apply(mass_kernel(ctx.M, convention) * ctx.M_inv, lambda);
    return -0.5 * ctx.m * ctx.m * (row * right)(0, 0);
}

} // namespace detail

inline MassTermChain mass_term_chain(const ThetaContext& ctx, const Spinor& psi, const ElkoSpinor& lambda) {
    MassTermChain c;
    c.lambda_mismatch = (rl_apply(ctx.M, psi) - lambda.value).norm();
    const RowSpinor psi_bar = psi.adjoint() * gamma(0);
    c.value1 = theta_psi_bar(ctx, psi_bar)(dirac_op(ctx.p, ctx.m_D) * psi);
    c.value2 = detail::chain_value2(ctx, lambda.value, ctx.convention);
    c.value3 = -0.5 * ctx.m * ctx.m * dual_norm(lambda, DualSignRule::helicity_label);
    c.residual12 = std::abs(c.value1 - c.value2);
    c.residual23 = std::abs(c.value2 - c.value3);
    for (auto conv : {AdjointConvention::real_pairing, AdjointConvention::formal_dagger}) {
        for (auto rule : {DualSignRule::helicity_label, DualSignRule::conjugacy}) {
            ChainSweepEntry e{conv, rule, detail::chain_value2(ctx, lambda.value, conv),
                              -0.5 * ctx.m * ctx.m * dual_norm(lambda, rule), 0.0};
            e.residual23 = std::abs(e.value2 - e.value3);
            c.sweep.push_back(e);
        }
    }
    return c;
}

} // namespace elko
