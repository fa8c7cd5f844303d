#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "bilinears.hpp"
#include "lagrangian.hpp"
#include "mapping.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "spinors.hpp"
#include "theta.hpp"

namespace elko {

inline constexpr double kExactTolerance = 1e-13;
inline constexpr double kIntegralTolerance = 1e-8;
inline constexpr double kSurfacePresenceFloor = 1e-3;
inline constexpr int kSolverRunsPerClass = 30;

using SuiteFn = std::function<std::vector<CheckRecord>(const RunConfig&)>;

namespace suites {

// each suite draws from its own stream so --parallel cannot change the numbers
inline Sampler sampler_for(const RunConfig& cfg, int suite_index) {
    return Sampler(cfg.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(suite_index + 1)));
}

inline double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

inline std::vector<CheckRecord> algebra(const RunConfig& cfg) {
    Sampler s = sampler_for(cfg, 0);
    std::vector<CheckRecord> out;

    double anti = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4 a = gamma_lower(mu) * gamma_lower(nu) + gamma_lower(nu) * gamma_lower(mu);
            anti = std::max(anti, max_abs(a - 2.0 * metric(mu, nu) * Mat4::Identity()));
            const Mat4 b = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            anti = std::max(anti, max_abs(b - 2.0 * metric(mu, nu) * Mat4::Identity()));
        }
    out.push_back(check("algebra.anticommutator", "clifford anticommutator gamma_mu gamma_nu + gamma_nu gamma_mu = 2 eta",
                        anti, kExactTolerance));

    // rebuilt from the Pauli blocks, not from gamma()
    const Mat2 one = Mat2::Identity(), zero = Mat2::Zero();
    std::array<Mat4, 4> g;
    g[0] = blocks(zero, one, one, zero);
    for (int k = 1; k <= 3; ++k) g[k] = blocks(zero, -pauli(k), pauli(k), zero);
    const Mat4 product = -I_unit * g[0] * g[1] * g[2] * g[3];
    double g5 = max_abs(gamma(5) - product);
    g5 = std::max(g5, max_abs(gamma(5) - blocks(-one, zero, zero, one)));
    out.push_back(check("algebra.gamma5_product", "gamma5 = -i gamma^0 gamma^1 gamma^2 gamma^3 entrywise", g5,
                        kExactTolerance));

    const Mat4 lower_product = -I_unit * volume_element();
    out.push_back(check("algebra.lower_volume_element", "-i gamma_0 gamma_1 gamma_2 gamma_3 = diag(I, -I)",
                        max_abs(lower_product - blocks(one, zero, zero, -one)), kExactTolerance));

    double herm = max_abs(gamma(0).adjoint() - gamma(0));
    for (int k = 1; k <= 3; ++k) herm = std::max(herm, max_abs(gamma(k).adjoint() + gamma(k)));
    out.push_back(check("algebra.hermiticity", "gamma^0 hermitian, gamma^k antihermitian", herm, kExactTolerance));

    double roundtrip = 0.0, rev = 0.0, grades = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Mat4 a = s.matrix(), b = s.matrix();
        const double scale = a.norm() * b.norm();
        roundtrip = std::max(roundtrip, (reconstruct(multivector_decompose(a)) - a).norm() / a.norm());
        const Multivector ma = multivector_decompose(a), mb = multivector_decompose(b);
        const Mat4 lhs = reconstruct(reversion(multivector_decompose(a * b)));
        const Mat4 rhs = reconstruct(reversion(mb)) * reconstruct(reversion(ma));
        rev = std::max(rev, (lhs - rhs).norm() / scale);
        Multivector sum;
        for (int k = 0; k <= 4; ++k) sum = sum + grade_part(ma, k);
        grades = std::max(grades, (sum - ma).max_abs());
    }
    out.push_back(check("algebra.multivector_roundtrip", "16-element basis decomposition reconstructs the matrix",
                        roundtrip, cfg.tol));
    out.push_back(check("algebra.reversion_antiautomorphism", "reversion of a product reverses the factors", rev,
                        cfg.tol));
    out.push_back(check("algebra.grade_projection", "grade parts sum to the multivector", grades, cfg.tol));

    double hom = 0.0, inv = 0.0, adj = 0.0, pairing = 0.0;
    for (int t = 0; t < 50; ++t) {
        const RealLinearOp f = s.op(), h = s.op();
        const double scale = operator_norm(f) * operator_norm(h);
        hom = std::max(hom, (real_representation(f * h) - real_representation(f) * real_representation(h)).norm() / scale);
        const RealLinearOp id = f * rl_invert(f);
        inv = std::max(inv, std::max(max_abs(id.A - Mat4::Identity()), max_abs(id.B)));
        for (auto c : {AdjointConvention::real_pairing, AdjointConvention::formal_dagger}) {
            const RealLinearOp back = rl_adjoint(rl_adjoint(f, c), c);
            adj = std::max(adj, std::max(max_abs(back.A - f.A), max_abs(back.B - f.B)));
        }
        const Spinor phi = s.spinor(), psi = s.spinor();
        const double lhs = real_pairing(phi, rl_apply(f, psi));
        const double rhs = real_pairing(rl_apply(rl_adjoint(f, AdjointConvention::real_pairing), phi), psi);
        pairing = std::max(pairing, std::abs(lhs - rhs) / (scale / operator_norm(h) * phi.norm() * psi.norm()));
    }
    out.push_back(check("algebra.real_representation_homomorphism",
                        "8x8 real representation of a composition is the matrix product", hom, cfg.tol));
    out.push_back(check("algebra.real_linear_inverse", "composition with the inverse is the identity", inv, cfg.tol));
    out.push_back(check("algebra.adjoint_involution", "adjoint applied twice returns the operator", adj, cfg.tol));
    out.push_back(check("algebra.real_pairing_adjoint", "Re<phi, f psi> = Re<f^+ phi, psi> under the real pairing",
                        pairing, cfg.tol));
    return out;
}

inline std::vector<CheckRecord> elko(const RunConfig& cfg) {
    Sampler s = sampler_for(cfg, 1);
    std::vector<CheckRecord> out;

    Spinor pole;
    pole << 0.0, I_unit, 1.0, 0.0;
    out.push_back(check("elko.rest_pole_value", "S(-,+) at theta = phi = 0, m = 1 equals (0, i, 1, 0)",
                        (elko_rest({Conjugacy::S, HelicityPair::minus_plus}, 0.0, 0.0, 1.0).value - pole).norm(),
                        kExactTolerance));

    const double golden[4] = {-2.0, -2.0, 2.0, 2.0};
    double gold = 0.0;
    for (int i = 0; i < 4; ++i)
        gold = std::max(gold, std::abs(dual_norm(elko_rest(ElkoLabel::all()[i], 0.7, 1.1, 1.0)) - golden[i]));
    out.push_back(check("elko.dual_norm_rest_values", "dual norm at rest, m = 1: -2, -2, +2, +2 for S, S, A, A",
                        gold, 1e-12));

    double ceig = 0.0, maj = 0.0, im = 0.0, boost_inv = 0.0, pattern = 0.0;
    for (int t = 0; t < 50; ++t) {
        const double m = s.uniform(0.5, 2.0), th = s.angle_theta(), ph = s.angle_phi();
        const FourMomentum k = s.on_shell(m);
        int pos = 0, neg = 0;
        for (const auto& l : ElkoLabel::all()) {
            const Spinor v = make_elko(l, th, ph, k).value;
            const double ev = l.conjugacy == Conjugacy::S ? 1.0 : -1.0;
            ceig = std::max(ceig, (charge_conjugate(v) - ev * v).norm() / v.norm());
            if (l.conjugacy == Conjugacy::S) maj = std::max(maj, (-gamma(2) * v.conjugate() - v).norm() / v.norm());
            const cplx moving = dual_norm(make_elko(l, th, ph, k));
            const cplx rest = dual_norm(elko_rest(l, th, ph, m));
            im = std::max(im, std::abs(moving.imag()) / m);
            boost_inv = std::max(boost_inv, std::abs(moving - rest) / m);
            (moving.real() > 0.0 ? pos : neg)++;
        }
        if (pos != 2 || neg != 2) pattern += 1.0;
    }
    out.push_back(check("elko.charge_conjugation_eigenvalue", "C lambda = +lambda (S), -lambda (A)", ceig, cfg.tol));
    out.push_back(check("elko.self_conjugate_majorana_form", "-gamma^2 lambda* = lambda for S-type", maj, cfg.tol));
    out.push_back(check("elko.dual_norm_real", "dual norm is real", im, cfg.tol));
    out.push_back(check("elko.dual_norm_boost_invariant", "dual norm unchanged by the boost", boost_inv, cfg.tol));
    out.push_back(check("elko.dual_norm_sign_pattern", "two positive and two negative dual norms", pattern, 0.0));

    double axis = 0.0, det = 0.0;
    for (int t = 0; t < 25; ++t) {
        const double th = s.angle_theta(), ph = s.angle_phi(), m = s.uniform(0.5, 2.0), mag = s.uniform(0.0, 5.0);
        const auto n = direction(th, ph);
        const FourMomentum k = FourMomentum::on_shell_with(m, {mag * n[0], mag * n[1], mag * n[2]});
        const double pref = std::sqrt((k.E + m) / (2 * m));
        for (const auto& l : ElkoLabel::all()) {
            const double sign = l.pair == HelicityPair::minus_plus ? -1.0 : 1.0;
            const Spinor scalar_form = pref * (1.0 + sign * mag / (k.E + m)) * elko_rest(l, th, ph, m).value;
            axis = std::max(axis, (make_elko(l, th, ph, k).value - scalar_form).norm());
        }
        det = std::max(det, std::abs(boost_matrix(k).determinant() - 1.0));
    }
    out.push_back(check("elko.boost_scalar_form", "matrix boost equals the scalar factor along the helicity axis", axis,
                        cfg.tol));
    out.push_back(check("elko.boost_unit_determinant", "boost has unit determinant", det, cfg.tol));
    return out;
}

inline std::vector<CheckRecord> lounesto(const RunConfig& cfg) {
    Sampler s = sampler_for(cfg, 2);
    std::vector<CheckRecord> out;

    double wrong5 = 0.0, j2 = 0.0, knorm = 0.0, s_dead = 0.0;
    for (int t = 0; t < 50; ++t) {
        const FourMomentum k = s.on_shell(s.uniform(0.5, 2.0));
        const double th = s.angle_theta(), ph = s.angle_phi();
        for (const auto& l : ElkoLabel::all()) {
            const Spinor v = make_elko(l, th, ph, k).value;
            const ClassifiedSpinor c = classify(v, cfg.tol);
            const double n2 = v.squaredNorm();
            if (c.cls.id != 5) wrong5 += 1.0;
            j2 = std::max(j2, std::abs(minkowski(c.bilinears.J, c.bilinears.J)) / (n2 * n2));
            knorm = std::max(knorm, euclidean_norm(c.bilinears.K.data(), 4) / n2);
            if (euclidean_norm(c.bilinears.S.data(), 6) <= kSurfacePresenceFloor * n2) s_dead += 1.0;
        }
    }
    out.push_back(check("lounesto.elko_class5", "every ELKO is a flagpole (class 5)", wrong5, 0.0));
    out.push_back(check("lounesto.elko_null_current", "J^2 = 0 for ELKO", j2, cfg.tol));
    out.push_back(check("lounesto.elko_axial_vanishes", "K = 0 for ELKO", knorm, cfg.tol));
    out.push_back(check("lounesto.elko_spin_nonzero", "S != 0 for ELKO", s_dead, 0.0));

    double wrong6 = 0.0;
    for (int t = 0; t < 50; ++t) {
        Spinor right = Spinor::Zero(), left = Spinor::Zero();
        right.tail<2>() << s.complex(), s.complex();
        left.head<2>() << s.complex(), s.complex();
        if (lounesto_class(right, cfg.tol).id != 6) wrong6 += 1.0;
        if (lounesto_class(left, cfg.tol).id != 6) wrong6 += 1.0;
    }
    out.push_back(check("lounesto.chiral_class6", "chiral eigenspinors are Weyl (class 6)", wrong6, 0.0));

    double fierz = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Spinor psi = s.spinor();
        fierz = std::max(fierz, fierz_residuals(bilinears(psi)).max() / std::pow(psi.squaredNorm(), 2));
    }
    out.push_back(check("lounesto.fierz_identities", "Fierz identities for 1000 regular spinors", fierz, cfg.tol));

    std::vector<Spinor> samples;
    for (int t = 0; t < 30; ++t) {
        Spinor psi = s.spinor();
        if (t % 3 == 1)
            psi = make_elko(ElkoLabel::all()[t % 4], s.angle_theta(), s.angle_phi(), s.on_shell(1.0)).value;
        if (t % 3 == 2) psi.head<2>().setZero();
        samples.push_back(psi);
    }
    Spinor c1, c2, c3;
    c1 << 1.0, 0.0, cplx(1.0, 1.0), 0.0;
    c2 << 1.0, 0.0, 0.5, 0.0;
    c3 << 1.0, 0.0, cplx(0.0, 0.3), 0.0;
    samples.push_back(c1);
    samples.push_back(c2);
    samples.push_back(c3);

    double phase_changes = 0.0, boost_changes = 0.0;
    for (const auto& psi : samples) {
        const int id = lounesto_class(psi, cfg.tol).id;
        if (lounesto_class(std::polar(1.0, s.angle_phi()) * psi, cfg.tol).id != id) phase_changes += 1.0;
    }
    for (int t = 0; t < 20; ++t) {
        const Mat4 b = boost_matrix(s.on_shell(s.uniform(0.5, 2.0)));
        for (const auto& psi : samples)
            if (lounesto_class(b * psi, cfg.tol).id != lounesto_class(psi, cfg.tol).id) boost_changes += 1.0;
    }
    out.push_back(check("lounesto.phase_invariance", "class unchanged by a global phase", phase_changes, 0.0));
    out.push_back(check("lounesto.boost_invariance", "class unchanged by 20 random boosts", boost_changes, 0.0));

    const double regular_wrong = (lounesto_class(c1).id != 1) + (lounesto_class(c2).id != 2) + (lounesto_class(c3).id != 3);
    out.push_back(check("lounesto.regular_examples", "hand-built class 1, 2, 3 spinors", regular_wrong, 0.0));
    return out;
}

inline std::vector<CheckRecord> mapping(const RunConfig& cfg) {
    Sampler s = sampler_for(cfg, 3);
    std::vector<CheckRecord> out;
    const int eps = cfg.epsilon;

    // at rest chi = 1 and the printed matrix is fully explicit
    const FourMomentum rest = FourMomentum::at_rest(1.0);
    const RealLinearOp at_rest = assemble_M(MapEntries::ansatz(), eps, rest);
    Mat4 a;
    a << 0, 1, 0, -1,
        -1, 0, 1, 0,
         1, 0, 0, 0,
         0, 1, 0, 0;
    Mat4 b = Mat4::Zero();
    b(0, 3) = -I_unit * static_cast<double>(eps);
    b(1, 2) = I_unit * static_cast<double>(eps);
    out.push_back(check("mapping.ansatz_entrywise_rest", "ansatz M at p = 0 entry by entry",
                        std::max(max_abs(at_rest.A - a), max_abs(at_rest.B - b)), kExactTolerance));

    const double cond_rest = condition_number(at_rest);
    CheckRecord nonsing = check("mapping.real_representation_nonsingular_rest",
                                "8x8 real representation of M at p = 0 is invertible", cond_rest, kSingularCondition);
    nonsing.note = "residual is the condition number";
    out.push_back(nonsing);

    const MappingOperator ref = ansatz_M(eps, reference_map_momentum(1.0));
    CheckRecord ref_cond = check("mapping.real_representation_nonsingular_reference",
                                 "8x8 real representation of M at p = (0.3, 0, 0.4) m is invertible", ref.condition,
                                 kSingularCondition);
    ref_cond.note = "residual is the condition number";
    out.push_back(ref_cond);

    double roundtrip = 0.0, cplus = 0.0;
    for (int t = 0; t < 20; ++t) {
        const ElkoSpinor lam = make_elko(ElkoLabel::all()[t % 4], s.angle_theta(), s.angle_phi(), s.on_shell(1.0));
        const Spinor psi = rl_apply(ref.inverse, lam.value);
        const MapRecord r = map_to_elko(ref, psi, cfg.tol);
        roundtrip = std::max(roundtrip, (r.lambda - lam.value).norm() / lam.value.norm());
        cplus = std::max(cplus, std::min(r.c_plus_residual, r.c_minus_residual));
    }
    out.push_back(check("mapping.inverse_roundtrip", "M (M^-1 lambda) = lambda", roundtrip, cfg.tol));
    out.push_back(check("mapping.preimage_image_is_c_eigen", "M psi is a C eigenspinor for psi = M^-1 lambda", cplus,
                        cfg.tol));

    for (int cls = 1; cls <= 3; ++cls) {
        int failures = 0, not_elko = 0, produced = 0;
        double worst = 0.0, best_failure = std::numeric_limits<double>::infinity();
        for (int run = 0; run < kSolverRunsPerClass; ++run) {
            ClassSeed seed;
            seed.psi1 = s.complex();
            seed.psi1a = s.normal();
            seed.psi1b = s.normal();
            seed.psi2a = s.normal();
            FamilySolverOptions opt;
            opt.tol = cfg.tol;
            try {
                const FamilySolution sol = solve_class_family(cls, seed, s.next_seed(), opt);
                ++produced;
                worst = std::max(worst, mapping_conditions(sol.psi, cls, cfg.tol).max_residual / sol.psi.squaredNorm());
                if (!map_to_elko(ref, sol.psi, cfg.tol).elko_output) ++not_elko;
            } catch (const solver_failure& e) {
                ++failures;
                best_failure = std::min(best_failure, e.residual);
            }
        }
        const std::string tag = "class" + std::to_string(cls);
        CheckRecord solved = check("mapping.solver_" + tag, "constraint rows and class table satisfied by solver output",
                                   static_cast<double>(failures), 0.0);
        solved.note = "residual counts failed runs out of " + std::to_string(kSolverRunsPerClass);
        if (failures > 0) solved.note += "; smallest final residual " + format17(best_failure);
        out.push_back(solved);
        out.push_back(check("mapping.solver_residual_" + tag, "worst constraint residual among solver outputs",
                            produced > 0 ? worst : std::numeric_limits<double>::infinity(), cfg.tol));
        CheckRecord image = check("mapping.image_type5_" + tag, "M psi is type-5 and a C eigenspinor",
                                  static_cast<double>(not_elko + (kSolverRunsPerClass - produced)), 0.0);
        image.note = "residual counts runs without an ELKO image, missing solver outputs included";
        out.push_back(image);
    }

    for (auto conv : {AdjointConvention::real_pairing, AdjointConvention::formal_dagger}) {
        double bar = 0.0;
        for (int t = 0; t < 10; ++t) {
            const ElkoSpinor lam = make_elko(ElkoLabel::all()[t % 4], s.angle_theta(), s.angle_phi(), s.on_shell(1.0));
            const Spinor psi = rl_apply(ref.inverse, lam.value);
            bar = std::max(bar, dual_relation_check(psi, lam, ref, conv).bar_identity / psi.squaredNorm());
        }
        out.push_back(check("mapping.dual_relation." + to_string(conv),
                            "psi-bar from lambda^dagger (M^-1)^dagger gamma^0", bar, cfg.tol, false));
    }
    return out;
}

inline PlaneWaveField lattice_field(Sampler& s, const RealLinearOp& M_inv) {
    static constexpr int ns[3][3] = {{2, 1, -1}, {1, -2, 1}, {-1, 0, 2}};
    PlaneWaveField f;
    for (int i = 0; i < 3; ++i) {
        const ElkoSpinor lam = elko_rest(ElkoLabel::all()[i], s.angle_theta(), s.angle_phi(), 1.0);
        const cplx amp = s.complex();
        const FourMomentum k = FourMomentum::off_shell(ns[i][0], {double(ns[i][1]), 0.0, double(ns[i][2])});
        f.modes.push_back({amp * rl_apply(M_inv, lam.value), k, i % 2 ? -1 : 1});
    }
    return f;
}

inline std::vector<CheckRecord> theta(const RunConfig& cfg) {
    Sampler s = sampler_for(cfg, 4);
    std::vector<CheckRecord> out;
    const MappingOperator ref = ansatz_M(cfg.epsilon, reference_map_momentum(1.0));
    const auto base = ThetaContext::make(ref, 1.0, 1.0, FourMomentum::off_shell(2.0, {0.0, 0.0, 0.0}), cfg.convention);

    double prop = 0.0, pnorm = 0.0, forms = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto ctx = base.at(s.off_shell_xz(base.m_D));
        const Mat4 d = dirac_op(ctx.p, ctx.m_D), di = dirac_op_inverse(ctx.p, ctx.m_D);
        prop = std::max(prop, max_abs(d * di - Mat4::Identity()));
        pnorm = std::max(pnorm, operator_norm(p_operator(ctx, slash_theta(ctx))) / std::abs(ctx.p.square()));
        const RowSpinor bar = s.row();
        const RowFunctional a = theta_psi_bar(ctx, bar), b = theta_psi_bar_constraint_form(ctx, bar);
        forms = std::max(forms, (a - b).norm() / a.norm());
    }
    out.push_back(check("theta.propagator_inverse", "(p-slash - m_D)(p-slash - m_D)^-1 = 1 off shell", prop, cfg.tol));
    out.push_back(check("theta.p_operator_vanishes", "P(slash-Theta) = 0, relative to |p^2|", pnorm, cfg.tol));
    out.push_back(check("theta.constraint_form_agreement",
                        "Theta psi-bar: direct form equals the form through the constraint operator", forms, cfg.tol));

    double r12 = 0.0;
    std::vector<double> r23(4, 0.0);
    std::vector<std::string> r23_ids(4);
    for (int t = 0; t < 50; ++t) {
        const auto ctx = base.at(s.off_shell_xz(base.m_D));
        const ElkoSpinor lam = make_elko(ElkoLabel::all()[t % 4], s.angle_theta(), s.angle_phi(), s.on_shell(ctx.m));
        const Spinor psi = rl_apply(ctx.M_inv, lam.value);
        const MassTermChain ch = mass_term_chain(ctx, psi, lam);
        r12 = std::max(r12, ch.residual12 / std::max(1.0, std::abs(ch.value1)));
        for (std::size_t i = 0; i < ch.sweep.size() && i < 4; ++i) {
            const auto& e = ch.sweep[i];
            r23[i] = std::max(r23[i], e.residual23 / std::max(1.0, std::abs(e.value3)));
            r23_ids[i] = to_string(e.convention) + "." + to_string(e.rule);
        }
    }
    out.push_back(check("theta.mass_chain_substitution", "Theta psi-bar D psi equals the M^-1 lambda substitution", r12,
                        cfg.tol));
    for (int i = 0; i < 4; ++i) {
        CheckRecord r = check("theta.mass_chain_elko_step." + r23_ids[i],
                              "substituted mass term equals -(m^2/2) dual(lambda) lambda", r23[i], cfg.tol, false);
        r.note = "convention sweep, diagnostic only";
        out.push_back(r);
    }

    const PlaneWaveField field = lattice_field(s, ref.inverse);
    const LagrangianReport lag = lagrangian_report(base, field, {8, 8, 8, 8}, cfg.tol);
    out.push_back(check("theta.lagrangian_integral",
                        "box integral of Theta L_Dirac equals box integral of L_ELKO (relative)",
                        lag.relative_residual, kIntegralTolerance));
    out.push_back(check("theta.lagrangian_surface_integral", "box integral of the total-derivative term vanishes (relative)",
                        lag.relative_surface, cfg.tol));
    out.push_back(check_above("theta.lagrangian_surface_present",
                              "pointwise total-derivative term relative to the density scale", lag.surface_pointwise_max,
                              kSurfacePresenceFloor));
    out.push_back(check("theta.lagrangian_riemann_exact", "lattice sum matches the analytic mode integral",
                        std::abs(lag.theta_dirac_integral - lag.theta_dirac_exact) / (lag.density_scale * lag.volume),
                        cfg.tol));
    return out;
}

} // namespace suites

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"algebra", suites::algebra}, {"elko", suites::elko}, {"lounesto", suites::lounesto},
        {"mapping", suites::mapping}, {"theta", suites::theta}};
    return table;
}

inline bool is_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& [n, _] : suite_table())
        if (n == name) return true;
    return false;
}

// results are assembled in table order whatever the scheduling
inline VerificationReport run_suite(const RunConfig& cfg) {
    if (!is_suite(cfg.suite)) throw argument_error("unknown suite '" + cfg.suite + "'");
    std::vector<SuiteFn> selected;
    for (const auto& [n, fn] : suite_table())
        if (cfg.suite == "all" || cfg.suite == n) selected.push_back(fn);

    std::vector<std::vector<CheckRecord>> parts(selected.size());
    if (cfg.parallel) {
        std::vector<std::future<std::vector<CheckRecord>>> futures;
        for (const auto& fn : selected) futures.push_back(std::async(std::launch::async, fn, cfg));
        for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < selected.size(); ++i) parts[i] = selected[i](cfg);
    }

    VerificationReport rep;
    rep.suite = cfg.suite;
    rep.config = cfg;
    for (auto& p : parts) rep.checks.insert(rep.checks.end(), p.begin(), p.end());
    return rep;
}

} // namespace elko
