#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "bilinears.hpp"
#include "newton.hpp"
#include "real_linear.hpp"
#include "spinors.hpp"

namespace elko {

struct MapEntries {
    cplx m11{0.0}, m12{0.0}, m21{0.0}, m22{0.0};
    cplx m31{0.0}, m32{0.0}, m41{0.0}, m42{0.0};

    // the illustrative choice; m21 = -1 is implied by the written-out matrix
    static MapEntries ansatz() {
        MapEntries e;
        e.m12 = 1.0;
        e.m21 = -1.0;
        e.m31 = 1.0;
        e.m42 = 1.0;
        return e;
    }

    Mat2 top() const {
        Mat2 t;
        t << m11, m12, m21, m22;
        return t;
    }
    Mat2 bottom() const {
        Mat2 b;
        b << m31, m32, m41, m42;
        return b;
    }
};

// relates the Weyl halves of a moving spinor, phi_R = chi phi_L
inline Mat2 chi(const FourMomentum& k) {
    if (!(k.m > 0.0)) throw argument_error("chi needs m > 0");
    return (k.E * Mat2::Identity() + sigma_dot(k.p)) / k.m;
}

// chi multiplies each 2x2 block of free entries from the left
inline RealLinearOp assemble_M(const MapEntries& e, int epsilon, const FourMomentum& k) {
    if (epsilon != 1 && epsilon != -1) throw argument_error("epsilon must be +1 or -1");
    const Mat2 c = chi(k);
    const Mat2 top = e.top(), bot = e.bottom();
    Mat2 rot;
    rot << 0.0, -1.0, 1.0, 0.0;
    RealLinearOp op;
    op.A = blocks(top, -c * top, bot, Mat2::Identity() - c * bot);
    op.B.block<2, 2>(0, 2) = (static_cast<double>(epsilon) * I_unit) * rot;
    return op;
}

struct MappingOperator {
    MapEntries entries;
    int epsilon = 1;
    FourMomentum momentum;
    RealLinearOp realized;
    RealLinearOp inverse;
    double condition = 0.0;
};

inline MappingOperator build_M(const MapEntries& e, int epsilon, const FourMomentum& k) {
    MappingOperator m;
    m.entries = e;
    m.epsilon = epsilon;
    m.momentum = k;
    m.realized = assemble_M(e, epsilon, k);
    m.condition = condition_number(m.realized);
    try {
        m.inverse = rl_invert(m.realized);
    } catch (const singular_operator& err) {
        std::ostringstream os;
        os << "mapping operator is singular at p = (" << k.p[0] << ", " << k.p[1] << ", " << k.p[2]
           << "), condition number " << err.condition;
        throw singular_map(os.str(), err.condition);
    }
    return m;
}

inline MappingOperator ansatz_M(int epsilon, const FourMomentum& k) {
    return build_M(MapEntries::ansatz(), epsilon, k);
}

// on-shell momentum (0.3, 0, 0.4) m: the ansatz is singular at rest and at |p| = m
inline FourMomentum reference_map_momentum(double m) { return FourMomentum::on_shell_with(m, {0.3 * m, 0.0, 0.4 * m}); }

// largest deviation of an operator from the tied-slot pattern for the given free entries
inline double pattern_audit(const RealLinearOp& op, const MapEntries& e, int epsilon, const FourMomentum& k) {
    const Mat2 c = chi(k);
    Mat2 rot;
    rot << 0.0, -1.0, 1.0, 0.0;
    double d = 0.0;
    d = std::max(d, (op.A.block<2, 2>(0, 0) - e.top()).cwiseAbs().maxCoeff());
    d = std::max(d, (op.A.block<2, 2>(2, 0) - e.bottom()).cwiseAbs().maxCoeff());
    d = std::max(d, (op.A.block<2, 2>(0, 2) + c * op.A.block<2, 2>(0, 0)).cwiseAbs().maxCoeff());
    d = std::max(d, (op.A.block<2, 2>(2, 2) - (Mat2::Identity() - c * op.A.block<2, 2>(2, 0))).cwiseAbs().maxCoeff());
    Mat4 b = Mat4::Zero();
    b.block<2, 2>(0, 2) = (static_cast<double>(epsilon) * I_unit) * rot;
    d = std::max(d, (op.B - b).cwiseAbs().maxCoeff());
    return d;
}

// ---- component conditions; x = (psi1a, psi1b, psi2a, psi2b, psi3a, psi3b, psi4a, psi4b)

template <class T>
using Components = std::array<T, 8>;

inline Components<double> split(const Spinor& psi) {
    Components<double> x;
    for (int i = 0; i < 4; ++i) {
        x[2 * i] = psi(i).real();
        x[2 * i + 1] = psi(i).imag();
    }
    return x;
}

inline Spinor join(const Components<double>& x) {
    Spinor psi;
    for (int i = 0; i < 4; ++i) psi(i) = cplx(x[2 * i], x[2 * i + 1]);
    return psi;
}

namespace detail {

// Re(psi_i^* psi_j) and Im(psi_i^* psi_j), 1-based like the component names
template <class T>
T re(const Components<T>& x, int i, int j) {
    return x[2 * (i - 1)] * x[2 * (j - 1)] + x[2 * (i - 1) + 1] * x[2 * (j - 1) + 1];
}

template <class T>
T im(const Components<T>& x, int i, int j) {
    return x[2 * (i - 1)] * x[2 * (j - 1) + 1] - x[2 * (i - 1) + 1] * x[2 * (j - 1)];
}

} // namespace detail

template <class T>
std::array<T, 4> common_rows(const Components<T>& x) {
    using detail::im;
    using detail::re;
    return {re(x, 1, 3) + re(x, 2, 4), re(x, 2, 3) + re(x, 1, 4),
            im(x, 1, 4) - im(x, 2, 3) - T(2.0) * im(x, 3, 4) - T(2.0) * im(x, 1, 2), re(x, 1, 3) - re(x, 2, 4)};
}

template <class T>
std::array<T, 2> component_rows(const Components<T>& x) {
    return {x[0] * x[4] + x[1] * x[5], x[2] * x[6] + x[3] * x[7]};
}

template <class T>
std::array<T, 2> class_rows(const Components<T>& x, int class_id) {
    const T &p1a = x[0], &p1b = x[1], &p2a = x[2], &p2b = x[3];
    const T &p3a = x[4], &p3b = x[5], &p4a = x[6], &p4b = x[7];
    const T mixed = p2a * (p3a - p3b) + p2b * (p3a + p3b);
    const T cross34 = p3a * p4b - p3b * p4a;
    switch (class_id) {
    case 1: return {mixed, cross34};
    case 2: return {cross34, p2a * p3a + p2b * p3b + p1a * p4a + p1b * p4b};
    case 3:
        return {mixed, (p1a * p4b - p1b * p4a) - (p2a * p3b - p2b * p3a) - T(2.0) * cross34 -
                           T(2.0) * (p1a * p2b - p1b * p2a)};
    default: throw argument_error("mapping conditions exist only for classes 1, 2, 3");
    }
}

// sigma = 2 Re(u^dagger l), omega = -2 Im(u^dagger l) for psi = (u, l)
template <class T>
T sigma_of(const Components<T>& x) {
    return T(2.0) * (detail::re(x, 1, 3) + detail::re(x, 2, 4));
}

template <class T>
T omega_of(const Components<T>& x) {
    return T(-2.0) * (detail::im(x, 1, 3) + detail::im(x, 2, 4));
}

struct ConstraintReport {
    int class_id = 0;
    std::array<double, 4> common{};
    std::array<double, 2> components{};
    std::array<double, 2> class_specific{};
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool satisfied = false;
};

inline ConstraintReport mapping_conditions(const Spinor& psi, int class_id, double tol = 1e-10) {
    if (class_id < 1 || class_id > 3) throw argument_error("mapping conditions exist only for classes 1, 2, 3");
    const double n2 = psi.squaredNorm();
    if (!(n2 > 0.0)) throw degenerate_spinor("mapping conditions of the zero spinor");
    const auto x = split(psi);
    ConstraintReport r;
    r.class_id = class_id;
    r.common = common_rows(x);
    r.components = component_rows(x);
    r.class_specific = class_rows(x, class_id);
    for (double v : r.common) r.max_residual = std::max(r.max_residual, std::abs(v));
    for (double v : r.components) r.max_residual = std::max(r.max_residual, std::abs(v));
    for (double v : r.class_specific) r.max_residual = std::max(r.max_residual, std::abs(v));
    r.tolerance = tol * n2;
    r.satisfied = r.max_residual <= r.tolerance;
    return r;
}

// ---- constrained family solver

struct ClassSeed {
    cplx psi1{0.0};    // class 1
    double psi1a = 0.0, psi1b = 0.0, psi2a = 0.0;  // classes 2 and 3
};

struct FamilySolution {
    Spinor psi = Spinor::Zero();
    double residual = 0.0;
    int iterations = 0;
    int starts = 0;
};

struct FamilySolverOptions {
    SolverOptions newton;
    int starts = 8;
    double tol = 1e-10;
};

namespace detail {

inline constexpr int kMaxUnknowns = 6;
using D6 = Dual<kMaxUnknowns>;

// nonzero requirements enter as targets sigma = sigma_t, omega = omega_t (zero target = "vanishes")
inline Eigen::VectorXd family_residual(int class_id, const Components<D6>& x, double sigma_t, double omega_t,
                                       Eigen::MatrixXd* jac, int unknowns) {
    std::array<D6, 10> rows;
    const auto c = common_rows(x);
    const auto k = component_rows(x);
    const auto t = class_rows(x, class_id);
    for (int i = 0; i < 4; ++i) rows[i] = c[i];
    rows[4] = k[0];
    rows[5] = k[1];
    rows[6] = t[0];
    rows[7] = t[1];
    rows[8] = sigma_of(x) - D6(sigma_t);
    rows[9] = omega_of(x) - D6(omega_t);
    Eigen::VectorXd r(10);
    if (jac) jac->resize(10, unknowns);
    for (int i = 0; i < 10; ++i) {
        r(i) = rows[i].v;
        if (jac)
            for (int j = 0; j < unknowns; ++j) (*jac)(i, j) = rows[i].d[j];
    }
    return r;
}

} // namespace detail

inline FamilySolution solve_class_family(int class_id, const ClassSeed& seed, std::uint64_t rng_seed,
                                         const FamilySolverOptions& opt = {}) {
    if (class_id < 1 || class_id > 3) throw argument_error("families exist only for classes 1, 2, 3");
    double scale2 = 0.0;
    if (class_id == 1) {
        if (seed.psi1 == cplx(0.0)) throw argument_error("class 1 family needs psi1 != 0");
        scale2 = std::norm(seed.psi1);
    } else {
        scale2 = seed.psi1a * seed.psi1a + seed.psi1b * seed.psi1b + seed.psi2a * seed.psi2a;
        if (!(scale2 > 0.0)) throw argument_error("class 2/3 family needs a nonzero seed (psi1a, psi1b, psi2a)");
    }
    const int unknowns = class_id == 1 ? 6 : 5;
    const double scale = std::sqrt(scale2);

    auto assemble = [&](const Eigen::VectorXd& u) {
        using detail::D6;
        Components<D6> x;
        if (class_id == 1) {
            x[0] = D6(seed.psi1.real());
            x[1] = D6(seed.psi1.imag());
            for (int j = 0; j < 6; ++j) x[2 + j] = D6::variable(u(j), j);
        } else {
            x[0] = D6(seed.psi1a);
            x[1] = D6(seed.psi1b);
            x[2] = D6(seed.psi2a);
            for (int j = 0; j < 5; ++j) x[3 + j] = D6::variable(u(j), j);
        }
        return x;
    };

    std::mt19937_64 rng(rng_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::bernoulli_distribution coin(0.5);

    double best = std::numeric_limits<double>::infinity();
    int best_iterations = 0;
    for (int s = 0; s < opt.starts; ++s) {
        const double s0 = (coin(rng) ? 1.0 : -1.0) * mag(rng) * scale2;
        const double w0 = (coin(rng) ? 1.0 : -1.0) * mag(rng) * scale2;
        const double sigma_t = (class_id == 1 || class_id == 2) ? s0 : 0.0;
        const double omega_t = (class_id == 1 || class_id == 3) ? w0 : 0.0;

        Eigen::VectorXd u(unknowns);
        for (int j = 0; j < unknowns; ++j) u(j) = scale * normal(rng);

        auto system = [&](const Eigen::VectorXd& v, Eigen::VectorXd& r, Eigen::MatrixXd& jac) {
            r = detail::family_residual(class_id, assemble(v), sigma_t, omega_t, &jac, unknowns);
        };
        const SolverResult res = damped_gauss_newton(system, u, opt.newton);
        if (res.residual < best) {
            best = res.residual;
            best_iterations = res.iterations;
        }
        if (!res.converged) continue;

        const auto xd = assemble(res.x);
        Components<double> x;
        for (int i = 0; i < 8; ++i) x[i] = xd[i].v;
        const Spinor psi = join(x);
        // accepted only if an independent evaluation agrees
        if (!mapping_conditions(psi, class_id, opt.tol).satisfied) continue;
        try {
            if (lounesto_class(psi, opt.tol).id != class_id) continue;
        } catch (const std::exception&) {
            continue;
        }
        FamilySolution sol;
        sol.psi = psi;
        sol.residual = res.residual;
        sol.iterations = res.iterations;
        sol.starts = s + 1;
        return sol;
    }
    std::ostringstream os;
    os << "no class-" << class_id << " spinor satisfying the mapping conditions found after " << opt.starts
       << " starts; best residual " << best;
    throw solver_failure(os.str(), best, best_iterations);
}

// ---- applying the map

struct MapRecord {
    Spinor lambda = Spinor::Zero();
    int input_class = 0;                    // 0 when the input could not be classified
    std::optional<ConstraintReport> conditions;
    int output_class = 0;                   // 0 when the output could not be classified
    std::string output_error;
    double c_plus_residual = 0.0;           // |C l - l| / |l|
    double c_minus_residual = 0.0;          // |C l + l| / |l|
    bool conditions_ok = false;
    bool c_eigen = false;
    bool elko_output = false;
};

inline MapRecord map_to_elko(const MappingOperator& M, const Spinor& psi, double tol = 1e-10) {
    MapRecord rec;
    rec.lambda = rl_apply(M.realized, psi);
    try {
        const auto cls = lounesto_class(psi, tol);
        rec.input_class = cls.id;
        if (cls.regular) {
            rec.conditions = mapping_conditions(psi, cls.id, tol);
            rec.conditions_ok = rec.conditions->satisfied;
        }
    } catch (const std::exception&) {
        rec.input_class = 0;
    }
    const double n = rec.lambda.norm();
    if (n > 0.0) {
        const Spinor c = charge_conjugate(rec.lambda);
        rec.c_plus_residual = (c - rec.lambda).norm() / n;
        rec.c_minus_residual = (c + rec.lambda).norm() / n;
        rec.c_eigen = std::min(rec.c_plus_residual, rec.c_minus_residual) <= tol;
    }
    try {
        rec.output_class = lounesto_class(rec.lambda, tol).id;
    } catch (const std::exception& e) {
        rec.output_class = 0;
        rec.output_error = e.what();
    }
    rec.elko_output = rec.output_class == 5 && rec.c_eigen;
    return rec;
}

// ---- dual relations

struct DualRelationResidual {
    AdjointConvention convention = AdjointConvention::real_pairing;
    double map_mismatch = 0.0;         // |M psi - lambda|
    double bar_identity = 0.0;         // psi-bar against lambda^dagger (M^-1)^dagger g^0
    double elko_dual_helicity = 0.0;   // j2 sign tied to the helicity label
    double elko_dual_conjugacy = 0.0;  // j2 sign tied to S/A
};

inline DualRelationResidual dual_relation_check(const Spinor& psi, const ElkoSpinor& lambda,
                                                const RealLinearOp& M, const RealLinearOp& M_inv,
                                                AdjointConvention convention) {
    DualRelationResidual r;
    r.convention = convention;
    r.map_mismatch = (rl_apply(M, psi) - lambda.value).norm();
    const RealLinearOp g0 = RealLinearOp::linear(gamma(0));
    const RealLinearOp inv_dag = rl_adjoint(M_inv, convention);
    const RowFunctional psi_bar = RowFunctional::row(psi.adjoint() * gamma(0));

    const RowFunctional via_lambda = RowFunctional::row(lambda.value.adjoint()) * inv_dag * g0;
    r.bar_identity = (psi_bar - via_lambda).norm();

    const RowFunctional dual = RowFunctional::row(elko_dual(lambda, DualSignRule::helicity_label));
    const RowFunctional tail = dual * (g0 * inv_dag * g0);
    const double s_hel = lambda.label.pair == HelicityPair::minus_plus ? -1.0 : 1.0;
    const double s_conj = lambda.label.conjugacy == Conjugacy::S ? -1.0 : 1.0;
    r.elko_dual_helicity = (psi_bar - (s_hel * I_unit) * tail).norm();
    r.elko_dual_conjugacy = (psi_bar - (s_conj * I_unit) * tail).norm();
    return r;
}

inline DualRelationResidual dual_relation_check(const Spinor& psi, const ElkoSpinor& lambda,
                                                const MappingOperator& M, AdjointConvention convention) {
    return dual_relation_check(psi, lambda, M.realized, M.inverse, convention);
}

struct DualRelationComparison {
    DualRelationResidual real_pairing;
    DualRelationResidual formal_dagger;
    AdjointConvention selected = AdjointConvention::real_pairing;
};

inline DualRelationComparison compare_dual_conventions(const Spinor& psi, const ElkoSpinor& lambda,
                                                       const MappingOperator& M) {
    DualRelationComparison c;
    c.real_pairing = dual_relation_check(psi, lambda, M, AdjointConvention::real_pairing);
    c.formal_dagger = dual_relation_check(psi, lambda, M, AdjointConvention::formal_dagger);
    auto score = [](const DualRelationResidual& r) {
        return r.bar_identity + std::min(r.elko_dual_helicity, r.elko_dual_conjugacy);
    };
    c.selected = score(c.formal_dagger) < score(c.real_pairing) ? AdjointConvention::formal_dagger
                                                                 : AdjointConvention::real_pairing;
    return c;
}

} // namespace elko
