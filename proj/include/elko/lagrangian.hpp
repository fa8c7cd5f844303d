#pragma once

#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <vector>

#include "bilinears.hpp"
#include "mapping.hpp"
#include "theta.hpp"

namespace elko {

using Vec4 = std::array<double, 4>;

inline double minkowski_dot(const Vec4& a_upper, const Vec4& b_upper) {
    return a_upper[0] * b_upper[0] - a_upper[1] * b_upper[1] - a_upper[2] * b_upper[2] - a_upper[3] * b_upper[3];
}

inline Vec4 lower_index(const Vec4& v) { return {v[0], -v[1], -v[2], -v[3]}; }

inline Vec4 negate(const Vec4& v) { return {-v[0], -v[1], -v[2], -v[3]}; }

// sign +1 means e^{-ip.x}, -1 means e^{+ip.x}
struct PlaneWaveMode {
    Spinor amplitude = Spinor::Zero();
    FourMomentum momentum;
    int sign = 1;
};

struct PlaneWaveField {
    std::vector<PlaneWaveMode> modes;
    Vec4 box{2 * std::numbers::pi, 2 * std::numbers::pi, 2 * std::numbers::pi, 2 * std::numbers::pi};
};

// column term c e^{-ik.x}; k is contravariant
struct ColumnTerm {
    Spinor c;
    Vec4 k;
};

// row term r e^{+ik.x}
struct RowTerm {
    RowSpinor r;
    Vec4 k;
};

using ColumnField = std::vector<ColumnTerm>;
using RowField = std::vector<RowTerm>;

inline FourMomentum as_momentum(const Vec4& k) { return FourMomentum::off_shell(k[0], {k[1], k[2], k[3]}); }

// the antilinear part conjugates the amplitude, which flips the frequency
inline ColumnField apply_op(const RealLinearOp& op, const ColumnField& f) {
    ColumnField out;
    const bool anti = !op.is_complex_linear();
    for (const auto& t : f) {
        out.push_back({op.A * t.c, t.k});
        if (anti) out.push_back({op.B * t.c.conjugate(), negate(t.k)});
    }
    return out;
}

template <class PerTerm>
ColumnField apply_per_term(const ColumnField& f, PerTerm&& mat_of_k) {
    ColumnField out;
    for (const auto& t : f) out.push_back({mat_of_k(t.k) * t.c, t.k});
    return out;
}

inline ColumnField scale(cplx s, ColumnField f) {
    for (auto& t : f) t.c *= s;
    return f;
}

inline ColumnField concat(ColumnField a, const ColumnField& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// partial_mu (lower index) of e^{-ik.x} gives -i k_mu
inline ColumnField derivative(const ColumnField& f, int mu) {
    ColumnField out;
    for (const auto& t : f) out.push_back({(-I_unit * lower_index(t.k)[mu]) * t.c, t.k});
    return out;
}

inline RowField derivative(const RowField& f, int mu) {
    RowField out;
    for (const auto& t : f) out.push_back({(I_unit * lower_index(t.k)[mu]) * t.r, t.k});
    return out;
}

inline RowField dirac_bar(const ColumnField& f) {
    RowField out;
    for (const auto& t : f) out.push_back({t.c.adjoint() * gamma(0), t.k});
    return out;
}

// i lambda^dagger g^0, the dual carried by the field lambda = M psi
inline RowField elko_field_dual(const ColumnField& f) {
    RowField out;
    for (const auto& t : f) out.push_back({I_unit * (t.c.adjoint() * gamma(0)), t.k});
    return out;
}

// finite trigonometric sum  sum_j a_j e^{i q_j.x}
struct Density {
    std::vector<std::pair<cplx, Vec4>> terms;

    cplx at(const Vec4& x) const {
        cplx s = 0.0;
        for (const auto& [a, q] : terms) s += a * std::exp(I_unit * minkowski_dot(q, x));
        return s;
    }

    // only zero frequencies survive on a commensurate box
    cplx exact_integral(const Vec4& box) const {
        const double vol = box[0] * box[1] * box[2] * box[3];
        cplx s = 0.0;
        for (const auto& [a, q] : terms)
            if (std::abs(q[0]) + std::abs(q[1]) + std::abs(q[2]) + std::abs(q[3]) < 1e-9) s += a;
        return s * vol;
    }

    Density& operator+=(const Density& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    Density scaled(cplx s) const {
        Density d = *this;
        for (auto& t : d.terms) t.first *= s;
        return d;
    }
};

inline Density contract(const RowField& rows, const ColumnField& cols) {
    Density d;
    for (const auto& r : rows)
        for (const auto& c : cols) {
            const Vec4 q{r.k[0] - c.k[0], r.k[1] - c.k[1], r.k[2] - c.k[2], r.k[3] - c.k[3]};
            d.terms.push_back({(r.r * c.c)(0, 0), q});
        }
    return d;
}

struct ModeDiagnostics {
    int input_class = 0;
    bool conditions_ok = false;
    double worst_condition_residual = 0.0;
};

struct LagrangianDensities {
    Density theta_dirac;
    Density elko;
    Density surface;
};

struct LagrangianReport {
    std::array<int, 4> lattice{};
    Vec4 box{};
    double volume = 0.0;
    std::vector<cplx> theta_dirac_density;
    std::vector<cplx> elko_density;
    std::vector<cplx> surface_density;
    cplx theta_dirac_integral, elko_integral, surface_integral;
    cplx theta_dirac_exact, elko_exact, surface_exact;
    double density_scale = 0.0;
    double residual = 0.0;              // |int Theta L_Dirac - int L_ELKO|
    double relative_residual = 0.0;     // residual / (density_scale * volume)
    double relative_surface = 0.0;      // |int surface| / (density_scale * volume)
    double surface_pointwise_max = 0.0; // max |surface| / density_scale
    double pointwise_identity = 0.0;    // max |Theta L_Dirac - L_ELKO + surface| / density_scale
    double pointwise_equality = 0.0;    // max |Theta L_Dirac - L_ELKO| / density_scale
    std::vector<ModeDiagnostics> modes;
};

inline ColumnField column_field(const PlaneWaveField& f) {
    ColumnField out;
    for (const auto& m : f.modes) {
        const Vec4 k = m.momentum.upper();
        out.push_back({m.amplitude, m.sign > 0 ? k : negate(k)});
    }
    return out;
}

inline void validate_field(const ThetaContext& ctx, const PlaneWaveField& f) {
    for (std::size_t i = 0; i < f.modes.size(); ++i) {
        const auto& md = f.modes[i];
        if (md.sign != 1 && md.sign != -1) throw argument_error("mode sign must be +1 or -1");
        const Vec4 k = lower_index(md.momentum.upper());
        for (int mu = 0; mu < 4; ++mu) {
            const double n = k[mu] * f.box[mu] / (2 * std::numbers::pi);
            if (std::abs(n - std::round(n)) > 1e-9) {
                std::ostringstream os;
                os << "mode " << i << " is not commensurate with the box along axis " << mu;
                throw argument_error(os.str());
            }
        }
        if (md.momentum.p[1] != 0.0) throw precondition_error("mode momenta must have p_y = 0");
        (void)dirac_op_inverse(md.momentum, ctx.m_D);
    }
}

// The two Dirac-operator terms keep D and D^-1 explicit per frequency so that the cancellation is computed.
inline LagrangianDensities lagrangian_densities(const ThetaContext& ctx, const PlaneWaveField& f) {
    validate_field(ctx, f);
    const ColumnField psi = column_field(f);
    const RowField psi_bar = dirac_bar(psi);
    const RealLinearOp G = mass_kernel(ctx);
    const double half_m2 = 0.5 * ctx.m * ctx.m;
    auto D = [&](const Vec4& k) { return dirac_op(as_momentum(k), ctx.m_D); };
    auto Dinv = [&](const Vec4& k) { return dirac_op_inverse(as_momentum(k), ctx.m_D); };

    // (Theta psibar)(i dslash - m_D) psi
    const ColumnField first = scale(-half_m2, apply_op(G, apply_per_term(apply_per_term(psi, D), Dinv)));
    // psibar (i dslash - m_D)(Theta psi)
    const ColumnField theta_psi_f = scale(-1.0, apply_per_term(scale(half_m2, apply_op(G, psi)), Dinv));
    const ColumnField second = apply_per_term(theta_psi_f, D);
    // i psibar (dslash . Theta) psi, the box acting on each frequency separately
    ColumnField st = apply_op(rl_conj(ctx.M), scale(I_unit, psi));
    for (auto& t : st) t.c *= -minkowski_dot(t.k, t.k);
    st = scale(I_unit, apply_op(G, apply_op(ctx.M_inv, st)));

    LagrangianDensities out;
    out.theta_dirac = contract(psi_bar, concat(concat(first, second), st));

    const ColumnField lambda = apply_op(ctx.M, psi);
    const RowField dual = elko_field_dual(lambda);
    Density kinetic, box_term;
    for (int mu = 0; mu < 4; ++mu) {
        const double eta = metric(mu, mu);
        kinetic += contract(derivative(dual, mu), derivative(lambda, mu)).scaled(eta);
        box_term += contract(dual, derivative(derivative(lambda, mu), mu)).scaled(eta);
    }
    out.elko = kinetic;
    out.elko += contract(dual, lambda).scaled(-ctx.m * ctx.m);
    out.surface = kinetic;
    out.surface += box_term;
    return out;
}

inline LagrangianReport lagrangian_report(const ThetaContext& ctx, const PlaneWaveField& f,
                                          const std::array<int, 4>& lattice = {8, 8, 8, 8}, double tol = 1e-10) {
    for (int n : lattice)
        if (n <= 0) throw argument_error("lattice sizes must be positive");
    const LagrangianDensities d = lagrangian_densities(ctx, f);

    LagrangianReport rep;
    rep.lattice = lattice;
    rep.box = f.box;
    rep.volume = f.box[0] * f.box[1] * f.box[2] * f.box[3];
    const int sites = lattice[0] * lattice[1] * lattice[2] * lattice[3];
    rep.theta_dirac_density.resize(sites);
    rep.elko_density.resize(sites);
    rep.surface_density.resize(sites);

    // one task per time slice; each writes a disjoint range
    auto slice = [&](int t) {
        const int per = lattice[1] * lattice[2] * lattice[3];
        for (int a = 0; a < lattice[1]; ++a)
            for (int b = 0; b < lattice[2]; ++b)
                for (int c = 0; c < lattice[3]; ++c) {
                    const Vec4 x{t * f.box[0] / lattice[0], a * f.box[1] / lattice[1], b * f.box[2] / lattice[2],
                                 c * f.box[3] / lattice[3]};
                    const int idx = t * per + (a * lattice[2] + b) * lattice[3] + c;
                    rep.theta_dirac_density[idx] = d.theta_dirac.at(x);
                    rep.elko_density[idx] = d.elko.at(x);
                    rep.surface_density[idx] = d.surface.at(x);
                }
    };
    std::vector<std::future<void>> tasks;
    for (int t = 0; t < lattice[0]; ++t) tasks.push_back(std::async(std::launch::async, slice, t));
    for (auto& task : tasks) task.get();

    const double cell = rep.volume / sites;
    cplx it = 0.0, ie = 0.0, is = 0.0;
    double scale_v = 0.0, surf_max = 0.0, ident = 0.0, eq = 0.0;
    for (int i = 0; i < sites; ++i) {
        it += rep.theta_dirac_density[i];
        ie += rep.elko_density[i];
        is += rep.surface_density[i];
        scale_v = std::max({scale_v, std::abs(rep.theta_dirac_density[i]), std::abs(rep.elko_density[i])});
        surf_max = std::max(surf_max, std::abs(rep.surface_density[i]));
        ident = std::max(ident, std::abs(rep.theta_dirac_density[i] - rep.elko_density[i] + rep.surface_density[i]));
        eq = std::max(eq, std::abs(rep.theta_dirac_density[i] - rep.elko_density[i]));
    }
    rep.theta_dirac_integral = it * cell;
    rep.elko_integral = ie * cell;
    rep.surface_integral = is * cell;
    rep.theta_dirac_exact = d.theta_dirac.exact_integral(f.box);
    rep.elko_exact = d.elko.exact_integral(f.box);
    rep.surface_exact = d.surface.exact_integral(f.box);
    rep.density_scale = scale_v;
    rep.residual = std::abs(rep.theta_dirac_integral - rep.elko_integral);
    const double denom = scale_v > 0.0 ? scale_v * rep.volume : 1.0;
    rep.relative_residual = rep.residual / denom;
    rep.relative_surface = std::abs(rep.surface_integral) / denom;
    rep.surface_pointwise_max = scale_v > 0.0 ? surf_max / scale_v : surf_max;
    rep.pointwise_identity = scale_v > 0.0 ? ident / scale_v : ident;
    rep.pointwise_equality = scale_v > 0.0 ? eq / scale_v : eq;

    for (const auto& m : f.modes) {
        ModeDiagnostics md;
        try {
            const auto cls = lounesto_class(m.amplitude, tol);
            md.input_class = cls.id;
            if (cls.regular) {
                const auto r = mapping_conditions(m.amplitude, cls.id, tol);
                md.conditions_ok = r.satisfied;
                md.worst_condition_residual = r.max_residual;
            }
        } catch (const std::exception&) {
            md.input_class = 0;
        }
        rep.modes.push_back(md);
    }
    return rep;
}

} // namespace elko
