#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "algebra.hpp"
#include "real_linear.hpp"

namespace elko {

struct FourMomentum {
    double E = 0.0;
    std::array<double, 3> p{0.0, 0.0, 0.0};
    double m = 0.0;
    bool on_shell = false;

    static FourMomentum at_rest(double mass) { return on_shell_with(mass, {0.0, 0.0, 0.0}); }

    static FourMomentum on_shell_with(double mass, const std::array<double, 3>& p3) {
        if (!(mass >= 0.0) || !std::isfinite(mass)) throw argument_error("mass must be finite and >= 0");
        FourMomentum k;
        k.m = mass;
        k.p = p3;
        k.E = std::sqrt(mass * mass + p3[0] * p3[0] + p3[1] * p3[1] + p3[2] * p3[2]);
        k.on_shell = true;
        return k;
    }

    static FourMomentum off_shell(double energy, const std::array<double, 3>& p3) {
        FourMomentum k;
        k.E = energy;
        k.p = p3;
        const double s = k.square();
        k.m = s > 0.0 ? std::sqrt(s) : 0.0;
        k.on_shell = false;
        return k;
    }

    double p_norm() const { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }
    double square() const { return E * E - p[0] * p[0] - p[1] * p[1] - p[2] * p[2]; }

    std::array<double, 4> lower() const { return {E, -p[0], -p[1], -p[2]}; }
    std::array<double, 4> upper() const { return {E, p[0], p[1], p[2]}; }

    FourMomentum negated() const {
        FourMomentum k = *this;
        k.E = -E;
        for (auto& x : k.p) x = -x;
        k.on_shell = false;
        return k;
    }

    double dispersion_residual() const { return std::abs(square() - m * m); }
};

inline Mat4 slash(const FourMomentum& k) { return slash(k.lower()); }

inline Mat2 sigma_dot(const std::array<double, 3>& v) {
    return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3);
}

inline std::array<double, 3> direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

enum class Helicity { plus, minus };
enum class Conjugacy { S, A };
// (-,+) and (+,-)
enum class HelicityPair { minus_plus, plus_minus };

struct ElkoLabel {
    Conjugacy conjugacy = Conjugacy::S;
    HelicityPair pair = HelicityPair::minus_plus;

    bool operator==(const ElkoLabel&) const = default;

    ElkoLabel partner() const {
        return {conjugacy, pair == HelicityPair::minus_plus ? HelicityPair::plus_minus : HelicityPair::minus_plus};
    }

    static std::array<ElkoLabel, 4> all() {
        return {{{Conjugacy::S, HelicityPair::minus_plus},
                 {Conjugacy::S, HelicityPair::plus_minus},
                 {Conjugacy::A, HelicityPair::minus_plus},
                 {Conjugacy::A, HelicityPair::plus_minus}}};
    }
};

inline std::string to_string(const ElkoLabel& l) {
    std::string s = l.conjugacy == Conjugacy::S ? "S" : "A";
    s += l.pair == HelicityPair::minus_plus ? "(-,+)" : "(+,-)";
    return s;
}

struct ElkoSpinor {
    ElkoLabel label;
    double theta = 0.0;
    double phi = 0.0;
    FourMomentum momentum;
    Spinor value = Spinor::Zero();
};

inline Mat2 wigner_phi() { return -I_unit * pauli(2); }

inline Vec2 rest_weyl(Helicity h, double theta, double phi, double m) {
    if (!(m > 0.0)) throw argument_error("rest spinor needs m > 0");
    const double s = std::sqrt(m);
    const cplx em = std::exp(-I_unit * (phi / 2.0));
    const cplx ep = std::exp(I_unit * (phi / 2.0));
    const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
    Vec2 v;
    if (h == Helicity::plus)
        v << s * c * em, s * sn * ep;
    else
        v << -s * sn * em, s * c * ep;
    return v;
}

// lower block is phi^+ for (-,+) and phi^- for (+,-); the sign of the upper block selects S or A
inline ElkoSpinor elko_rest(const ElkoLabel& label, double theta, double phi, double m) {
    if (!(m > 0.0)) throw argument_error("ELKO construction needs m > 0");
    const Vec2 lower = rest_weyl(label.pair == HelicityPair::minus_plus ? Helicity::plus : Helicity::minus,
                                 theta, phi, m);
    const double sign = label.conjugacy == Conjugacy::S ? 1.0 : -1.0;
    const Vec2 upper = sign * (pauli(2) * lower.conjugate());
    ElkoSpinor e;
    e.label = label;
    e.theta = theta;
    e.phi = phi;
    e.momentum = FourMomentum::at_rest(m);
    e.value << upper, lower;
    return e;
}

inline constexpr double kShellTolerance = 1e-12;

inline Mat4 boost_matrix(const FourMomentum& k) {
    if (!(k.m > 0.0)) throw precondition_error("boost needs m > 0");
    const double scale = std::max(1.0, k.E * k.E);
    if (k.dispersion_residual() > kShellTolerance * scale || k.E < 0.0) {
        std::ostringstream os;
        os << "boost needs an on-shell momentum, |E^2 - p^2 - m^2| = " << k.dispersion_residual();
        throw precondition_error(os.str());
    }
    const double n = std::sqrt((k.E + k.m) / (2.0 * k.m));
    const Mat2 sp = sigma_dot(k.p) / (k.E + k.m);
    const Mat2 one = Mat2::Identity();
    return n * blocks(one + sp, Mat2::Zero(), Mat2::Zero(), one - sp);
}

inline ElkoSpinor make_elko(const ElkoLabel& label, double theta, double phi, const FourMomentum& k) {
    ElkoSpinor e = elko_rest(label, theta, phi, k.m);
    e.momentum = k;
    e.value = boost_matrix(k) * e.value;
    return e;
}

// C psi = -gamma^2 psi^*
inline RealLinearOp charge_conjugation() { return {Mat4::Zero(), -gamma(2)}; }

inline Spinor charge_conjugate(const Spinor& psi) { return rl_apply(charge_conjugation(), psi); }

// ((0, i Phi), (-i Phi, 0)) K with Phi the Wigner operator
inline Spinor charge_conjugate_block(const Spinor& psi) {
    const Mat2 f = wigner_phi();
    return blocks(Mat2::Zero(), I_unit * f, -I_unit * f, Mat2::Zero()) * psi.conjugate();
}

enum class DualSignRule { helicity_label, conjugacy };

inline std::string to_string(DualSignRule r) {
    return r == DualSignRule::helicity_label ? "tracks-helicity-label" : "tracks-conjugacy";
}

// +i for (-,+), -i for (+,-); partner taken with the same angles and momentum
inline RowSpinor elko_dual(const ElkoSpinor& l, DualSignRule rule = DualSignRule::helicity_label) {
    const ElkoSpinor partner = make_elko(l.label.partner(), l.theta, l.phi, l.momentum);
    double sign = 0.0;
    if (rule == DualSignRule::helicity_label)
        sign = l.label.pair == HelicityPair::minus_plus ? 1.0 : -1.0;
    else
        sign = l.label.conjugacy == Conjugacy::S ? 1.0 : -1.0;
    return (sign * I_unit) * partner.value.adjoint() * gamma(0);
}

inline cplx dual_norm(const ElkoSpinor& l, DualSignRule rule = DualSignRule::helicity_label) {
    return (elko_dual(l, rule) * l.value)(0, 0);
}

} // namespace elko
