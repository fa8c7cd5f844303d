#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "algebra.hpp"

namespace elko {

enum class AdjointConvention { real_pairing, formal_dagger };

inline std::string to_string(AdjointConvention c) {
    return c == AdjointConvention::real_pairing ? "real-pairing" : "formal-dagger";
}

inline AdjointConvention parse_convention(const std::string& s) {
    if (s == "real-pairing") return AdjointConvention::real_pairing;
    if (s == "formal-dagger") return AdjointConvention::formal_dagger;
    throw argument_error("unknown adjoint convention '" + s + "'");
}

using RealMat8 = Eigen::Matrix<double, 8, 8>;

// psi -> A psi + B conj(psi)
struct RealLinearOp {
    Mat4 A = Mat4::Zero();
    Mat4 B = Mat4::Zero();

    static RealLinearOp identity() { return {Mat4::Identity(), Mat4::Zero()}; }
    static RealLinearOp zero() { return {Mat4::Zero(), Mat4::Zero()}; }
    static RealLinearOp conjugation() { return {Mat4::Zero(), Mat4::Identity()}; }
    static RealLinearOp linear(const Mat4& a) { return {a, Mat4::Zero()}; }
    static RealLinearOp scalar(cplx s) { return {s * Mat4::Identity(), Mat4::Zero()}; }

    bool is_complex_linear(double tol = 0.0) const { return B.cwiseAbs().maxCoeff() <= tol; }
};

inline Spinor rl_apply(const RealLinearOp& op, const Spinor& psi) {
    return op.A * psi + op.B * psi.conjugate();
}

inline RealLinearOp rl_compose(const RealLinearOp& f, const RealLinearOp& g) {
    return {f.A * g.A + f.B * g.B.conjugate(), f.A * g.B + f.B * g.A.conjugate()};
}

inline RealLinearOp operator*(const RealLinearOp& f, const RealLinearOp& g) { return rl_compose(f, g); }

inline RealLinearOp operator+(const RealLinearOp& f, const RealLinearOp& g) { return {f.A + g.A, f.B + g.B}; }
inline RealLinearOp operator-(const RealLinearOp& f, const RealLinearOp& g) { return {f.A - g.A, f.B - g.B}; }

// scalar applied after the operator
inline RealLinearOp operator*(cplx s, const RealLinearOp& f) { return {s * f.A, s * f.B}; }

// entrywise conjugate of both parts (the operator written M^*)
inline RealLinearOp rl_conj(const RealLinearOp& op) { return {op.A.conjugate(), op.B.conjugate()}; }

// action on (Re psi, Im psi)
inline RealMat8 real_representation(const RealLinearOp& op) {
    RealMat8 r;
    const Eigen::Matrix4d ar = op.A.real(), ai = op.A.imag(), br = op.B.real(), bi = op.B.imag();
    r.topLeftCorner<4, 4>() = ar + br;
    r.topRightCorner<4, 4>() = -ai + bi;
    r.bottomLeftCorner<4, 4>() = ai + bi;
    r.bottomRightCorner<4, 4>() = ar - br;
    return r;
}

inline RealLinearOp from_real_representation(const RealMat8& r) {
    const Eigen::Matrix4d r11 = r.topLeftCorner<4, 4>(), r12 = r.topRightCorner<4, 4>();
    const Eigen::Matrix4d r21 = r.bottomLeftCorner<4, 4>(), r22 = r.bottomRightCorner<4, 4>();
    RealLinearOp op;
    op.A.real() = 0.5 * (r11 + r22);
    op.A.imag() = 0.5 * (r21 - r12);
    op.B.real() = 0.5 * (r11 - r22);
    op.B.imag() = 0.5 * (r12 + r21);
    return op;
}

inline double condition_number(const RealMat8& r) {
    Eigen::JacobiSVD<RealMat8> svd(r);
    const auto& s = svd.singularValues();
    if (s(7) == 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / s(7);
}

inline double condition_number(const RealLinearOp& op) { return condition_number(real_representation(op)); }

// spectral norm of the real representation
inline double operator_norm(const RealLinearOp& op) {
    Eigen::JacobiSVD<RealMat8> svd(real_representation(op));
    return svd.singularValues()(0);
}

inline constexpr double kSingularCondition = 1e12;

inline RealLinearOp rl_invert(const RealLinearOp& op) {
    const RealMat8 r = real_representation(op);
    const double cond = condition_number(r);
    if (!(cond < kSingularCondition)) {
        std::ostringstream os;
        os << "real representation is singular (condition number " << cond << ")";
        throw singular_operator(os.str(), cond);
    }
    return from_real_representation(r.inverse());
}

inline RealLinearOp rl_adjoint(const RealLinearOp& op,
                               AdjointConvention convention = AdjointConvention::real_pairing) {
    if (convention == AdjointConvention::real_pairing) return {op.A.adjoint(), op.B.transpose()};
    return {op.A.adjoint(), op.B.adjoint()};
}

inline double real_pairing(const Spinor& phi, const Spinor& psi) { return phi.dot(psi).real(); }

// v -> lin v + anti conj(v); what a row spinor becomes once it has been pushed through an antilinear factor
struct RowFunctional {
    RowSpinor lin = RowSpinor::Zero();
    RowSpinor anti = RowSpinor::Zero();

    static RowFunctional row(const RowSpinor& r) { return {r, RowSpinor::Zero()}; }

    cplx operator()(const Spinor& v) const { return (lin * v)(0, 0) + (anti * v.conjugate())(0, 0); }

    bool is_row_spinor(double tol = 0.0) const { return anti.cwiseAbs().maxCoeff() <= tol; }

    double norm() const { return std::sqrt(lin.squaredNorm() + anti.squaredNorm()); }
};

inline RowFunctional operator*(const RowFunctional& r, const RealLinearOp& op) {
    return {r.lin * op.A + r.anti * op.B.conjugate(), r.lin * op.B + r.anti * op.A.conjugate()};
}

inline RowFunctional operator*(cplx s, const RowFunctional& r) { return {s * r.lin, s * r.anti}; }

inline RowFunctional operator-(const RowFunctional& a, const RowFunctional& b) {
    return {a.lin - b.lin, a.anti - b.anti};
}

inline RowFunctional operator+(const RowFunctional& a, const RowFunctional& b) {
    return {a.lin + b.lin, a.anti + b.anti};
}

} // namespace elko
