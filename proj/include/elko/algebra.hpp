#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace elko {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Vec2 = Eigen::Matrix<cplx, 2, 1>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Spinor = Eigen::Matrix<cplx, 4, 1>;
using RowSpinor = Eigen::Matrix<cplx, 1, 4>;

inline constexpr cplx I_unit{0.0, 1.0};

// signature (+,-,-,-)
constexpr double metric(int mu, int nu) {
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

inline Mat2 pauli(int k) {
    Mat2 s = Mat2::Zero();
    switch (k) {
    case 0: s = Mat2::Identity(); break;
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = -I_unit; s(1, 0) = I_unit; break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: throw argument_error("pauli index must be 0..3, got " + std::to_string(k));
    }
    return s;
}

inline Mat4 blocks(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
    Mat4 m;
    m << a, b, c, d;
    return m;
}

namespace detail {

inline Mat4 gamma_upper(int mu) {
    const Mat2 z = Mat2::Zero();
    if (mu == 0) return blocks(z, Mat2::Identity(), Mat2::Identity(), z);
    return blocks(z, -pauli(mu), pauli(mu), z);
}

} // namespace detail

// Weyl representation, upper index. Index 5 is the chirality product -i g^0 g^1 g^2 g^3.
inline Mat4 gamma(int index) {
    if (index >= 0 && index <= 3) return detail::gamma_upper(index);
    if (index == 5) {
        return -I_unit * detail::gamma_upper(0) * detail::gamma_upper(1) * detail::gamma_upper(2) *
               detail::gamma_upper(3);
    }
    throw argument_error("gamma index must be one of 0,1,2,3,5, got " + std::to_string(index));
}

inline Mat4 gamma_lower(int mu) {
    if (mu < 0 || mu > 3) throw argument_error("lower gamma index must be 0..3, got " + std::to_string(mu));
    return metric(mu, mu) * detail::gamma_upper(mu);
}

// g_0 g_1 g_2 g_3
inline Mat4 volume_element() {
    return gamma_lower(0) * gamma_lower(1) * gamma_lower(2) * gamma_lower(3);
}

inline Mat4 slash(const std::array<double, 4>& p_lower) {
    Mat4 m = Mat4::Zero();
    for (int mu = 0; mu < 4; ++mu) m += p_lower[mu] * gamma(mu);
    return m;
}

// -------- multivectors on the basis generated by the lower-index gammas

inline constexpr int kBasisSize = 16;

inline const std::array<std::vector<int>, kBasisSize>& basis_blades() {
    static const std::array<std::vector<int>, kBasisSize> blades = {{
        {},
        {0}, {1}, {2}, {3},
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
        {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
        {0, 1, 2, 3},
    }};
    return blades;
}

inline int blade_grade(int slot) { return static_cast<int>(basis_blades().at(slot).size()); }

inline int blade_slot(const std::vector<int>& indices) {
    const auto& b = basis_blades();
    for (int i = 0; i < kBasisSize; ++i)
        if (b[i] == indices) return i;
    throw argument_error("indices are not an ordered basis blade");
}

inline const std::array<Mat4, kBasisSize>& basis_matrices() {
    static const std::array<Mat4, kBasisSize> mats = [] {
        std::array<Mat4, kBasisSize> out;
        for (int i = 0; i < kBasisSize; ++i) {
            Mat4 m = Mat4::Identity();
            for (int mu : basis_blades()[i]) m = m * gamma_lower(mu);
            out[i] = m;
        }
        return out;
    }();
    return mats;
}

// Each blade squares to +-1, so its inverse is the reversed product of g_mu^{-1} = eta_mumu g_mu.
inline const std::array<Mat4, kBasisSize>& basis_inverses() {
    static const std::array<Mat4, kBasisSize> inv = [] {
        std::array<Mat4, kBasisSize> out;
        for (int i = 0; i < kBasisSize; ++i) {
            Mat4 m = Mat4::Identity();
            const auto& b = basis_blades()[i];
            for (auto it = b.rbegin(); it != b.rend(); ++it) m = m * (metric(*it, *it) * gamma_lower(*it));
            out[i] = m;
        }
        return out;
    }();
    return inv;
}

struct Multivector {
    std::array<cplx, kBasisSize> c{};

    cplx& operator[](int i) { return c[i]; }
    const cplx& operator[](int i) const { return c[i]; }

    Multivector operator+(const Multivector& o) const {
        Multivector r;
        for (int i = 0; i < kBasisSize; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Multivector operator-(const Multivector& o) const {
        Multivector r;
        for (int i = 0; i < kBasisSize; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Multivector operator*(cplx s) const {
        Multivector r;
        for (int i = 0; i < kBasisSize; ++i) r.c[i] = s * c[i];
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : c) m = std::max(m, std::abs(x));
        return m;
    }
};

inline Multivector multivector_decompose(const Mat4& m) {
    Multivector v;
    const auto& inv = basis_inverses();
    for (int i = 0; i < kBasisSize; ++i) v.c[i] = (inv[i] * m).trace() / 4.0;
    return v;
}

inline Mat4 reconstruct(const Multivector& v) {
    Mat4 m = Mat4::Zero();
    const auto& basis = basis_matrices();
    for (int i = 0; i < kBasisSize; ++i) m += v.c[i] * basis[i];
    return m;
}

inline Multivector grade_part(const Multivector& v, int k) {
    Multivector r;
    for (int i = 0; i < kBasisSize; ++i)
        if (blade_grade(i) == k) r.c[i] = v.c[i];
    return r;
}

inline Multivector reversion(const Multivector& v) {
    Multivector r;
    for (int i = 0; i < kBasisSize; ++i) {
        const int k = blade_grade(i);
        const int s = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
        r.c[i] = static_cast<double>(s) * v.c[i];
    }
    return r;
}

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
    return multivector_decompose(reconstruct(a) * reconstruct(b));
}

} // namespace elko
