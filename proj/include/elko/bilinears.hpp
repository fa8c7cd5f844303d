#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "algebra.hpp"

namespace elko {

// S components are ordered 01, 02, 03, 12, 13, 23; all indices are lower
struct BilinearSet {
    double sigma = 0.0;
    double omega = 0.0;
    std::array<double, 4> J{};
    std::array<double, 4> K{};
    std::array<double, 6> S{};
    double imaginary_residue = 0.0;
};

inline constexpr std::array<std::array<int, 2>, 6> kBivectorPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline double minkowski(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    double s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += metric(mu, mu) * a[mu] * b[mu];
    return s;
}

inline double euclidean_norm(const double* v, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += v[i] * v[i];
    return std::sqrt(s);
}

inline constexpr double kRealityTolerance = 1e-10;

inline BilinearSet bilinears(const Spinor& psi) {
    const double n2 = psi.squaredNorm();
    if (!(n2 > 0.0)) throw degenerate_spinor("bilinears of the zero spinor are undefined");
    const RowSpinor bar = psi.adjoint() * gamma_lower(0);
    const Mat4 vol = volume_element();

    BilinearSet b;
    double residue = 0.0;
    auto take = [&](cplx z) {
        residue = std::max(residue, std::abs(z.imag()));
        return z.real();
    };
    b.sigma = take((bar * psi)(0, 0));
    b.omega = take(-(bar * vol * psi)(0, 0));
    for (int mu = 0; mu < 4; ++mu) {
        b.J[mu] = take((bar * gamma_lower(mu) * psi)(0, 0));
        b.K[mu] = take((bar * (I_unit * vol) * gamma_lower(mu) * psi)(0, 0));
    }
    for (int i = 0; i < 6; ++i) {
        const auto [mu, nu] = kBivectorPairs[i];
        b.S[i] = take(0.5 * (bar * (I_unit * gamma_lower(mu)) * gamma_lower(nu) * psi)(0, 0));
    }
    b.imaginary_residue = residue;
    if (residue > kRealityTolerance * n2) {
        std::ostringstream os;
        os << "bilinear covariants carry an imaginary residue " << residue;
        throw inconsistent_bilinears(os.str());
    }
    return b;
}

inline Mat4 current_matrix(const std::array<double, 4>& v_lower) {
    Mat4 m = Mat4::Zero();
    for (int mu = 0; mu < 4; ++mu) m += v_lower[mu] * gamma(mu);
    return m;
}

// sum over every ordered pair mu != nu of S_{mu nu} g^mu g^nu
inline Mat4 bivector_matrix(const std::array<double, 6>& s) {
    Mat4 m = Mat4::Zero();
    for (int i = 0; i < 6; ++i) {
        const auto [mu, nu] = kBivectorPairs[i];
        m += s[i] * (gamma(mu) * gamma(nu) - gamma(nu) * gamma(mu));
    }
    return m;
}

struct FierzResiduals {
    double norm_identity = 0.0;     // J^2 - omega^2 - sigma^2
    double spin_identity = 0.0;     // K^2 + J^2
    double orthogonality = 0.0;     // J.K
    double wedge_identity = 0.0;    // max coefficient of J^K + (omega + sigma g_0123) S

    double max() const {
        return std::max({std::abs(norm_identity), std::abs(spin_identity), std::abs(orthogonality),
                         wedge_identity});
    }
};

inline FierzResiduals fierz_residuals(const BilinearSet& b) {
    FierzResiduals r;
    const double j2 = minkowski(b.J, b.J);
    r.norm_identity = j2 - b.omega * b.omega - b.sigma * b.sigma;
    r.spin_identity = minkowski(b.K, b.K) + j2;
    r.orthogonality = minkowski(b.J, b.K);

    const Mat4 J = current_matrix(b.J), K = current_matrix(b.K);
    const Mat4 wedge = 0.5 * (J * K - K * J);
    const Mat4 rhs = -(b.omega * Mat4::Identity() + b.sigma * volume_element()) * bivector_matrix(b.S);
    r.wedge_identity = multivector_decompose(wedge - rhs).max_abs();
    return r;
}

struct LounestoClass {
    int id = 0;
    bool regular = false;
};

struct ClassifiedSpinor {
    LounestoClass cls;
    BilinearSet bilinears;
    FierzResiduals fierz;
    bool fierz_ok = false;
};

inline ClassifiedSpinor classify(const Spinor& psi, double tol = 1e-10) {
    ClassifiedSpinor out;
    out.bilinears = bilinears(psi);
    const BilinearSet& b = out.bilinears;
    const double n2 = psi.squaredNorm();
    const double zero = tol * n2;
    out.fierz = fierz_residuals(b);
    out.fierz_ok = out.fierz.max() <= 1e-10 * n2 * n2;

    if (euclidean_norm(b.J.data(), 4) <= zero) throw inconsistent_bilinears("current J vanished for a nonzero spinor");
    const bool s_null = std::abs(b.sigma) <= zero;
    const bool w_null = std::abs(b.omega) <= zero;
    const bool k_null = euclidean_norm(b.K.data(), 4) <= zero;
    const bool bi_null = euclidean_norm(b.S.data(), 6) <= zero;

    if (!s_null || !w_null) {
        out.cls.regular = true;
        out.cls.id = (!s_null && !w_null) ? 1 : (!s_null ? 2 : 3);
        return out;
    }
    if (!k_null && !bi_null) out.cls.id = 4;
    else if (k_null && !bi_null) out.cls.id = 5;
    else if (!k_null && bi_null) out.cls.id = 6;
    else throw inconsistent_bilinears("singular spinor with K = 0 and S = 0");
    return out;
}

inline LounestoClass lounesto_class(const Spinor& psi, double tol = 1e-10) { return classify(psi, tol).cls; }

} // namespace elko
