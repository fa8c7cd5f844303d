#pragma once

#include <array>
#include <cmath>
#include <functional>

#include <Eigen/Dense>

namespace elko {

// forward-mode dual number with N tangent directions
template <int N>
struct Dual {
    double v = 0.0;
    std::array<double, N> d{};

    Dual() = default;
    Dual(double value) : v(value) {}

    static Dual variable(double value, int slot) {
        Dual x(value);
        x.d[slot] = 1.0;
        return x;
    }

    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r(a.v + b.v);
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r(a.v - b.v);
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
        return r;
    }
    friend Dual operator-(const Dual& a) {
        Dual r(-a.v);
        for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
        return r;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r(a.v * b.v);
        for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
        return r;
    }
};

inline double value_of(double x) { return x; }
template <int N>
double value_of(const Dual<N>& x) { return x.v; }

struct SolverOptions {
    int max_iterations = 200;
    double tolerance = 1e-12;
    double damping = 0.5;
    int max_halvings = 40;
};

struct SolverResult {
    Eigen::VectorXd x;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

// F(x) -> (residual vector, Jacobian). Least-squares Newton steps with step halving on increase.
template <class F>
SolverResult damped_gauss_newton(F&& system, Eigen::VectorXd x, const SolverOptions& opt = {}) {
    SolverResult out;
    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    system(x, r, jac);
    double norm = r.norm();
    int it = 0;
    for (; it < opt.max_iterations && norm > opt.tolerance; ++it) {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
        const Eigen::VectorXd step = cod.solve(-r);
        double t = 1.0;
        bool improved = false;
        for (int h = 0; h <= opt.max_halvings; ++h) {
            Eigen::VectorXd trial = x + t * step;
            Eigen::VectorXd rt;
            Eigen::MatrixXd jt;
            system(trial, rt, jt);
            const double nt = rt.norm();
            if (std::isfinite(nt) && nt < norm) {
                x = trial;
                r = rt;
                jac = jt;
                norm = nt;
                improved = true;
                break;
            }
            t *= opt.damping;
        }
        if (!improved) break;
    }
    out.x = x;
    out.residual = norm;
    out.iterations = it;
    out.converged = norm <= opt.tolerance;
    return out;
}

} // namespace elko
