#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "real_linear.hpp"
#include "spinors.hpp"

namespace elko {

// Every random draw in suites and tests goes through this so runs are reproducible from one seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double normal() { return normal_(rng_); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
    std::uint64_t next_seed() { return rng_(); }

    cplx complex() { return {normal(), normal()}; }

    Spinor spinor() {
        Spinor s;
        for (int i = 0; i < 4; ++i) s(i) = complex();
        return s;
    }

    RowSpinor row() { return spinor().transpose(); }

    Mat4 matrix() {
        Mat4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = complex();
        return m;
    }

    RealLinearOp op() { return {matrix(), matrix()}; }

    double angle_theta() { return uniform(0.0, std::numbers::pi); }
    double angle_phi() { return uniform(0.0, 2.0 * std::numbers::pi); }

    FourMomentum on_shell(double m) { return FourMomentum::on_shell_with(m, {normal(), normal(), normal()}); }

    // p_y = 0, kept away from the mass shell and from the light cone
    FourMomentum off_shell_xz(double m_D, double margin = 0.1) {
        for (;;) {
            const FourMomentum p = FourMomentum::off_shell(uniform(-3.0, 3.0), {1.5 * normal(), 0.0, 1.5 * normal()});
            const double p2 = p.square();
            if (std::abs(p2 - m_D * m_D) > margin && std::abs(p2) > margin) return p;
        }
    }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace elko
