#pragma once

#include <stdexcept>
#include <string>

namespace elko {

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct degenerate_spinor : std::domain_error {
    using std::domain_error::domain_error;
};

// J fell below the nullity threshold; a single spinor never does that
struct inconsistent_bilinears : std::domain_error {
    using std::domain_error::domain_error;
};

struct singular_operator : std::runtime_error {
    double condition;
    singular_operator(const std::string& what, double cond)
        : std::runtime_error(what), condition(cond) {}
};

struct singular_map : singular_operator {
    using singular_operator::singular_operator;
};

struct singular_propagator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct solver_failure : std::runtime_error {
    double residual;
    int iterations;
    solver_failure(const std::string& what, double r, int it)
        : std::runtime_error(what), residual(r), iterations(it) {}
};

} // namespace elko
