#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "real_linear.hpp"

namespace elko {

struct CheckRecord {
    std::string id;
    std::string anchor;   // the identity being checked, in words
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool gating = true;
    bool lower_bound = false;   // passes when residual exceeds tolerance instead
    std::optional<cplx> value;
    std::string note;
};

// passes when residual <= tolerance; NaN never passes
inline CheckRecord check(std::string id, std::string anchor, double residual, double tolerance, bool gating = true) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.gating = gating;
    return r;
}

inline CheckRecord check_above(std::string id, std::string anchor, double value, double floor, bool gating = true) {
    CheckRecord r = check(std::move(id), std::move(anchor), value, floor, gating);
    r.lower_bound = true;
    r.passed = value > floor;
    return r;
}

inline std::string format17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

enum class Source { flag, environment, fallback };

inline std::string to_string(Source s) {
    switch (s) {
    case Source::flag: return "flag";
    case Source::environment: return "environment";
    default: return "default";
    }
}

struct RunConfig {
    std::string suite = "all";
    std::uint64_t seed = 42;
    double tol = 1e-10;
    AdjointConvention convention = AdjointConvention::real_pairing;
    int epsilon = 1;
    bool parallel = false;
    std::map<std::string, Source> sources;
};

struct VerificationReport {
    std::string suite;
    RunConfig config;
    std::vector<CheckRecord> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.gating && !c.passed) return false;
        return true;
    }
};

inline nlohmann::json to_json(const CheckRecord& c) {
    nlohmann::json j{{"id", c.id},
                     {"anchor", c.anchor},
                     {"residual", format17(c.residual)},
                     {"tolerance", format17(c.tolerance)},
                     {"passed", c.passed},
                     {"gating", c.gating},
                     {"comparison", c.lower_bound ? "residual > tolerance" : "residual <= tolerance"}};
    if (c.value) j["value"] = nlohmann::json::array({c.value->real(), c.value->imag()});
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json src = nlohmann::json::object();
    for (const auto& [k, v] : cfg.sources) src[k] = to_string(v);
    return {{"suite", cfg.suite},
            {"seed", cfg.seed},
            {"tol", format17(cfg.tol)},
            {"adjoint_convention", to_string(cfg.convention)},
            {"epsilon", cfg.epsilon},
            {"parallel", cfg.parallel},
            {"sources", src}};
}

// nlohmann::json keeps object keys sorted, which fixes the byte layout
inline std::string dump_report(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    int failed = 0, gating_failed = 0;
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
        if (!c.passed) {
            ++failed;
            if (c.gating) ++gating_failed;
        }
    }
    nlohmann::json doc{{"suite", r.suite},
                       {"config", to_json(r.config)},
                       {"checks", checks},
                       {"summary",
                        {{"total", r.checks.size()}, {"failed", failed}, {"gating_failed", gating_failed}}},
                       {"status", r.passed() ? "pass" : "fail"}};
    return doc.dump(2) + "\n";
}

} // namespace elko
