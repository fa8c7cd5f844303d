#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spinors.hpp"

namespace elko {

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpinorMomentum {
    double mass = 0.0;
    std::array<double, 3> p{};
    std::optional<double> energy;

    // energy falls back to the mass shell
    FourMomentum four_momentum() const {
        if (!energy) return FourMomentum::on_shell_with(mass, p);
        FourMomentum k = FourMomentum::off_shell(*energy, p);
        k.m = mass;
        k.on_shell = k.dispersion_residual() <= kShellTolerance * std::max(1.0, k.E * k.E);
        return k;
    }
};

struct SpinorFile {
    Spinor components = Spinor::Zero();
    std::optional<SpinorMomentum> momentum;
    std::optional<nlohmann::json> label;
};

namespace detail {

inline int line_of(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// best effort: the line holding the first occurrence of "key"
inline int line_of_key(const std::string& text, const std::string& key) {
    const auto pos = text.find('"' + key + '"');
    return pos == std::string::npos ? 0 : line_of(text, pos);
}

class FieldError {
  public:
    FieldError(const std::string& source, const std::string& text) : source_(source), text_(text) {}

    [[noreturn]] void fail(const std::string& key, const std::string& path, const std::string& what) const {
        std::ostringstream os;
        os << source_;
        if (const int line = key.empty() ? 0 : line_of_key(text_, key); line > 0) os << ":" << line;
        os << ": field '" << path << "': " << what;
        throw schema_error(os.str());
    }

  private:
    std::string source_;
    const std::string& text_;
};

inline double finite_number(const nlohmann::json& v, const FieldError& err, const std::string& key,
                            const std::string& path) {
    if (!v.is_number()) err.fail(key, path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) err.fail(key, path, "value is not finite");
    return d;
}

} // namespace detail

inline SpinorFile parse_spinor_file(const std::string& text, const std::string& source = "<input>") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::ostringstream os;
        os << source << ":" << detail::line_of(text, e.byte > 0 ? e.byte - 1 : 0) << ": malformed JSON: " << e.what();
        throw schema_error(os.str());
    }
    const detail::FieldError err(source, text);
    if (!doc.is_object()) err.fail("", "$", "top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "components" && key != "momentum" && key != "label") err.fail(key, key, "unknown field");

    SpinorFile f;
    if (!doc.contains("components")) err.fail("", "components", "missing required field");
    const auto& comps = doc["components"];
    if (!comps.is_array()) err.fail("components", "components", "expected an array of 4 [re, im] pairs");
    if (comps.size() != 4)
        err.fail("components", "components", "expected exactly 4 components, found " + std::to_string(comps.size()));
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string path = "components[" + std::to_string(i) + "]";
        const auto& c = comps[i];
        if (!c.is_array() || c.size() != 2) err.fail("components", path, "expected a [re, im] pair");
        f.components(static_cast<int>(i)) = cplx(detail::finite_number(c[0], err, "components", path + "[0]"),
                                                 detail::finite_number(c[1], err, "components", path + "[1]"));
    }

    if (doc.contains("momentum")) {
        const auto& m = doc["momentum"];
        if (!m.is_object()) err.fail("momentum", "momentum", "expected an object");
        for (const auto& [key, _] : m.items())
            if (key != "mass" && key != "p" && key != "energy") err.fail(key, "momentum." + key, "unknown field");
        SpinorMomentum sm;
        if (!m.contains("mass")) err.fail("momentum", "momentum.mass", "missing required field");
        sm.mass = detail::finite_number(m["mass"], err, "mass", "momentum.mass");
        if (!(sm.mass > 0.0)) err.fail("mass", "momentum.mass", "mass must be positive");
        if (!m.contains("p")) err.fail("momentum", "momentum.p", "missing required field");
        const auto& p = m["p"];
        if (!p.is_array() || p.size() != 3) err.fail("p", "momentum.p", "expected [px, py, pz]");
        for (std::size_t i = 0; i < 3; ++i)
            sm.p[i] = detail::finite_number(p[i], err, "p", "momentum.p[" + std::to_string(i) + "]");
        if (m.contains("energy")) sm.energy = detail::finite_number(m["energy"], err, "energy", "momentum.energy");
        f.momentum = sm;
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_object() && !doc["label"].is_string())
            err.fail("label", "label", "expected a string or an object");
        f.label = doc["label"];
    }
    return f;
}

inline SpinorFile read_spinor_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw schema_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spinor_file(ss.str(), path);
}

inline nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline nlohmann::json spinor_json(const Spinor& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) a.push_back(complex_json(v(i)));
    return a;
}

inline nlohmann::json to_json(const SpinorFile& f) {
    nlohmann::json doc;
    doc["components"] = spinor_json(f.components);
    if (f.momentum) {
        nlohmann::json m;
        m["mass"] = f.momentum->mass;
        m["p"] = f.momentum->p;
        if (f.momentum->energy) m["energy"] = *f.momentum->energy;
        doc["momentum"] = m;
    }
    if (f.label) doc["label"] = *f.label;
    return doc;
}

inline std::string dump_spinor_file(const SpinorFile& f) { return to_json(f).dump(2) + "\n"; }

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << text;
    if (!out) throw std::runtime_error(path + ": write failed");
}

inline SpinorFile spinor_file_from(const ElkoSpinor& l, const std::string& helicity_flag) {
    SpinorFile f;
    f.components = l.value;
    SpinorMomentum sm;
    sm.mass = l.momentum.m;
    sm.p = l.momentum.p;
    sm.energy = l.momentum.E;
    f.momentum = sm;
    f.label = nlohmann::json{{"conjugacy", l.label.conjugacy == Conjugacy::S ? "S" : "A"},
                             {"helicity", helicity_flag},
                             {"theta", l.theta},
                             {"phi", l.phi}};
    return f;
}

} // namespace elko
