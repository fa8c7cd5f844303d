#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <elko/io.hpp>
#include <elko/suites.hpp>

using namespace elko;

namespace {

enum Exit : int { ok = 0, failed_checks = 1, usage = 2, degenerate = 3, conditions_failed = 4 };

std::string fmt(double v) { return format17(v); }

std::array<double, 3> parse_triple(const std::string& text, const std::string& flag) {
    std::array<double, 3> out{};
    std::stringstream ss(text);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= 3) throw argument_error(flag + " expects three comma-separated numbers");
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw argument_error(flag + ": '" + item + "' is not a number");
        }
        if (used != item.size() || !std::isfinite(v)) throw argument_error(flag + ": '" + item + "' is not a finite number");
        out[n++] = v;
    }
    if (n != 3) throw argument_error(flag + " expects three comma-separated numbers");
    return out;
}

// flag > ELKO_* environment > default; the winner is recorded for the report
template <class T, class Parse>
void resolve(CLI::Option* opt, const char* env, const char* key, T& value, Parse parse, RunConfig& cfg) {
    if (opt->count() > 0) {
        cfg.sources[key] = Source::flag;
        return;
    }
    if (const char* raw = std::getenv(env); raw && *raw) {
        try {
            value = parse(std::string(raw));
        } catch (const std::exception& e) {
            throw argument_error(std::string(env) + ": " + e.what());
        }
        cfg.sources[key] = Source::environment;
        return;
    }
    cfg.sources[key] = Source::fallback;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw argument_error("'" + s + "' is not a finite number");
    return v;
}

int parse_epsilon(const std::string& s) {
    if (s == "1" || s == "+1") return 1;
    if (s == "-1") return -1;
    throw argument_error("epsilon must be +1 or -1, got '" + s + "'");
}

bool parse_bool(const std::string& s) {
    if (s == "1" || s == "true" || s == "on" || s == "yes") return true;
    if (s == "0" || s == "false" || s == "off" || s == "no") return false;
    throw argument_error("expected a boolean, got '" + s + "'");
}

void print_array(std::ostream& os, const char* name, const double* v, int n) {
    os << name << ": [";
    for (int i = 0; i < n; ++i) os << (i ? ", " : "") << fmt(v[i]);
    os << "]\n";
}

int cmd_classify(const std::string& input, double tol, const std::string& report) {
    const SpinorFile f = read_spinor_file(input);
    ClassifiedSpinor c;
    try {
        c = classify(f.components, tol);
    } catch (const degenerate_spinor& e) {
        std::cerr << "degenerate spinor: " << e.what() << "\n";
        return degenerate;
    } catch (const inconsistent_bilinears& e) {
        std::cerr << "degenerate spinor: " << e.what() << "\n";
        return degenerate;
    }
    const auto& b = c.bilinears;
    std::cout << "class: " << c.cls.id << "\n";
    std::cout << "regular: " << (c.cls.regular ? "true" : "false") << "\n";
    std::cout << "sigma: " << fmt(b.sigma) << "\n";
    std::cout << "omega: " << fmt(b.omega) << "\n";
    print_array(std::cout, "J", b.J.data(), 4);
    print_array(std::cout, "K", b.K.data(), 4);
    print_array(std::cout, "S", b.S.data(), 6);
    std::cout << "fierz.norm_identity: " << fmt(c.fierz.norm_identity) << "\n";
    std::cout << "fierz.spin_identity: " << fmt(c.fierz.spin_identity) << "\n";
    std::cout << "fierz.orthogonality: " << fmt(c.fierz.orthogonality) << "\n";
    std::cout << "fierz.wedge_identity: " << fmt(c.fierz.wedge_identity) << "\n";
    if (!report.empty()) {
        nlohmann::json j{{"input", input},
                         {"tol", fmt(tol)},
                         {"class", c.cls.id},
                         {"regular", c.cls.regular},
                         {"bilinears",
                          {{"sigma", fmt(b.sigma)},
                           {"omega", fmt(b.omega)},
                           {"J", b.J},
                           {"K", b.K},
                           {"S", b.S}}},
                         {"fierz",
                          {{"norm_identity", fmt(c.fierz.norm_identity)},
                           {"spin_identity", fmt(c.fierz.spin_identity)},
                           {"orthogonality", fmt(c.fierz.orthogonality)},
                           {"wedge_identity", fmt(c.fierz.wedge_identity)},
                           {"within_tolerance", c.fierz_ok}}}};
        write_text(report, j.dump(2) + "\n");
    }
    return ok;
}

int cmd_make_elko(const std::string& conj, const std::string& hel, double theta, double phi, double mass,
                  const std::string& p_text, const std::string& out) {
    if (!(mass > 0.0)) throw argument_error("--mass must be positive");
    const ElkoLabel label{conj == "S" ? Conjugacy::S : Conjugacy::A,
                          hel == "mp" ? HelicityPair::minus_plus : HelicityPair::plus_minus};
    const FourMomentum k = FourMomentum::on_shell_with(mass, parse_triple(p_text, "--p"));
    const ElkoSpinor l = make_elko(label, theta, phi, k);
    const std::string text = dump_spinor_file(spinor_file_from(l, hel));
    if (out.empty())
        std::cout << text;
    else
        write_text(out, text);
    return ok;
}

int cmd_map(const std::string& input, int cls, int epsilon, const std::string& p_text, double mass, double tol,
            const std::string& out, const std::string& report) {
    if (!(mass > 0.0)) throw argument_error("--mass must be positive");
    const SpinorFile f = read_spinor_file(input);
    const FourMomentum k = FourMomentum::on_shell_with(mass, parse_triple(p_text, "--p"));
    const MappingOperator M = ansatz_M(epsilon, k);
    const ConstraintReport cond = mapping_conditions(f.components, cls, tol);
    const MapRecord rec = map_to_elko(M, f.components, tol);

    std::cout << "input class: " << rec.input_class << "\n";
    std::cout << "requested class: " << cls << "\n";
    std::cout << "condition residuals (tolerance " << fmt(cond.tolerance) << "):\n";
    auto row = [](const std::string& name, double v, double t) {
        std::cout << "  " << std::left << std::setw(18) << name << fmt(v) << (std::abs(v) <= t ? "  ok" : "  FAIL")
                  << "\n";
    };
    for (int i = 0; i < 4; ++i) row("common[" + std::to_string(i) + "]", cond.common[i], cond.tolerance);
    for (int i = 0; i < 2; ++i) row("components[" + std::to_string(i) + "]", cond.components[i], cond.tolerance);
    for (int i = 0; i < 2; ++i) row("class[" + std::to_string(i) + "]", cond.class_specific[i], cond.tolerance);
    std::cout << "output class: " << rec.output_class << "\n";
    std::cout << "C lambda = +lambda residual: " << fmt(rec.c_plus_residual) << "\n";
    std::cout << "C lambda = -lambda residual: " << fmt(rec.c_minus_residual) << "\n";
    std::cout << "M condition number: " << fmt(M.condition) << "\n";

    SpinorFile lf;
    lf.components = rec.lambda;
    if (f.momentum) lf.momentum = f.momentum;
    lf.label = nlohmann::json{{"mapped_from", input}, {"class", cls}, {"epsilon", epsilon}};
    const std::string text = dump_spinor_file(lf);
    if (out.empty())
        std::cout << text;
    else
        write_text(out, text);

    const bool pass = cond.satisfied && rec.input_class == cls;
    if (!report.empty()) {
        nlohmann::json j{{"input", input},
                         {"class", cls},
                         {"input_class", rec.input_class},
                         {"epsilon", epsilon},
                         {"map_momentum", k.p},
                         {"mass", mass},
                         {"tolerance", fmt(cond.tolerance)},
                         {"common", {fmt(cond.common[0]), fmt(cond.common[1]), fmt(cond.common[2]), fmt(cond.common[3])}},
                         {"components", {fmt(cond.components[0]), fmt(cond.components[1])}},
                         {"class_specific", {fmt(cond.class_specific[0]), fmt(cond.class_specific[1])}},
                         {"max_residual", fmt(cond.max_residual)},
                         {"conditions_satisfied", cond.satisfied},
                         {"output_class", rec.output_class},
                         {"c_plus_residual", fmt(rec.c_plus_residual)},
                         {"c_minus_residual", fmt(rec.c_minus_residual)},
                         {"lambda", spinor_json(rec.lambda)},
                         {"status", pass ? "pass" : "fail"}};
        write_text(report, j.dump(2) + "\n");
    }
    if (!pass) {
        if (rec.input_class != cls)
            std::cerr << "input is class " << rec.input_class << ", not the requested class " << cls << "\n";
        if (!cond.satisfied)
            std::cerr << "mapping conditions violated: max residual " << fmt(cond.max_residual) << " > "
                      << fmt(cond.tolerance) << "\n";
        return conditions_failed;
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& report) {
    const VerificationReport rep = run_suite(cfg);
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << (c.gating ? "" : "[diagnostic] ") << c.id
                  << "  residual=" << fmt(c.residual) << (c.lower_bound ? " > " : " <= ") << fmt(c.tolerance)
                  << "\n";
    }
    std::cout << "status: " << (rep.passed() ? "pass" : "fail") << "\n";
    if (!report.empty()) write_text(report, dump_report(rep));
    return rep.passed() ? ok : failed_checks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ELKO spinor toolkit: construction, classification, mapping and verification"};
    app.require_subcommand(1);

    double tol = 1e-10;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a spinor file into Lounesto classes");
    std::string classify_in, classify_report;
    classify_cmd->add_option("input", classify_in, "SpinorFile JSON")->required();
    auto* classify_tol = classify_cmd->add_option("--tol", tol, "relative nullity tolerance");
    classify_cmd->add_option("--report", classify_report, "write a JSON report here");

    auto* make_cmd = app.add_subcommand("make-elko", "Construct an ELKO spinor");
    std::string conj, hel, p_make = "0,0,0", make_out;
    double theta = 0.0, phi = 0.0, mass_make = 1.0;
    make_cmd->add_option("--conjugacy", conj, "S or A")->required()->check(CLI::IsMember({"S", "A"}));
    make_cmd->add_option("--helicity", hel, "mp for (-,+), pm for (+,-)")->required()->check(CLI::IsMember({"mp", "pm"}));
    make_cmd->add_option("--theta", theta, "polar angle of the spin axis");
    make_cmd->add_option("--phi", phi, "azimuth of the spin axis");
    make_cmd->add_option("--mass", mass_make, "mass, > 0");
    make_cmd->add_option("--p", p_make, "three-momentum px,py,pz");
    make_cmd->add_option("--out", make_out, "output path (default: standard output)");

    auto* map_cmd = app.add_subcommand("map", "Apply the mapping operator to a Dirac spinor");
    std::string map_in, p_map, map_out, map_report, eps_map_text;
    int map_class = 0;
    double mass_map = 1.0;
    map_cmd->add_option("input", map_in, "SpinorFile JSON")->required();
    map_cmd->add_option("--class", map_class, "Lounesto class of the input, 1..3")->required()->check(CLI::Range(1, 3));
    auto* map_eps = map_cmd->add_option("--epsilon", eps_map_text, "+1 or -1");
    map_cmd->add_option("--p", p_map, "momentum at which M is built (default 0.3,0,0.4 times the mass)");
    map_cmd->add_option("--mass", mass_map, "mass, > 0");
    auto* map_tol = map_cmd->add_option("--tol", tol, "relative tolerance");
    map_cmd->add_option("--out", map_out, "write the mapped spinor here (default: standard output)");
    map_cmd->add_option("--report", map_report, "write a JSON constraint report here");

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    RunConfig cfg;
    std::string verify_report, conv_text, eps_text;
    verify_cmd->add_option("suite", cfg.suite, "algebra | elko | lounesto | mapping | theta | all")->required();
    auto* seed_opt = verify_cmd->add_option("--seed", cfg.seed, "random seed");
    auto* verify_tol = verify_cmd->add_option("--tol", cfg.tol, "tolerance for the 1e-10 class of checks");
    auto* conv_opt = verify_cmd->add_option("--adjoint-convention", conv_text, "real-pairing | formal-dagger")
                         ->check(CLI::IsMember({"real-pairing", "formal-dagger"}));
    auto* eps_opt = verify_cmd->add_option("--epsilon", eps_text, "+1 or -1");
    verify_cmd->add_option("--report", verify_report, "write the JSON report here");
    auto* par_opt = verify_cmd->add_flag("--parallel", cfg.parallel, "run independent suites concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*classify_cmd) {
            RunConfig scratch;
            resolve(classify_tol, "ELKO_TOL", "tol", tol, parse_double, scratch);
            return cmd_classify(classify_in, tol, classify_report);
        }
        if (*make_cmd) return cmd_make_elko(conj, hel, theta, phi, mass_make, p_make, make_out);
        if (*map_cmd) {
            RunConfig scratch;
            int eps = 1;
            if (map_eps->count() > 0) eps = parse_epsilon(eps_map_text);
            resolve(map_eps, "ELKO_EPSILON", "epsilon", eps, parse_epsilon, scratch);
            resolve(map_tol, "ELKO_TOL", "tol", tol, parse_double, scratch);
            if (p_map.empty()) {
                std::ostringstream os;
                os << std::setprecision(17) << 0.3 * mass_map << ",0," << 0.4 * mass_map;
                p_map = os.str();
            }
            return cmd_map(map_in, map_class, eps, p_map, mass_map, tol, map_out, map_report);
        }
        if (*verify_cmd) {
            if (!is_suite(cfg.suite)) {
                std::cerr << "unknown suite '" << cfg.suite << "'; expected algebra, elko, lounesto, mapping, theta or all\n";
                return usage;
            }
            if (conv_opt->count() > 0) cfg.convention = parse_convention(conv_text);
            if (eps_opt->count() > 0) cfg.epsilon = parse_epsilon(eps_text);
            resolve(seed_opt, "ELKO_SEED", "seed", cfg.seed,
                    [](const std::string& s) {
                        std::size_t used = 0;
                        const unsigned long long v = std::stoull(s, &used);
                        if (used != s.size()) throw argument_error("'" + s + "' is not an unsigned integer");
                        return static_cast<std::uint64_t>(v);
                    },
                    cfg);
            resolve(verify_tol, "ELKO_TOL", "tol", cfg.tol, parse_double, cfg);
            resolve(conv_opt, "ELKO_ADJOINT_CONVENTION", "adjoint_convention", cfg.convention, parse_convention, cfg);
            resolve(eps_opt, "ELKO_EPSILON", "epsilon", cfg.epsilon, parse_epsilon, cfg);
            resolve(par_opt, "ELKO_PARALLEL", "parallel", cfg.parallel, parse_bool, cfg);
            if (!(cfg.tol > 0.0)) throw argument_error("--tol must be positive");
            return cmd_verify(cfg, verify_report);
        }
    } catch (const schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return usage;
    } catch (const singular_map& e) {
        std::cerr << "singular mapping operator: " << e.what() << "\n";
        return usage;
    } catch (const argument_error& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return usage;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return usage;
    } catch (const degenerate_spinor& e) {
        std::cerr << "degenerate spinor: " << e.what() << "\n";
        return degenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
