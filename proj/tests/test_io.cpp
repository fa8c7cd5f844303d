#include <gtest/gtest.h>

#include <elko/io.hpp>
#include <elko/report.hpp>
#include <elko/suites.hpp>

using namespace elko;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_spinor_file(text, "in.json");
    } catch (const schema_error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(SpinorFileTest, ParsesComponentsAndMomentum) {
    const SpinorFile f = parse_spinor_file(R"({"components": [[1, 2], [3, 4], [5, 6], [7, 8]],
        "momentum": {"mass": 2, "p": [0.3, 0, 0.4]}})");
    EXPECT_EQ(f.components(1), cplx(3, 4));
    ASSERT_TRUE(f.momentum.has_value());
    const FourMomentum k = f.momentum->four_momentum();
    EXPECT_NEAR(k.E, std::sqrt(4.25), 1e-15);
    EXPECT_TRUE(k.on_shell);
}

TEST(SpinorFileTest, ExplicitEnergyIsKept) {
    const SpinorFile f = parse_spinor_file(R"({"components": [[1, 0], [0, 0], [0, 0], [0, 0]],
        "momentum": {"mass": 1, "p": [0, 0, 0], "energy": 2}})");
    const FourMomentum k = f.momentum->four_momentum();
    EXPECT_EQ(k.E, 2.0);
    EXPECT_FALSE(k.on_shell);
}

TEST(SpinorFileTest, RoundTripIsExact) {
    const ElkoSpinor l = make_elko({Conjugacy::A, HelicityPair::plus_minus}, 0.3, 1.7,
                                   FourMomentum::on_shell_with(1.3, {0.1, -0.2, 0.7}));
    const SpinorFile f = spinor_file_from(l, "pm");
    const SpinorFile g = parse_spinor_file(dump_spinor_file(f));
    EXPECT_EQ(g.components, f.components);
    EXPECT_EQ(*g.momentum->energy, l.momentum.E);
    EXPECT_EQ(dump_spinor_file(g), dump_spinor_file(f));
}

TEST(SpinorFileTest, TruncatedInputReportsLine) {
    const std::string msg = error_of("{\n  \"components\": [[0, 0],\n  [1, ");
    EXPECT_NE(msg.find("in.json:3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("malformed JSON"), std::string::npos);
}

TEST(SpinorFileTest, WrongComponentCountNamesTheField) {
    const std::string msg = error_of("{\n\"components\": [[1, 0], [0, 1], [1, 0]]\n}");
    EXPECT_NE(msg.find("field 'components'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("in.json:2"), std::string::npos) << msg;
}

TEST(SpinorFileTest, RejectsBadValues) {
    EXPECT_NE(error_of(R"({"components": [[1, 0], [0, "x"], [1, 0], [0, 0]]})").find("components[1][1]"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"components": [[1, 0], [0, 1, 2], [1, 0], [0, 0]]})").find("components[1]"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"components": [[1, 0], [0, 1], [1, 0], [0, 0]], "momentum": {"mass": 0, "p": [0, 0, 0]}})")
                  .find("momentum.mass"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"components": [[1, 0], [0, 1], [1, 0], [0, 0]], "momentum": {"mass": 1, "p": [0, 0]}})")
                  .find("momentum.p"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"components": [[1, 0], [0, 1], [1, 0], [0, 0]], "extra": 1})").find("unknown field"),
              std::string::npos);
    EXPECT_NE(error_of(R"([1, 2])").find("top level"), std::string::npos);
    EXPECT_NE(error_of(R"({})").find("missing"), std::string::npos);
}

TEST(Report, SeventeenDigitsRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, -2.5e-17}) EXPECT_EQ(std::strtod(format17(v).c_str(), nullptr), v);
    EXPECT_EQ(format17(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Report, CheckComparisons) {
    EXPECT_TRUE(check("a", "x", 1e-11, 1e-10).passed);
    EXPECT_FALSE(check("a", "x", std::nan(""), 1e-10).passed);
    EXPECT_TRUE(check_above("a", "x", 0.5, 1e-3).passed);
    EXPECT_FALSE(check_above("a", "x", 1e-4, 1e-3).passed);
}

TEST(Report, StatusIgnoresDiagnostics) {
    VerificationReport r;
    r.checks.push_back(check("a", "x", 0.0, 1.0));
    r.checks.push_back(check("b", "y", 2.0, 1.0, false));
    EXPECT_TRUE(r.passed());
    r.checks.push_back(check("c", "z", 2.0, 1.0));
    EXPECT_FALSE(r.passed());
}

TEST(Report, KeysAreSortedAndStable) {
    VerificationReport r;
    r.suite = "algebra";
    r.checks.push_back(check("z.last", "anchor", 1e-12, 1e-10));
    const std::string text = dump_report(r);
    EXPECT_LT(text.find("\"checks\""), text.find("\"config\""));
    EXPECT_LT(text.find("\"config\""), text.find("\"status\""));
    EXPECT_NE(text.find("\"residual\": \"9.9999999999999998e-13\""), std::string::npos) << text;
    EXPECT_EQ(text, dump_report(r));
}

TEST(Suites, AlgebraSuitePassesAndIsDeterministic) {
    RunConfig cfg;
    cfg.suite = "algebra";
    const VerificationReport a = run_suite(cfg), b = run_suite(cfg);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(dump_report(a), dump_report(b));
}

TEST(Suites, ParallelMatchesSequential) {
    RunConfig cfg;
    cfg.suite = "all";
    const VerificationReport a = run_suite(cfg);
    cfg.parallel = true;
    VerificationReport b = run_suite(cfg);
    b.config.parallel = false;
    EXPECT_EQ(dump_report(a), dump_report(b));
}

TEST(Suites, EveryRecordCarriesAnAnchor) {
    RunConfig cfg;
    cfg.suite = "lounesto";
    for (const auto& c : run_suite(cfg).checks) EXPECT_FALSE(c.anchor.empty()) << c.id;
}

TEST(Suites, UnknownSuiteIsRejected) {
    RunConfig cfg;
    cfg.suite = "bogus";
    EXPECT_THROW(run_suite(cfg), argument_error);
}
