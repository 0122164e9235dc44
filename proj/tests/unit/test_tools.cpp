#include <gtest/gtest.h>

#include <sstream>

#include "orthoharm/errors.hpp"
#include "orthoharm/tools/config.hpp"
#include "orthoharm/tools/report.hpp"
#include "orthoharm/tools/rng.hpp"
#include "orthoharm/tools/suites.hpp"

using namespace orthoharm;
using namespace orthoharm::tools;
using nlohmann::json;

namespace {

std::string error_of(const json& j) {
    try {
        parse_run_config(j);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Config, ErrorsNameTheField) {
    EXPECT_NE(error_of(json{{"samples", 3}}).find("'suite'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "nope"}}).find("'suite'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"samples", "x"}}).find("'samples'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"samples", -1}}).find("'samples'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"eps_schedule", {0.1, 2.0}}}).find("'eps_schedule'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"n_range", {1}}}).find("'n_range'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"m_values", {0}}}).find("'m_values'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"seed", -4}}).find("'seed'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"sample", 4}}).find("'sample'"), std::string::npos);
    EXPECT_NE(error_of(json{{"suite", "kernel"}, {"workers", 0}}).find("'workers'"), std::string::npos);
}

TEST(Config, ParsesRanges) {
    const RunConfig rc = parse_run_config(json{{"suite", "kernel"},
                                               {"n_range", {2, 4}},
                                               {"kappa_values", {5, 7}},
                                               {"m_values", {1, "1/2"}},
                                               {"seed", 9},
                                               {"output", "x.jsonl"}});
    EXPECT_EQ(rc.params.n_values, (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(rc.params.kappa_values, (std::vector<int>{5, 7}));
    EXPECT_EQ(rc.params.m_values[1], Rational(1, 2));
    EXPECT_EQ(rc.params.seed, 9u);
    EXPECT_EQ(rc.output, "x.jsonl");
}

TEST(Config, LatticeValidation) {
    LatticeConfig c = standard_lattice(2);
    EXPECT_NO_THROW(build_context(c));
    const json j = to_json(c);
    const LatticeConfig back = parse_lattice_config(j);
    EXPECT_EQ(back.gram, c.gram);
    EXPECT_EQ(back.generators, c.generators);

    LatticeConfig bad = c;
    bad.generators.push_back({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    EXPECT_THROW(build_context(bad), InputError);
    LatticeConfig coset = c;
    coset.cosets = {{Rational(1, 2), Rational(0), Rational(0), Rational(0)}};
    EXPECT_THROW(build_context(coset), InputError);
    json missing = j;
    missing.erase("gram");
    try {
        parse_lattice_config(missing);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("'gram'"), std::string::npos);
    }
}

TEST(Rng, ReproducibleAndSplittable) {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
    Rng c = Rng(42).split(1), d = Rng(42).split(2);
    EXPECT_NE(c.next(), d.next());
    Rng u(3);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
}

TEST(Report, WorstCaseKeepsLargestError) {
    WorstCase w(make_record("id", "anchor", "in", 0.0, 0.0, 1e-3));
    w.add(1.0, 1.0);
    w.add(1.1, 1.0);
    w.add(1.0005, 1.0);
    const CheckRecord r = w.record();
    EXPECT_EQ(r.samples, 3u);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.rel_err, 0.1, 1e-12);
    WorstCase nan(make_record("id", "anchor", "in", 0.0, 0.0, 1e-3));
    nan.add(1.0, 1.0);
    nan.add(std::nan(""), 1.0);
    EXPECT_FALSE(nan.record().pass);
}

TEST(Report, DeterministicForAFixedSeed) {
    SuiteParams p;
    p.samples = 20;
    p.seed = 123;
    std::ostringstream a, b;
    write_jsonl(run_suite("identities", p), a);
    write_jsonl(run_suite("identities", p), b);
    EXPECT_EQ(a.str(), b.str());
    p.seed = 124;
    std::ostringstream c;
    write_jsonl(run_suite("identities", p), c);
    EXPECT_NE(a.str(), c.str());
}

TEST(Report, CsvHasHeaderAndOneRowPerRecord) {
    SuiteParams p;
    p.samples = 5;
    const Report r = run_suite("constants", p);
    std::ostringstream s;
    write_csv(r, s);
    const std::string text = s.str();
    EXPECT_EQ(static_cast<size_t>(std::count(text.begin(), text.end(), '\n')), r.records.size() + 1);
    EXPECT_EQ(text.rfind("check_id,", 0), 0u);
}

TEST(Report, DigestIsStable) {
    EXPECT_EQ(digest("abc"), digest("abc"));
    EXPECT_NE(digest("abc"), digest("abd"));
    EXPECT_EQ(digest("").size(), 16u);
}

TEST(Suites, ZeroSamplesGiveEmptyReports) {
    SuiteParams p;
    p.samples = 0;
    EXPECT_TRUE(run_suite("identities", p).records.empty());
    EXPECT_TRUE(run_suite("duality", p).records.empty());
    EXPECT_THROW(run_suite("unknown", p), InputError);
}
