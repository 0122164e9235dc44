#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthoharm/tools/suites.hpp"

using namespace orthoharm;
using namespace orthoharm::tools;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::string suite;
    std::vector<std::string> groups;
    SuiteParams params;
    double runtime_limit = 0.0;  // seconds, 0 for none
    std::string sample_prefix;  // checks whose summed samples must reach min_samples
    int min_samples = 0;
    bool stretch = false;
};

std::vector<Criterion> criteria() {
    SuiteParams base;
    std::vector<Criterion> c;
    c.push_back({1, "geometry", "identities", {"geometry"}, base, 10.0, "geometry/psi-isotropic/", 1000});
    c.push_back({2, "metric", "identities", {"metric"}, base, 0.0, "metric/inverse/", 1000});
    c.push_back({3, "star-products", "identities", {"star-products"}, base, 30.0, "star-products/i/", 800});
    c.push_back({4, "laplace", "identities", {"laplace"}, base, 0.0, "laplace/eigenvalue/", 200});
    SuiteParams kernel = base;
    kernel.n_values = {2, 4};
    c.push_back({5, "xi-preimage", "kernel", {"xi-preimage"}, kernel, 120.0, "kernel/xi-preimage/", 1200});
    c.push_back({6, "constant", "constants", {"constants"}, base, 0.0, "", 0});
    SuiteParams tube = base;
    tube.kappa_values = {3, 4};
    c.push_back({7, "tube-limit", "tube_limit", {"tube-limit"}, tube, 300.0, "", 0});
    SuiteParams restrict = base;
    restrict.eps_schedule = {1e-1, 5e-2, 2.5e-2};
    c.push_back({8, "residue-vanishing", "restrict", {"residue"}, restrict, 0.0, "", 0});
    SuiteParams series = base;
    series.lattices = {standard_lattice(1), standard_lattice(2)};
    series.m_values = {Rational(1), Rational(2)};
    series.bounds = {10.0, 20.0, 40.0, 80.0};
    c.push_back({9, "series", "series", {"series"}, series, 600.0, "", 0});
    SuiteParams duality = base;
    duality.lattices = {standard_lattice(2)};
    c.push_back({10, "duality", "duality", {"duality"}, duality, 0.0, "", 0, true});
    return c;
}

enum class Outcome { pass, fail, skip };

struct Result {
    Outcome outcome;
    std::string line;
    std::vector<std::string> details;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

Result evaluate(const Criterion& c, bool long_running) {
    Result res;
    const std::string head = "criterion " + std::to_string(c.id) + " " + c.name + ": ";
    if (c.stretch && !long_running) {
        res.outcome = Outcome::skip;
        res.line = head + "SKIP (stretch; enable with --long-running or ORTHOHARM_LONG_RUNNING=1)";
        return res;
    }
    SuiteParams p = c.params;
    p.long_running = long_running;
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    try {
        report = run_suite(c.suite, p);
    } catch (const std::exception& ex) {
        res.outcome = Outcome::fail;
        res.line = head + "FAIL (error: " + ex.what() + ")";
        return res;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::size_t checks = 0, failed = 0, samples = 0;
    double worst_ratio = 0.0;
    std::string worst_id;
    for (const CheckRecord& r : report.records) {
        if (std::find(c.groups.begin(), c.groups.end(), r.group) == c.groups.end()) continue;
        ++checks;
        if (!c.sample_prefix.empty() && r.check_id.rfind(c.sample_prefix, 0) == 0) samples += r.samples;
        const double err = r.criterion == "abs" ? r.abs_err : r.rel_err;
        const double ratio = r.tolerance > 0.0 ? err / r.tolerance : (r.pass ? 0.0 : 1e300);
        if (!(ratio <= worst_ratio)) {
            worst_ratio = ratio;
            worst_id = r.check_id;
        }
        if (!r.pass) {
            ++failed;
            res.details.push_back("  " + r.check_id + ": error " + fmt(err) + " tolerance " + fmt(r.tolerance) +
                                  (r.note.empty() ? "" : " (" + r.note + ")"));
        }
    }
    bool ok = checks > 0 && failed == 0;
    std::string extra;
    if (checks == 0) extra = "; no checks ran";
    if (c.runtime_limit > 0.0 && seconds > c.runtime_limit) {
        ok = false;
        extra += "; runtime " + fmt(seconds) + " s exceeds " + fmt(c.runtime_limit) + " s";
    }
    if (samples < static_cast<std::size_t>(c.min_samples)) {
        ok = false;
        extra += "; only " + std::to_string(samples) + " samples for " + c.sample_prefix;
    }
    res.outcome = ok ? Outcome::pass : Outcome::fail;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    res.line = head + (ok ? "PASS" : "FAIL") + " (" + std::to_string(checks - failed) + "/" + std::to_string(checks) +
               " checks, worst error/tolerance " + fmt(worst_ratio) + " at " + worst_id + ", " + timing + extra + ")";
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> selected, expect_red;
    bool long_running = false, verbose = false;
    app.add_option("--criterion", selected, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--expect-red", expect_red, "Criteria known to fail; they do not fail the run");
    app.add_flag("--long-running", long_running, "Run the stretch criterion");
    app.add_flag("-v,--verbose", verbose, "List failing checks");
    CLI11_PARSE(app, argc, argv);
    if (std::getenv("ORTHOHARM_LONG_RUNNING")) long_running = true;

    const std::set<int> red(expect_red.begin(), expect_red.end());
    int unexpected = 0, ran = 0, skipped = 0;
    for (const Criterion& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        Result r = evaluate(c, long_running);
        const bool expected_red = red.count(c.id) > 0;
        if (r.outcome == Outcome::skip) {
            ++skipped;
        } else {
            ++ran;
            if ((r.outcome == Outcome::fail) != expected_red) ++unexpected;
        }
        if (r.outcome == Outcome::fail && expected_red) r.line += " (expected red)";
        if (r.outcome == Outcome::pass && expected_red) r.line += " (expected red, but passed)";
        std::cout << r.line << '\n';
        if (verbose || r.outcome == Outcome::fail)
            for (const auto& d : r.details) std::cout << d << '\n';
    }
    if (ran == 0 && skipped > 0) return 77;
    return unexpected == 0 ? 0 : 1;
}
