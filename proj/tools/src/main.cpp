#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "orthoharm/errors.hpp"
#include "orthoharm/special_functions.hpp"
#include "orthoharm/tools/suites.hpp"

using namespace orthoharm;
using namespace orthoharm::tools;

namespace {

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool json = false;
    bool long_running = false;
    std::optional<int> samples;
    std::optional<int> workers;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config, "Run config (JSON)");
    cmd->add_option("--seed", c.seed, "RNG seed");
    cmd->add_option("--out", c.out, "Write JSONL records here (plus .csv and .curves.csv)");
    cmd->add_flag("--json", c.json, "Print JSONL records instead of a summary");
    cmd->add_flag("--long-running", c.long_running, "Enable long-running checks");
    cmd->add_option("--samples", c.samples, "Samples per check");
    cmd->add_option("--workers", c.workers, "Worker threads for series sums");
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    return std::filesystem::path(path).replace_extension(ext).string();
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    fn(f);
}

int run(const std::string& suite, const Common& c) {
    RunConfig rc;
    rc.suite = suite;
    if (!c.config.empty()) {
        rc = load_run_config(c.config);
        if (!suite.empty() && rc.suite != suite)
            throw InputError("config: field 'suite' is '" + rc.suite + "' but the command runs '" + suite + "'");
    }
    if (c.seed) rc.params.seed = *c.seed;
    if (c.samples) rc.params.samples = *c.samples;
    if (c.workers) rc.params.workers = *c.workers;
    if (c.long_running || std::getenv("ORTHOHARM_LONG_RUNNING")) rc.params.long_running = true;
    const std::string out_path = !c.out.empty() ? c.out : rc.output;

    const Report report = run_suite(rc.suite, rc.params);
    if (!out_path.empty()) {
        write_file(out_path, [&](std::ostream& o) { write_jsonl(report, o); });
        write_file(replace_extension(out_path, ".csv"), [&](std::ostream& o) { write_csv(report, o); });
        write_file(replace_extension(out_path, ".curves.csv"), [&](std::ostream& o) { write_curves_csv(report, o); });
    }
    if (c.json)
        write_jsonl(report, std::cout);
    else
        write_summary(report, std::cout);
    return report.all_pass() ? 0 : 1;
}

RVec parse_vec(const std::vector<double>& v) {
    RVec r(static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) r(static_cast<int>(i)) = v[i];
    return r;
}

void print_complex(const char* name, cplx z, bool json) {
    if (json)
        std::cout << nlohmann::json{{name, {z.real(), z.imag()}}}.dump() << '\n';
    else
        std::cout << name << " = " << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ")
                  << std::abs(z.imag()) << "i\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical kernels and cycle integrals on orthogonal upper half-spaces"};
    app.require_subcommand(1);

    Common common;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    add_common(verify, common);

    for (const char* name : {"tube-limit", "restrict", "duality"}) {
        auto* cmd = app.add_subcommand(name, std::string("Run the ") + name + " suite");
        add_common(cmd, common);
    }

    std::vector<double> lambda, x, y;
    int kappa = 0;
    std::string branch = "real";
    bool json_values = false;
    auto* kernel = app.add_subcommand("eval-kernel", "Evaluate omega and p_tilde at a point");
    kernel->add_option("--lambda", lambda, "Frame coordinates (v_e, v_e', v_1..v_n)")->required()->delimiter(',');
    kernel->add_option("--kappa", kappa, "Weight")->required();
    kernel->add_option("--x", x, "Real part of Z")->required()->delimiter(',');
    kernel->add_option("--y", y, "Imaginary part of Z")->required()->delimiter(',');
    kernel->add_option("--branch", branch, "real or principal")->check(CLI::IsMember({"real", "principal"}));
    kernel->add_flag("--json", json_values, "JSON output");

    int std_n = 2;
    std::string lattice_path;
    std::string m_text = "1";
    double bound = 40.0;
    int workers = 1;
    auto* series = app.add_subcommand("eval-series", "Evaluate a truncated series at a point");
    series->add_option("--lattice", lattice_path, "Lattice config (JSON); default: the standard lattice for --n");
    series->add_option("--n", std_n, "Standard lattice dimension")->check(CLI::Range(1, 4));
    series->add_option("--m", m_text, "Norm class q(lambda) = m");
    series->add_option("--kappa", kappa, "Weight")->required();
    series->add_option("--bound", bound, "Truncation bound B");
    series->add_option("--x", x, "Real part of Z")->required()->delimiter(',');
    series->add_option("--y", y, "Imaginary part of Z")->required()->delimiter(',');
    series->add_option("--workers", workers, "Worker threads");
    series->add_flag("--json", json_values, "JSON output");

    int cn = 2;
    auto* constant = app.add_subcommand("constant", "Print C_{n,kappa} and the tube flux constant");
    constant->add_option("--n", cn, "n")->required()->check(CLI::PositiveNumber);
    constant->add_option("--kappa", kappa, "Weight")->required();
    constant->add_flag("--json", json_values, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run(suite, common);
        for (const char* name : {"tube-limit", "restrict", "duality"}) {
            if (app.got_subcommand(name)) {
                std::string s = name;
                std::replace(s.begin(), s.end(), '-', '_');
                return run(s, common);
            }
        }
        if (kernel->parsed()) {
            if (x.size() != y.size() || lambda.size() != x.size() + 2)
                throw InputError("eval-kernel: --x and --y need n entries and --lambda n + 2");
            KernelParams kp{parse_vec(lambda), kappa, branch == "real" ? Branch::real : Branch::principal};
            const DomainPoint Z = DomainPoint::from_xy(parse_vec(x), parse_vec(y));
            print_complex("omega", omega_kernel(kp, Z), json_values);
            const CVec g = p_tilde(kp, Z).coeffs;
            for (int j = 0; j < g.size(); ++j) print_complex(("p_tilde_" + std::to_string(j + 1)).c_str(), g(j), json_values);
            return 0;
        }
        if (series->parsed()) {
            const LatticeConfig lc = lattice_path.empty() ? standard_lattice(std_n) : load_lattice_config(lattice_path);
            const auto ctx = build_context(lc);
            const Rational m = parse_rational(m_text);
            SeriesSpec spec{ctx, ctx->cosets.front(), m, kappa, bound, workers};
            const SeriesValue v = eval_omega(spec, DomainPoint::from_xy(parse_vec(x), parse_vec(y)));
            if (json_values) {
                std::cout << nlohmann::json{{"value", {v.value.real(), v.value.imag()}}, {"tail", v.tail}, {"count", v.count}}.dump()
                          << '\n';
            } else {
                print_complex("value", v.value, false);
                std::cout << "tail = " << v.tail << "\ncount = " << v.count << '\n';
            }
            return 0;
        }
        if (constant->parsed()) {
            print_complex("C", c_constant(cn, kappa), json_values);
            print_complex("tube_flux", tube_flux_constant(cn, kappa), json_values);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
