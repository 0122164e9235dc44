#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthoharm/series.hpp"

namespace orthoharm::tools {

// Lattice file: gram (integer matrix), e (integer vector), e_prime (rational
// vector, entries as numbers or "a/b"), cosets (optional list of rational
// vectors), group_generators (optional list of integer matrices in
// L-coordinates), label (optional).
struct LatticeConfig {
    std::string label;
    std::vector<std::vector<long long>> gram;
    std::vector<long long> e;
    std::vector<Rational> e_prime;
    std::vector<std::vector<Rational>> cosets;
    std::vector<std::vector<std::vector<long long>>> generators;
};

LatticeConfig parse_lattice_config(const nlohmann::json& j);
LatticeConfig load_lattice_config(const std::string& path);
nlohmann::ordered_json to_json(const LatticeConfig& c);

// U + <2> (n = 1), U + U (n = 2), U + U + <-2> (n = 3), U + U + <-2> + <-2> (n = 4),
// with e, e' the first hyperbolic pair and generators the Eichler
// translations by the basis of K plus the reflection in e - e'.
LatticeConfig standard_lattice(int n);

// Validates the data (form preservation, integrality, component) and builds
// the shared lattice context.
std::shared_ptr<const LatticeContext> build_context(const LatticeConfig& c);

struct SuiteParams {
    std::vector<int> n_values;      // empty: suite default
    std::vector<int> kappa_values;  // empty: suite default
    int samples = -1;               // negative: suite default
    std::optional<double> tolerance;
    std::vector<double> eps_schedule{0.1, 0.05, 0.025};
    std::vector<double> bounds{10.0, 20.0, 40.0, 80.0};
    std::vector<Rational> m_values{Rational(1), Rational(2)};
    std::vector<LatticeConfig> lattices;  // empty: standard lattices for n = 1, 2
    int workers = 1;
    bool long_running = false;
    std::uint64_t seed = 20240601;
};

struct RunConfig {
    std::string suite;
    SuiteParams params;
    std::string output;
};

const std::vector<std::string>& suite_names();

// Relative lattice paths are resolved against the directory of the run config.
RunConfig parse_run_config(const nlohmann::json& j, const std::string& base_dir = ".");
RunConfig load_run_config(const std::string& path);

}  // namespace orthoharm::tools
