#include "orthoharm/tools/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "orthoharm/errors.hpp"

namespace orthoharm::tools {

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw InputError("config: field '" + field + "' " + what);
}

long long as_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) field_error(field, "must be an integer");
    return v.get<long long>();
}

Rational as_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception&) {
            field_error(field, "is not a rational \"a/b\"");
        }
    }
    field_error(field, "must be an integer or a string \"a/b\"");
}

std::vector<long long> int_vector(const json& v, const std::string& field) {
    if (!v.is_array()) field_error(field, "must be an array");
    std::vector<long long> out;
    for (size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<Rational> rational_vector(const json& v, const std::string& field) {
    if (!v.is_array()) field_error(field, "must be an array");
    std::vector<Rational> out;
    for (size_t i = 0; i < v.size(); ++i) out.push_back(as_rational(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<long long>> int_matrix(const json& v, const std::string& field, size_t dim) {
    if (!v.is_array() || v.size() != dim) field_error(field, "must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    std::vector<std::vector<long long>> out;
    for (size_t i = 0; i < v.size(); ++i) {
        auto row = int_vector(v[i], field + "[" + std::to_string(i) + "]");
        if (row.size() != dim) field_error(field, "must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
        out.push_back(std::move(row));
    }
    return out;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("config: cannot open '" + path + "'");
    try {
        return json::parse(in, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw InputError("config: '" + path + "' is not valid JSON: " + e.what());
    }
}

RationalMatrix to_rational(const std::vector<std::vector<long long>>& m) {
    const int d = static_cast<int>(m.size());
    RationalMatrix r(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r(i, j) = Rational(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return r;
}

std::vector<std::vector<long long>> to_ints(const RationalMatrix& m) {
    std::vector<std::vector<long long>> out(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i)].push_back(m(i, j).numerator());
    return out;
}

}  // namespace

LatticeConfig parse_lattice_config(const json& j) {
    if (!j.is_object()) throw InputError("config: lattice must be a JSON object");
    LatticeConfig c;
    if (j.contains("label")) {
        if (!j["label"].is_string()) field_error("label", "must be a string");
        c.label = j["label"].get<std::string>();
    }
    if (!j.contains("gram")) field_error("gram", "is required");
    const size_t dim = j["gram"].is_array() ? j["gram"].size() : 0;
    if (dim < 3) field_error("gram", "must be a square matrix of size at least 3");
    c.gram = int_matrix(j["gram"], "gram", dim);
    if (!j.contains("e")) field_error("e", "is required");
    c.e = int_vector(j["e"], "e");
    if (c.e.size() != dim) field_error("e", "must have length " + std::to_string(dim));
    if (!j.contains("e_prime")) field_error("e_prime", "is required");
    c.e_prime = rational_vector(j["e_prime"], "e_prime");
    if (c.e_prime.size() != dim) field_error("e_prime", "must have length " + std::to_string(dim));
    if (j.contains("cosets")) {
        if (!j["cosets"].is_array()) field_error("cosets", "must be an array of vectors");
        for (size_t i = 0; i < j["cosets"].size(); ++i) {
            const std::string f = "cosets[" + std::to_string(i) + "]";
            c.cosets.push_back(rational_vector(j["cosets"][i], f));
            if (c.cosets.back().size() != dim) field_error(f, "must have length " + std::to_string(dim));
        }
    }
    if (j.contains("group_generators")) {
        if (!j["group_generators"].is_array()) field_error("group_generators", "must be an array of matrices");
        for (size_t i = 0; i < j["group_generators"].size(); ++i)
            c.generators.push_back(int_matrix(j["group_generators"][i], "group_generators[" + std::to_string(i) + "]", dim));
    }
    return c;
}

LatticeConfig load_lattice_config(const std::string& path) { return parse_lattice_config(read_json(path)); }

nlohmann::ordered_json to_json(const LatticeConfig& c) {
    nlohmann::ordered_json j;
    j["label"] = c.label;
    j["gram"] = c.gram;
    j["e"] = c.e;
    auto rat = [](const std::vector<Rational>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& r : v) {
            if (r.denominator() == 1) a.push_back(r.numerator());
            else a.push_back(to_string(r));
        }
        return a;
    };
    j["e_prime"] = rat(c.e_prime);
    nlohmann::ordered_json cos = nlohmann::ordered_json::array();
    for (const auto& v : c.cosets) cos.push_back(rat(v));
    j["cosets"] = cos;
    j["group_generators"] = c.generators;
    return j;
}

LatticeConfig standard_lattice(int n) {
    if (n < 1 || n > 4) throw InputError("standard_lattice: n must be in 1..4");
    const int d = n + 2;
    std::vector<std::vector<long long>> g(static_cast<size_t>(d), std::vector<long long>(static_cast<size_t>(d), 0));
    g[0][1] = g[1][0] = 1;
    std::string label;
    if (n == 1) {
        g[2][2] = 2;
        label = "U+<2>";
    } else {
        g[2][3] = g[3][2] = 1;
        label = "U+U";
        for (int k = 4; k < d; ++k) {
            g[static_cast<size_t>(k)][static_cast<size_t>(k)] = -2;
            label += "+<-2>";
        }
    }
    LatticeConfig c;
    c.label = label;
    c.gram = g;
    c.e.assign(static_cast<size_t>(d), 0);
    c.e[0] = 1;
    c.e_prime.assign(static_cast<size_t>(d), Rational(0));
    c.e_prime[1] = 1;
    c.cosets.push_back(std::vector<Rational>(static_cast<size_t>(d), Rational(0)));

    const QuadraticLattice L = QuadraticLattice::from_ints(g);
    const LatticeVector e = LatticeVector::from_ints(c.e);
    for (int k = 2; k < d; ++k) {
        LatticeVector kv = LatticeVector::zero(d);
        kv.coords[static_cast<size_t>(k)] = 1;
        c.generators.push_back(to_ints(eichler_transformation(L, e, kv).matrix));
    }
    LatticeVector r = LatticeVector::zero(d);
    r.coords[0] = 1;
    r.coords[1] = -1;
    c.generators.push_back(to_ints(reflection(L, r).matrix));
    return c;
}

std::shared_ptr<const LatticeContext> build_context(const LatticeConfig& c) {
    QuadraticLattice L = QuadraticLattice::from_ints(c.gram);
    const LatticeVector e = LatticeVector::from_ints(c.e);
    const LatticeVector ep(c.e_prime);
    WittFrame frame(L, e, ep);
    std::vector<LatticeVector> cosets;
    for (size_t i = 0; i < c.cosets.size(); ++i) {
        LatticeVector v(c.cosets[i]);
        if (!L.in_dual(v)) throw InputError("config: cosets[" + std::to_string(i) + "] is not in the dual lattice");
        cosets.push_back(std::move(v));
    }
    if (cosets.empty()) cosets.push_back(LatticeVector::zero(L.dim()));
    GroupData group;
    group.label = c.label;
    for (size_t i = 0; i < c.generators.size(); ++i) {
        const std::string f = "group_generators[" + std::to_string(i) + "]";
        const RationalMatrix m = to_rational(c.generators[i]);
        if (!preserves_form(L, m)) field_error(f, "does not preserve the Gram matrix");
        if (!preserves_component(frame.isometry_to_frame(m))) field_error(f, "does not preserve the chosen component");
        group.generators.push_back({m, true});
    }
    return std::make_shared<const LatticeContext>(LatticeContext{std::move(L), std::move(frame), std::move(cosets), std::move(group)});
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "kernel",  "series",  "tube_limit",
                                                "restrict",   "current_eq", "duality", "constants"};
    return names;
}

RunConfig parse_run_config(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw InputError("config: run config must be a JSON object");
    RunConfig rc;
    if (!j.contains("suite") || !j["suite"].is_string()) field_error("suite", "is required and must be a string");
    rc.suite = j["suite"].get<std::string>();
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), rc.suite) == names.end()) field_error("suite", "names an unknown suite '" + rc.suite + "'");
    static const std::vector<std::string> known{"suite",        "lattice",   "lattices", "n_range",  "n_values",
                                                "kappa_range",  "kappa_values", "samples", "tolerance", "eps_schedule",
                                                "bounds",       "m_values",  "workers",  "long_running", "seed",
                                                "output"};
    for (const auto& item : j.items())
        if (std::find(known.begin(), known.end(), item.key()) == known.end()) field_error(item.key(), "is not a known field");
    SuiteParams& p = rc.params;
    auto resolve = [&](const std::string& path) {
        std::filesystem::path fp(path);
        return fp.is_absolute() ? fp.string() : (std::filesystem::path(base_dir) / fp).string();
    };
    auto lattice_entry = [&](const json& v, const std::string& field) {
        if (v.is_string()) return load_lattice_config(resolve(v.get<std::string>()));
        if (v.is_object()) return parse_lattice_config(v);
        field_error(field, "must be a path or an inline lattice object");
    };
    if (j.contains("lattice")) p.lattices.push_back(lattice_entry(j["lattice"], "lattice"));
    if (j.contains("lattices")) {
        if (!j["lattices"].is_array()) field_error("lattices", "must be an array");
        for (size_t i = 0; i < j["lattices"].size(); ++i)
            p.lattices.push_back(lattice_entry(j["lattices"][i], "lattices[" + std::to_string(i) + "]"));
    }
    auto int_range = [&](const char* field) {
        std::vector<int> out;
        const json& v = j[field];
        if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
            for (int k = v[0].get<int>(); k <= v[1].get<int>(); ++k) out.push_back(k);
            return out;
        }
        field_error(field, "must be [lo, hi] with integer bounds");
    };
    auto int_list = [&](const char* field) {
        std::vector<int> out;
        for (long long x : int_vector(j[field], field)) out.push_back(static_cast<int>(x));
        return out;
    };
    if (j.contains("n_range")) p.n_values = int_range("n_range");
    if (j.contains("n_values")) p.n_values = int_list("n_values");
    if (j.contains("kappa_range")) p.kappa_values = int_range("kappa_range");
    if (j.contains("kappa_values")) p.kappa_values = int_list("kappa_values");
    if (j.contains("samples")) {
        const long long s = as_int(j["samples"], "samples");
        if (s < 0) field_error("samples", "must be nonnegative");
        p.samples = static_cast<int>(s);
    }
    if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number() || !(j["tolerance"].get<double>() > 0.0)) field_error("tolerance", "must be a positive number");
        p.tolerance = j["tolerance"].get<double>();
    }
    auto positive_list = [&](const char* field) {
        const json& v = j[field];
        if (!v.is_array() || v.empty()) field_error(field, "must be a nonempty array of positive numbers");
        std::vector<double> out;
        for (const auto& x : v) {
            if (!x.is_number() || !(x.get<double>() > 0.0)) field_error(field, "must contain positive numbers");
            out.push_back(x.get<double>());
        }
        return out;
    };
    if (j.contains("eps_schedule")) {
        p.eps_schedule = positive_list("eps_schedule");
        for (double e : p.eps_schedule)
            if (e >= 1.0) field_error("eps_schedule", "entries must lie in (0, 1)");
    }
    if (j.contains("bounds")) p.bounds = positive_list("bounds");
    if (j.contains("m_values")) {
        p.m_values = rational_vector(j["m_values"], "m_values");
        for (const auto& m : p.m_values)
            if (m == 0) field_error("m_values", "must be nonzero");
    }
    if (j.contains("workers")) {
        const long long w = as_int(j["workers"], "workers");
        if (w < 1) field_error("workers", "must be at least 1");
        p.workers = static_cast<int>(w);
    }
    if (j.contains("long_running")) {
        if (!j["long_running"].is_boolean()) field_error("long_running", "must be a boolean");
        p.long_running = j["long_running"].get<bool>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || (!j["seed"].is_number_unsigned() && j["seed"].get<long long>() < 0))
            field_error("seed", "must be an unsigned integer");
        p.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
        if (!j["output"].is_string()) field_error("output", "must be a string");
        rc.output = j["output"].get<std::string>();
    }
    return rc;
}

RunConfig load_run_config(const std::string& path) {
    const std::string base = std::filesystem::path(path).parent_path().string();
    return parse_run_config(read_json(path), base.empty() ? "." : base);
}

}  // namespace orthoharm::tools
