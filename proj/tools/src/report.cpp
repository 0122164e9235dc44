#include "orthoharm/tools/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "orthoharm/tools/rng.hpp"

namespace orthoharm::tools {

namespace {

double compared(const CheckRecord& r) { return r.criterion == "abs" ? r.abs_err : r.rel_err; }

nlohmann::ordered_json cjson(std::complex<double> z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

bool Report::all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

void Report::sort() {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
}

void Report::append(Report other) {
    for (auto& r : other.records) records.push_back(std::move(r));
    for (auto& c : other.curves) curves.push_back(std::move(c));
}

std::string digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CheckRecord make_record(std::string check_id, std::string anchor, std::string inputs, std::complex<double> value,
                        std::complex<double> reference, double tolerance, double scale) {
    CheckRecord r;
    r.check_id = std::move(check_id);
    r.anchor = std::move(anchor);
    r.inputs_digest = digest(inputs);
    r.value = value;
    r.reference = reference;
    r.abs_err = std::abs(value - reference);
    const double denom = std::max(std::abs(reference), scale);
    r.rel_err = denom > 0.0 ? r.abs_err / denom : r.abs_err;
    r.tolerance = tolerance;
    r.criterion = "rel";
    r.pass = std::isfinite(r.rel_err) && r.rel_err <= tolerance;
    return r;
}

CheckRecord make_abs_record(std::string check_id, std::string anchor, std::string inputs, std::complex<double> value,
                            std::complex<double> reference, double tolerance) {
    CheckRecord r = make_record(std::move(check_id), std::move(anchor), std::move(inputs), value, reference, tolerance);
    r.criterion = "abs";
    r.pass = std::isfinite(r.abs_err) && r.abs_err <= tolerance;
    return r;
}

void WorstCase::add(std::complex<double> value, std::complex<double> reference, double scale) {
    CheckRecord s = make_record(record_.check_id, record_.anchor, "", value, reference, record_.tolerance, scale);
    s.criterion = record_.criterion;
    ++record_.samples;
    const double e = compared(s);
    const double cur = compared(record_);
    // A non-finite sample is the worst case and stays recorded.
    const bool replace = !any_ || !std::isfinite(e) || (std::isfinite(cur) && e > cur);
    if (replace) {
        record_.value = s.value;
        record_.reference = s.reference;
        record_.abs_err = s.abs_err;
        record_.rel_err = s.rel_err;
    }
    any_ = true;
}

void WorstCase::fail(const std::string& note) {
    failed_ = true;
    if (record_.note.empty()) record_.note = note;
}

CheckRecord WorstCase::record() const {
    CheckRecord r = record_;
    const double e = compared(r);
    r.pass = !failed_ && (!any_ || (std::isfinite(e) && e <= r.tolerance));
    return r;
}

nlohmann::ordered_json to_json(const CheckRecord& r) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["anchor"] = r.anchor;
    j["inputs_digest"] = r.inputs_digest;
    j["value"] = cjson(r.value);
    j["reference"] = cjson(r.reference);
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["criterion"] = r.criterion;
    j["group"] = r.group;
    j["samples"] = r.samples;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

nlohmann::ordered_json header_json(const Report& report) {
    nlohmann::ordered_json h;
    h["report"] = "orthoharm";
    h["suite"] = report.suite;
    h["seed"] = report.seed;
    h["rng"] = Rng::algorithm;
    h["records"] = report.records.size();
    h["pass"] = report.all_pass();
    return h;
}

void write_jsonl(const Report& report, std::ostream& out) {
    out << header_json(report).dump() << '\n';
    for (const auto& r : report.records) out << to_json(r).dump() << '\n';
}

void write_csv(const Report& report, std::ostream& out) {
    out << "check_id,anchor,inputs_digest,value_re,value_im,reference_re,reference_im,abs_err,rel_err,tolerance,"
           "criterion,pass,group,samples,note\n";
    for (const auto& r : report.records) {
        out << csv_escape(r.check_id) << ',' << csv_escape(r.anchor) << ',' << r.inputs_digest << ','
            << fmt(r.value.real()) << ',' << fmt(r.value.imag()) << ',' << fmt(r.reference.real()) << ','
            << fmt(r.reference.imag()) << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err) << ',' << fmt(r.tolerance) << ','
            << r.criterion << ',' << (r.pass ? "true" : "false") << ',' << csv_escape(r.group) << ',' << r.samples << ','
            << csv_escape(r.note) << '\n';
    }
}

void write_curves_csv(const Report& report, std::ostream& out) {
    out << "curve,x,value_re,value_im\n";
    for (const auto& c : report.curves)
        out << csv_escape(c.curve) << ',' << fmt(c.x) << ',' << fmt(c.value.real()) << ',' << fmt(c.value.imag()) << '\n';
}

void write_summary(const Report& report, std::ostream& out) {
    std::size_t width = 8;
    for (const auto& r : report.records) width = std::max(width, r.check_id.size());
    out << std::left << std::setw(static_cast<int>(width)) << "check_id"
        << "  result  error      tolerance  samples\n";
    std::size_t passed = 0;
    for (const auto& r : report.records) {
        passed += r.pass ? 1 : 0;
        out << std::left << std::setw(static_cast<int>(width)) << r.check_id << "  " << (r.pass ? "pass  " : "FAIL  ") << "  "
            << short_fmt(compared(r)) << (r.criterion == "abs" ? "a" : "r") << " " << short_fmt(r.tolerance) << "  "
            << r.samples;
        if (!r.note.empty()) out << "  " << r.note;
        out << '\n';
    }
    out << passed << "/" << report.records.size() << " checks passed (suite " << report.suite << ", seed " << report.seed
        << ")\n";
}

}  // namespace orthoharm::tools
