#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace orthoharm::tools {

struct CheckRecord {
    std::string check_id;
    std::string anchor;
    std::string inputs_digest;
    std::complex<double> value;
    std::complex<double> reference;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    // Which of abs_err / rel_err is compared with the tolerance.
    std::string criterion = "rel";
    std::string group;
    std::size_t samples = 1;
    std::string note;
};

// One point of a convergence curve (value against B, boundary integral against eps, ...).
struct CurvePoint {
    std::string curve;
    double x;
    std::complex<double> value;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;
    std::vector<CurvePoint> curves;

    bool all_pass() const;
    void sort();
    void append(Report other);
};

// FNV-1a over the text, as 16 hex digits.
std::string digest(const std::string& text);

// Builds a record from value/reference with the error measured relative to
// max(|reference|, scale); scale guards identities whose reference can cancel.
CheckRecord make_record(std::string check_id, std::string anchor, std::string inputs, std::complex<double> value,
                        std::complex<double> reference, double tolerance, double scale = 0.0);
// Same but the absolute error is compared with the tolerance.
CheckRecord make_abs_record(std::string check_id, std::string anchor, std::string inputs, std::complex<double> value,
                            std::complex<double> reference, double tolerance);

// Keeps the sample with the largest compared error.
class WorstCase {
public:
    explicit WorstCase(CheckRecord seed) : record_(std::move(seed)) { record_.samples = 0; record_.pass = true; }
    void add(std::complex<double> value, std::complex<double> reference, double scale = 0.0);
    void fail(const std::string& note);
    CheckRecord record() const;

private:
    CheckRecord record_;
    bool any_ = false;
    bool failed_ = false;
};

nlohmann::ordered_json to_json(const CheckRecord& r);
nlohmann::ordered_json header_json(const Report& report);

void write_jsonl(const Report& report, std::ostream& out);
void write_csv(const Report& report, std::ostream& out);
void write_curves_csv(const Report& report, std::ostream& out);
void write_summary(const Report& report, std::ostream& out);

}  // namespace orthoharm::tools
