#pragma once

#include <cstdint>
#include <random>

namespace orthoharm::tools {

// std::mt19937_64; doubles are built from the top 53 bits so that sample
// points are reproducible across standard libraries and languages.
class Rng {
public:
    static constexpr const char* algorithm = "mt19937_64, uniform = (x >> 11) * 2^-53";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Independent stream for a named sub-task.
    Rng split(std::uint64_t salt) { return Rng(engine_() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace orthoharm::tools
