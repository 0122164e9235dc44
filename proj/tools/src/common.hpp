#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "orthoharm/cycles.hpp"
#include "orthoharm/tools/config.hpp"
#include "orthoharm/tools/report.hpp"
#include "orthoharm/tools/rng.hpp"

namespace orthoharm::tools::detail {

// Z with y_1 in [ymin, ymax], |y_j| <= 0.9 y_1 / sqrt(n - 1) for j > 1, x in [-1, 1]^n.
DomainPoint random_point(int n, Rng& rng, double ymin = 0.5, double ymax = 3.0);
// Frame vector with entries in [-r, r].
RVec random_vector(int n, Rng& rng, double r = 2.0);
// Random frame vector with sign(q) = sign and |q| >= 0.1.
RVec random_vector_with_sign(int n, Rng& rng, double sign);
// Product of reflections and an Eichler translation, composed with a
// component-swapping reflection when needed.
RMat random_isometry(int n, Rng& rng);

inline int samples_or(const SuiteParams& p, int fallback) { return p.samples >= 0 ? p.samples : fallback; }
inline double tol_or(const SuiteParams& p, double fallback) { return p.tolerance ? *p.tolerance : fallback; }

template <class... Args>
std::string text(const Args&... args) {
    std::ostringstream s;
    s.precision(17);
    ((s << args << ';'), ...);
    return s.str();
}

std::string vec_text(const RVec& v);

// Starts a worst-case accumulator for a sampled identity.
WorstCase worst(const std::string& id, const std::string& anchor, const std::string& group, const std::string& inputs,
                double tolerance, bool absolute = false);

CheckRecord grouped(CheckRecord r, const std::string& group);

}  // namespace orthoharm::tools::detail

namespace orthoharm::tools::detail {

// Short decimal form for ids ("0.05", "10").
inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace orthoharm::tools::detail
