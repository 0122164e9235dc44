#include "common.hpp"

#include <cmath>

namespace orthoharm::tools::detail {

DomainPoint random_point(int n, Rng& rng, double ymin, double ymax) {
    RVec x(n), y(n);
    y(0) = rng.uniform(ymin, ymax);
    const double spread = n > 1 ? 0.9 * y(0) / std::sqrt(static_cast<double>(n - 1)) : 0.0;
    for (int j = 0; j < n; ++j) {
        x(j) = rng.uniform(-1.0, 1.0);
        if (j > 0) y(j) = rng.uniform(-spread, spread);
    }
    return DomainPoint::from_xy(x, y);
}

RVec random_vector(int n, Rng& rng, double r) {
    RVec v(n + 2);
    for (int i = 0; i < n + 2; ++i) v(i) = rng.uniform(-r, r);
    return v;
}

RVec random_vector_with_sign(int n, Rng& rng, double sign) {
    while (true) {
        RVec v = random_vector(n, rng);
        if (sign * frame_q(v) >= 0.1) return v;
    }
}

RMat random_isometry(int n, Rng& rng) {
    const int d = n + 2;
    RMat g = RMat::Identity(d, d);
    for (int k = 0; k < 3; ++k) {
        RVec w;
        do {
            w = random_vector(n, rng, 1.0);
        } while (std::abs(frame_q(w)) < 0.2);
        g = g * reflection_frame(w);
    }
    RVec shift(n);
    for (int j = 0; j < n; ++j) shift(j) = rng.uniform(-1.0, 1.0);
    g = g * eichler_frame(shift);
    if (!preserves_component(g)) {
        RVec r = RVec::Zero(d);
        r(0) = r(1) = 1.0;
        g = g * reflection_frame(r);
    }
    return g;
}

std::string vec_text(const RVec& v) {
    std::ostringstream s;
    s.precision(17);
    for (int i = 0; i < v.size(); ++i) s << (i ? "," : "") << v(i);
    return s.str();
}

WorstCase worst(const std::string& id, const std::string& anchor, const std::string& group, const std::string& inputs,
                double tolerance, bool absolute) {
    CheckRecord r;
    r.check_id = id;
    r.anchor = anchor;
    r.group = group;
    r.inputs_digest = digest(inputs);
    r.tolerance = tolerance;
    r.criterion = absolute ? "abs" : "rel";
    return WorstCase(r);
}

CheckRecord grouped(CheckRecord r, const std::string& group) {
    r.group = group;
    return r;
}

}  // namespace orthoharm::tools::detail
