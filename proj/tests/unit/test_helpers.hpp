#pragma once

#include <random>

#include "orthoharm/domain.hpp"

namespace orthoharm::testing {

inline DomainPoint point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), y1(0.8, 2.5);
    RVec x(n), y(n);
    for (int j = 0; j < n; ++j) x(j) = u(rng);
    y(0) = y1(rng);
    for (int j = 1; j < n; ++j) y(j) = 0.8 * y(0) * u(rng) / std::sqrt(static_cast<double>(n));
    return DomainPoint::from_xy(x, y);
}

inline RVec vec(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    RVec v(n + 2);
    for (int j = 0; j < n + 2; ++j) v(j) = u(rng);
    return v;
}

// Frame vector with q(v) of the requested sign and |q(v)| >= 0.2.
inline RVec vec_with_sign(std::mt19937_64& rng, int n, double sign) {
    while (true) {
        RVec v = vec(rng, n);
        if (sign * frame_q(v) >= 0.2) return v;
    }
}

// Reflection in a frame vector w with q(w) != 0, composed with the reflection
// in (1, 1, 0, ...) when it swaps the components.
inline RMat component_reflection(const RVec& w) {
    const int d = static_cast<int>(w.size());
    RMat S(d, d);
    for (int i = 0; i < d; ++i) {
        RVec v = RVec::Zero(d);
        v(i) = 1.0;
        S.col(i) = v - frame_pairing(v, w) / frame_q(w) * w;
    }
    if (!preserves_component(S)) {
        RVec u = RVec::Zero(d);
        u(0) = u(1) = 1.0;
        RMat T(d, d);
        for (int i = 0; i < d; ++i) {
            RVec v = RVec::Zero(d);
            v(i) = 1.0;
            T.col(i) = v - frame_pairing(v, u) / frame_q(u) * u;
        }
        S = T * S;
    }
    return S;
}

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace orthoharm::testing
