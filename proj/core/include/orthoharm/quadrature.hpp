#pragma once

#include <functional>
#include <vector>

namespace orthoharm {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Panels of a geometric mesh on [a, b] refined toward a, each carrying an
// n-point Gauss-Legendre rule. ratio < 1 is the panel length ratio.
QuadratureRule graded_gauss_legendre(int n, double a, double b, int panels, double ratio);

struct QuadResult {
    double value;
    double error;
    int evaluations;
};

// Adaptive bisection; an interval is accepted when the order-n rule and the
// sum over its two halves agree to the local share of abs_tol.
QuadResult adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                   int order = 15, int max_depth = 40);

}  // namespace orthoharm
