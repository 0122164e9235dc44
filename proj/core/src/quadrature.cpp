#include "orthoharm/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "orthoharm/errors.hpp"

namespace orthoharm {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw InputError("gauss_legendre: need at least one node");
    QuadratureRule r;
    r.nodes.resize(static_cast<size_t>(n));
    r.weights.resize(static_cast<size_t>(n));
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        // Recompute the derivative at the converged root.
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
            double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        const double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        r.nodes[static_cast<size_t>(i)] = xm - xl * z;
        r.nodes[static_cast<size_t>(n - 1 - i)] = xm + xl * z;
        r.weights[static_cast<size_t>(i)] = w;
        r.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return r;
}

QuadratureRule graded_gauss_legendre(int n, double a, double b, int panels, double ratio) {
    if (panels < 1) throw InputError("graded_gauss_legendre: need at least one panel");
    // Panel lengths L r^{panels-1}, ..., L r, L from a to b; edges are
    // accumulated from a so the small panels keep their relative precision.
    std::vector<double> lens(static_cast<size_t>(panels));
    double total = 0.0, len = 1.0;
    for (int p = panels - 1; p >= 0; --p) {
        lens[static_cast<size_t>(p)] = len;
        total += len;
        len *= ratio;
    }
    QuadratureRule r;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double left = a + (b - a) * (acc / total);
        acc += lens[static_cast<size_t>(p)];
        const double right = p + 1 == panels ? b : a + (b - a) * (acc / total);
        QuadratureRule piece = gauss_legendre(n, left, right);
        r.nodes.insert(r.nodes.end(), piece.nodes.begin(), piece.nodes.end());
        r.weights.insert(r.weights.end(), piece.weights.begin(), piece.weights.end());
    }
    return r;
}

namespace {

double apply(const std::function<double(double)>& f, const QuadratureRule& base, double a, double b, int& evals) {
    const double xm = 0.5 * (a + b), xl = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < base.nodes.size(); ++i) s += base.weights[i] * f(xm + xl * base.nodes[i]);
    evals += static_cast<int>(base.nodes.size());
    return s * xl;
}

void refine(const std::function<double(double)>& f, const QuadratureRule& base, double a, double b, double whole,
            double tol, int depth, QuadResult& acc) {
    const double mid = 0.5 * (a + b);
    const double left = apply(f, base, a, mid, acc.evaluations);
    const double right = apply(f, base, mid, b, acc.evaluations);
    const double diff = std::abs(left + right - whole);
    if (diff <= tol || depth <= 0) {
        acc.value += left + right;
        acc.error += diff;
        return;
    }
    refine(f, base, a, mid, left, 0.5 * tol, depth - 1, acc);
    refine(f, base, mid, b, right, 0.5 * tol, depth - 1, acc);
}

}  // namespace

QuadResult adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b, double abs_tol, int order,
                                   int max_depth) {
    const QuadratureRule base = gauss_legendre(order);
    QuadResult acc{0.0, 0.0, 0};
    const double whole = apply(f, base, a, b, acc.evaluations);
    refine(f, base, a, b, whole, abs_tol, max_depth, acc);
    return acc;
}

}  // namespace orthoharm
