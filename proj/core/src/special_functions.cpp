#include "orthoharm/special_functions.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>

#include "orthoharm/errors.hpp"
#include "orthoharm/quadrature.hpp"

namespace orthoharm {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool is_integer(double x, double tol = 1e-12) { return std::abs(x - std::round(x)) < tol; }

double digamma(double x) { return boost::math::digamma(x); }

double pochhammer(double a, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

// Direct power series; used for |z| <= 0.9 and for terminating parameters.
double series(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    int small = 0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) {
            if (++small >= 2) return sum;
        } else {
            small = 0;
        }
    }
    throw NumericalError("hyp2f1: series did not converge");
}

// z in (0.9, 1): connection formulas around z = 1.
double near_one(double a, double b, double c, double z) {
    const double w = 1.0 - z;
    const double s = c - a - b;
    if (!is_integer(s)) {
        const double t1 = gamma_fn(c) * gamma_fn(s) / (gamma_fn(c - a) * gamma_fn(c - b)) * series(a, b, a + b - c + 1.0, w);
        const double t2 = std::pow(w, s) * gamma_fn(c) * gamma_fn(-s) / (gamma_fn(a) * gamma_fn(b)) *
                          series(c - a, c - b, s + 1.0, w);
        return t1 + t2;
    }
    const int m = static_cast<int>(std::round(std::abs(s)));
    const double lw = std::log(w);
    if (s >= 0.0) {
        // c = a + b + m.
        double finite = 0.0;
        if (m > 0) {
            const double pre = gamma_fn(m) * gamma_fn(c) / (gamma_fn(a + m) * gamma_fn(b + m));
            for (int k = 0; k < m; ++k)
                finite += pochhammer(a, k) * pochhammer(b, k) / (factorial(k) * pochhammer(1.0 - m, k)) * std::pow(w, k);
            finite *= pre;
        }
        const double pre2 = std::pow(-w, m) * gamma_fn(c) / (gamma_fn(a) * gamma_fn(b));
        double tail = 0.0, coef = 1.0 / factorial(m), wk = 1.0;
        for (int k = 0; k < 10000; ++k) {
            const double t = coef * wk *
                             (lw - digamma(k + 1.0) - digamma(k + m + 1.0) + digamma(a + k + m) + digamma(b + k + m));
            tail += t;
            if (std::abs(t) <= 1e-17 * std::abs(tail) && k > 2) break;
            coef *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0));
            wk *= w;
        }
        return finite - pre2 * tail;
    }
    // c = a + b - m.
    double finite = 0.0;
    {
        const double pre = gamma_fn(m) * gamma_fn(c) / (gamma_fn(a) * gamma_fn(b)) * std::pow(w, -m);
        for (int k = 0; k < m; ++k)
            finite += pochhammer(a - m, k) * pochhammer(b - m, k) / (factorial(k) * pochhammer(1.0 - m, k)) * std::pow(w, k);
        finite *= pre;
    }
    const double pre2 = (m % 2 == 0 ? 1.0 : -1.0) * gamma_fn(c) / (gamma_fn(a - m) * gamma_fn(b - m));
    double tail = 0.0, coef = 1.0 / factorial(m), wk = 1.0;
    for (int k = 0; k < 10000; ++k) {
        const double t = coef * wk * (lw - digamma(k + 1.0) - digamma(k + m + 1.0) + digamma(a + k) + digamma(b + k));
        tail += t;
        if (std::abs(t) <= 1e-17 * std::abs(tail) && k > 2) break;
        coef *= (a + k) * (b + k) / ((k + 1.0) * (k + m + 1.0));
        wk *= w;
    }
    return finite - pre2 * tail;
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) throw InputError("gamma: pole at nonpositive integer");
    return std::tgamma(x);
}

double hyp2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c)) throw InputError("hyp2f1: c must not be a nonpositive integer");
    if (!(z <= 1.0)) throw InputError("hyp2f1: only z <= 1 is supported");
    if (z == 0.0) return 1.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        const int terms = static_cast<int>(-std::max(is_nonpositive_integer(a) ? a : -1e9, is_nonpositive_integer(b) ? b : -1e9));
        double term = 1.0, sum = 1.0;
        for (int k = 0; k < terms; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
            sum += term;
        }
        return sum;
    }
    if (z < 0.0) {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
        return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
    }
    if (z == 1.0) {
        if (c - a - b <= 0.0) throw NumericalError("hyp2f1: divergent at z = 1 (c - a - b <= 0)");
        return gamma_fn(c) * gamma_fn(c - a - b) / (gamma_fn(c - a) * gamma_fn(c - b));
    }
    if (z <= 0.9) return series(a, b, c, z);
    return near_one(a, b, c, z);
}

double sphere_volume(int k) {
    if (k < 0) throw InputError("sphere_volume: dimension must be nonnegative");
    const double h = 0.5 * (k + 1);
    return 2.0 * std::pow(std::numbers::pi, h) / gamma_fn(h);
}

double c_radial_integral(int n) {
    if (n < 2) throw InputError("c_radial_integral: n >= 2 required");
    auto f = [n](double r) { return std::pow(r, n - 2) / std::pow(std::sqrt(r * r + 1.0), n); };
    return adaptive_gauss_legendre(f, 0.0, 1.0, 1e-14).value;
}

namespace {

std::complex<double> prefactor(int n, int kappa) {
    if (n < 2) throw InputError("C_{n,kappa}: n >= 2 required");
    if (kappa <= n) throw InputError("C_{n,kappa}: kappa > n required");
    const std::complex<double> mi = std::pow(std::complex<double>(0.0, -1.0), n);
    const double h = 0.5 * n;
    return mi * gamma_fn(kappa - h + 1.0) * gamma_fn(h) / (std::pow(4.0, kappa) * (kappa - h) * gamma_fn(kappa));
}

}  // namespace

std::complex<double> c_constant(int n, int kappa) {
    return prefactor(n, kappa) * (static_cast<double>(n - 1) * sphere_volume(n - 2) * c_radial_integral(n));
}

std::complex<double> tube_flux_constant(int n, int kappa) {
    return prefactor(n, kappa) * (0.5 * sphere_volume(n - 1));
}

}  // namespace orthoharm
