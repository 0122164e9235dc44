#pragma once

#include <vector>

#include "orthoharm/calculus.hpp"

namespace orthoharm {

struct Interval {
    double lo;
    double hi;
};

enum class CycleKind { real_analytic, algebraic };

// Model cycles in frame coordinates:
//   C_{b_1} = {Z = (i y_1, x_2, ..., x_n)}, window axes (y_1, x_2, ..., x_n);
//   T_{-b_n} = {z_n = 0}, window axes (x_1, y_1, ..., x_{n-1}, y_{n-1}).
// transport maps the model vector to lambda / sqrt(|q(lambda)|).
struct CycleChart {
    CycleKind kind = CycleKind::real_analytic;
    RMat transport;
    double scale = 1.0;  // sqrt(|q(lambda)|)
    std::vector<Interval> window;
    int window_nodes = 24;
    int normal_nodes = 24;
    int orientation = 1;
    int workers = 1;
};

// An isometry in O+(V(R)) (frame coordinates) with gamma * model = target;
// model and target must have the same nonzero norm.
RMat transport_to(const RVec& model, const RVec& target);

CycleChart make_chart_C(const RVec& mu, std::vector<Interval> window);
CycleChart make_chart_T(const RVec& nu, std::vector<Interval> window);

// Model point of C_{b_1} for window parameters (y_1, x_2, ..., x_n).
DomainPoint model_point_C(const RVec& params);
// Model point of T_{-b_n} for window parameters (x_1, y_1, ..., x_{n-1}, y_{n-1}).
DomainPoint model_point_T(const RVec& params, int n);

// Evaluates sum g_j hat(dzbar_j) on 2n-1 real tangent vectors written in
// (x_1, y_1, ..., x_n, y_n) coordinates.
cplx evaluate_top(const CVec& g, const std::vector<RVec>& tangents);

struct IntegralEstimate {
    cplx value = 0.0;
    double error = 0.0;  // difference to the doubled-node value, 0 when not estimated
};

// Integral of h H over the part of the boundary of the tube B_eps(C_mu)
// above the chart window, oriented as the boundary of the tube (outward
// normal first). Both pieces {x_1' = +-1} x B_{n-1} and (-1,1) x S_{n-2}
// are included; n <= 4.
IntegralEstimate tube_boundary_integral(const ScalarFn& h, const TopFn& H, double eps, const CycleChart& chart,
                                        bool estimate_error = true);

// q(mu)^{n/2-kappa} int_window (h|_kappa gamma)(Z') (gamma^{-1} mu, psi(Z'))^{kappa-n} dy_1' dx_2' ... dx_n'.
IntegralEstimate cycle_integral_C(const ScalarFn& h, int kappa, const CycleChart& chart, bool estimate_error = true);

enum class Sector {
    holomorphic,  // integrate the hat(dzbar_n) coefficient against dz_n
    conjugate,    // against dzbar_n
};

struct CircleOptions {
    int nodes = 256;
    Sector sector = Sector::holomorphic;
};

struct CircleIntegral {
    cplx value;
    double doubling_change;
};

// Fibre integral over |z_n| = eps sqrt(q(Y')) of (H|_{-kappa} gamma)_n / (scale 2 z_n)^kappa,
// counterclockwise, trapezoid rule in the angle. z_prime are the model
// coordinates (z_1, ..., z_{n-1}).
CircleIntegral fiber_integral(const TopFn& H, int kappa, double eps, const CycleChart& chart, const CVec& z_prime,
                              const CircleOptions& options = {});

struct RestrictionSample {
    RVec params;
    double weight;
    cplx value;         // at eps
    cplx extrapolated;  // eps -> 0 from eps, eps/2, eps/4
    double doubling_change;
};

// Coefficient of dz_1 ^ dzbar_1 ^ ... ^ dz_{n-1} ^ dzbar_{n-1} of H|_{T_nu}
// at the Gauss-Legendre nodes of the chart window.
std::vector<RestrictionSample> restrict_T(const TopFn& H, int kappa, double eps, const CycleChart& chart,
                                          const CircleOptions& options = {});

struct CycleIntegralT {
    cplx value;         // at eps
    cplx extrapolated;  // eps -> 0
};

// int_window H|_{T_nu}, using dz ^ dzbar = -2i dx ^ dy.
CycleIntegralT cycle_integral_T(const TopFn& H, int kappa, double eps, const CycleChart& chart,
                                const CircleOptions& options = {});

// Integral of F over the boundary of the tube {|z_n| < eps sqrt(q(Y'))}
// around the model T_{-b_n}, above the window, outward orientation. F is
// evaluated at model points (no transport).
IntegralEstimate tube_boundary_integral_T(const TopFn& F, double eps, const CycleChart& chart);

// Polynomial extrapolation to eps = 0 in the variable eps^order (Neville).
cplx extrapolate_to_zero(const std::vector<double>& eps, const std::vector<cplx>& values, double order = 2.0);

// Least-squares slope of log|value| against log eps.
double loglog_slope(const std::vector<double>& eps, const std::vector<cplx>& values);

// Product of (1 - s^2)^4 bumps in chosen real coordinates. Axis a refers to
// x_{a/2+1} for even a and y_{a/2+1} for odd a.
struct SmoothBump {
    struct Factor {
        int axis;
        double center;
        double radius;
    };
    std::vector<Factor> factors;

    cplx value(const DomainPoint& Z) const;
    Form01 dbar(const DomainPoint& Z) const;
    ScalarFn as_function() const;
};

// Stokes identity on U = (support box) minus B_eps(C_{b_1}) at n = 2:
//   int_U h conj((b_1, psi)^{-kappa}) q(Y)^kappa dmu + int_U dbar h ^ p_tilde(b_1)
//     = int_{boundary U} h p_tilde(b_1) = -(tube boundary integral).
// The box is the product of the bump supports; axes (x_1, y_1, x_2, y_2)
// must all be bumped.
struct StokesCheck {
    cplx omega_term;
    cplx dbar_term;
    cplx boundary_term;  // boundary of U orientation
    double residual;     // |omega_term + dbar_term - boundary_term|
};

StokesCheck windowed_stokes_check(const SmoothBump& h, int kappa, double eps, int nodes = 24, int panels = 6);

}  // namespace orthoharm
