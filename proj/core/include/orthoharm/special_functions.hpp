#pragma once

#include <complex>

namespace orthoharm {

// Principal-branch Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.
double hyp2f1(double a, double b, double c, double z);

// Gamma function; throws at the poles.
double gamma_fn(double x);

// Surface area of the unit sphere S_k in R^{k+1}: 2 pi^{(k+1)/2} / Gamma((k+1)/2).
double sphere_volume(int k);

// Radial integral int_0^1 r^{n-2} / sqrt(r^2 + 1)^n dr (adaptive Gauss-Legendre).
double c_radial_integral(int n);

// C_{n,kappa} = (-i)^n Gamma(kappa - n/2 + 1) Gamma(n/2) / (4^kappa (kappa - n/2) Gamma(kappa))
//               * (n - 1) vol(S_{n-2}) * c_radial_integral(n).
// Requires n >= 2 and kappa > n.
std::complex<double> c_constant(int n, int kappa);

// The same prefactor times vol(S_{n-1}) / 2, the constant that the tube
// boundary integral actually converges to (the full solid angle of the
// normal sphere instead of the two end caps). Equals 2 C_{2,kappa} at n = 2.
std::complex<double> tube_flux_constant(int n, int kappa);

}  // namespace orthoharm
