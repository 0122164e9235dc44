#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "orthoharm/quadratic_space.hpp"

namespace orthoharm {

using cplx = std::complex<double>;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

// Frame coordinates of a vector of V(R) or V(C): (lambda_e, lambda_e', lambda_1..lambda_n)
// for lambda = lambda_e e + lambda_e' e~' + sum lambda_j b_j. The form is
// (v, w) = v_e w_e' + v_e' w_e + 2 sum eps_j v_j w_j with eps = (+1, -1, ..., -1).
inline double eps_sign(int j) { return j == 0 ? 1.0 : -1.0; }

double frame_pairing(const RVec& v, const RVec& w);
cplx frame_pairing(const CVec& v, const CVec& w);
double frame_q(const RVec& v);

class WittFrame {
public:
    // e: primitive isotropic vector of L; e_prime: vector of L' with (e, e') = 1.
    // basis_b (optional, L-coordinates) overrides the eigenvector construction
    // of b_1..b_n.
    WittFrame(const QuadraticLattice& L, const LatticeVector& e, const LatticeVector& e_prime,
              const std::vector<RVec>& basis_b = {});

    int n() const { return n_; }
    int dim() const { return n_ + 2; }
    const LatticeVector& e_lattice() const { return e_lat_; }
    const LatticeVector& e_prime_lattice() const { return e_prime_lat_; }
    // L-coordinates.
    const RVec& e() const { return e_; }
    const RVec& e_prime() const { return e_prime_; }
    const RVec& e_tilde() const { return e_tilde_; }
    const std::vector<RVec>& basis_b() const { return basis_b_; }
    RVec eps() const;

    const RMat& to_frame_matrix() const { return to_frame_; }
    const RMat& from_frame_matrix() const { return from_frame_; }
    RVec to_frame(const LatticeVector& v) const;
    RVec to_frame(const RVec& v_lattice) const { return to_frame_ * v_lattice; }
    RVec from_frame(const RVec& v_frame) const { return from_frame_ * v_frame; }
    // L-coordinate matrix of an isometry written in frame coordinates.
    RMat isometry_to_frame(const RationalMatrix& m) const;

    // Real Gram matrix of L.
    const RMat& gram() const { return gram_; }

    // Largest violation of the frame relations (isotropy, pairings, inverse).
    double residual() const { return residual_; }

private:
    int n_;
    LatticeVector e_lat_, e_prime_lat_;
    RVec e_, e_prime_, e_tilde_;
    std::vector<RVec> basis_b_;
    RMat to_frame_, from_frame_;
    RMat gram_;
    double residual_ = 0.0;
};

// Z = X + iY in frame coordinates, on the component {q(Y) > 0, y_1 > 0}.
class DomainPoint {
public:
    explicit DomainPoint(CVec z);
    static DomainPoint from_xy(const RVec& x, const RVec& y);

    int n() const { return static_cast<int>(z_.size()); }
    const CVec& z() const { return z_; }
    RVec x() const { return z_.real(); }
    RVec y() const { return z_.imag(); }
    double qY() const { return qY_; }
    const CVec& psiZ() const { return psiZ_; }
    RVec psiX() const { return psiZ_.real(); }
    RVec psiY() const { return psiZ_.imag(); }

private:
    CVec z_;
    double qY_;
    CVec psiZ_;
};

using ScalarFn = std::function<cplx(const DomainPoint&)>;
// Coefficients g_j of sum g_j hat(dzbar_j).
using TopFn = std::function<CVec(const DomainPoint&)>;

cplx q_complex(const CVec& z);
// psi(Z) = Z - q(Z) e + e~' in frame coordinates.
CVec psi(const CVec& z);
inline const CVec& psi(const DomainPoint& Z) { return Z.psiZ(); }

// (lambda, psi(Z)) and (lambda, psi(Zbar)) for real lambda in frame coordinates.
cplx pair_psi(const RVec& lambda, const DomainPoint& Z);
cplx pair_psi_bar(const RVec& lambda, const DomainPoint& Z);

struct ActResult {
    DomainPoint point;
    cplx j;
};

// sigma in frame coordinates. Throws DomainError on j = 0 or on leaving the component.
ActResult act(const RMat& sigma, const DomainPoint& Z);
ActResult act(const WittFrame& frame, const Isometry& sigma, const DomainPoint& Z);
cplx automorphy_factor(const RMat& sigma, const DomainPoint& Z);
// Whether sigma maps the component to itself, tested at a base point.
bool preserves_component(const RMat& sigma);

// (h|_kappa sigma)(Z) = j(sigma, Z)^{-kappa} h(sigma Z).
ScalarFn slash(ScalarFn h, int kappa, RMat sigma);
// Holomorphic Jacobian d(sigma Z)_i / dz_k.
CMat action_jacobian(const RMat& sigma, const DomainPoint& Z);
// Pullback sigma^* of sum g_j hat(dzbar_j) given the coefficients at sigma Z.
CVec pullback_top(const RMat& sigma, const DomainPoint& Z, const CVec& g_at_image);
// (H|_{-kappa} sigma)(Z) = j(sigma, Z)^kappa sigma^* H(sigma Z).
TopFn slash_top(TopFn H, int kappa, RMat sigma);

struct Projection {
    double q_plus;
    double q_minus;
    RVec vec_plus;
    RVec vec_minus;
};

Projection project(const RVec& lambda, const DomainPoint& Z);
// q(lambda_{Z+}) = (lambda, psi(Z)) (lambda, psi(Zbar)) / (4 q(Y)).
double q_plus_product(const RVec& lambda, const DomainPoint& Z);
double majorant(const RVec& lambda, const DomainPoint& Z);

struct Metric {
    RMat h_lower;
    RMat h_upper;
    double det_h;
    double vol_scale;
};

Metric metric(const RVec& y);

// Frame-coordinate matrix of the Eichler transformation Z -> Z + k, k in W(R).
RMat eichler_frame(const RVec& k);
// Frame-coordinate reflection v -> v - (v, w)/q(w) w.
RMat reflection_frame(const RVec& w);

}  // namespace orthoharm
