#include "orthoharm/domain.hpp"

#include <cmath>
#include <numeric>

#include "orthoharm/errors.hpp"

namespace orthoharm {

double frame_pairing(const RVec& v, const RVec& w) {
    double s = v(0) * w(1) + v(1) * w(0);
    for (int j = 2; j < v.size(); ++j) s += 2.0 * eps_sign(j - 2) * v(j) * w(j);
    return s;
}

cplx frame_pairing(const CVec& v, const CVec& w) {
    cplx s = v(0) * w(1) + v(1) * w(0);
    for (int j = 2; j < v.size(); ++j) s += 2.0 * eps_sign(j - 2) * v(j) * w(j);
    return s;
}

double frame_q(const RVec& v) { return 0.5 * frame_pairing(v, v); }

namespace {

RVec real_of(const LatticeVector& v) { return v.to_real(); }

double lattice_pairing(const RMat& G, const RVec& a, const RVec& b) { return a.dot(G * b); }

}  // namespace

WittFrame::WittFrame(const QuadraticLattice& L, const LatticeVector& e, const LatticeVector& e_prime,
                     const std::vector<RVec>& basis_b)
    : n_(L.n()), e_lat_(e), e_prime_lat_(e_prime), gram_(L.gram_real()) {
    const int d = L.dim();
    if (e.size() != d || e_prime.size() != d) throw InputError("frame: e and e_prime must have lattice dimension");
    if (!e.is_integral()) throw InputError("frame: e must lie in L");
    std::int64_t g = 0;
    for (const auto& c : e.coords) g = std::gcd(g, c.numerator());
    if (g != 1) throw InputError("frame: e must be primitive");
    if (L.q(e) != 0) throw InputError("frame: e must be isotropic");
    if (!L.in_dual(e_prime)) throw InputError("frame: e_prime must lie in the dual lattice");
    if (L.bilinear(e, e_prime) != 1) throw InputError("frame: (e, e_prime) must equal 1");

    LatticeVector et = e_prime - e * L.q(e_prime);
    e_ = real_of(e);
    e_prime_ = real_of(e_prime);
    e_tilde_ = real_of(et);

    if (!basis_b.empty()) {
        if (static_cast<int>(basis_b.size()) != n_) throw InputError("frame: basis_b must have n vectors");
        for (const auto& b : basis_b)
            if (b.size() != d) throw InputError("frame: basis_b vectors must have lattice dimension");
        basis_b_ = basis_b;
    } else {
        RationalMatrix constraints(2, d);
        LatticeVector ge(L.gram() * e.coords), gep(L.gram() * e_prime.coords);
        for (int j = 0; j < d; ++j) {
            constraints(0, j) = ge.coords[static_cast<size_t>(j)];
            constraints(1, j) = gep.coords[static_cast<size_t>(j)];
        }
        auto kernel = constraints.nullspace();
        if (static_cast<int>(kernel.size()) != n_) throw InputError("frame: complement has wrong dimension");
        RMat W(d, n_);
        for (int k = 0; k < n_; ++k) W.col(k) = LatticeVector(kernel[static_cast<size_t>(k)]).to_real();
        RMat GW = W.transpose() * gram_ * W;
        Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (GW + GW.transpose()));
        // Eigenvalues ascend; the single positive one goes first.
        std::vector<int> order;
        order.push_back(n_ - 1);
        for (int k = 0; k < n_ - 1; ++k) order.push_back(k);
        for (int idx : order) {
            double ev = es.eigenvalues()(idx);
            if (std::abs(ev) < 1e-12) throw InputError("frame: degenerate complement");
            RVec b = W * es.eigenvectors().col(idx);
            b *= std::sqrt(2.0 / std::abs(lattice_pairing(gram_, b, b)));
            for (int j = 0; j < d; ++j)
                if (std::abs(b(j)) > 1e-12) {
                    if (b(j) < 0) b = -b;
                    break;
                }
            basis_b_.push_back(b);
        }
    }

    from_frame_.resize(d, d);
    from_frame_.col(0) = e_;
    from_frame_.col(1) = e_tilde_;
    for (int j = 0; j < n_; ++j) from_frame_.col(2 + j) = basis_b_[static_cast<size_t>(j)];
    to_frame_.resize(d, d);
    to_frame_.row(0) = (gram_ * e_tilde_).transpose();
    to_frame_.row(1) = (gram_ * e_).transpose();
    for (int j = 0; j < n_; ++j)
        to_frame_.row(2 + j) = (gram_ * basis_b_[static_cast<size_t>(j)]).transpose() / (2.0 * eps_sign(j));

    double r = (to_frame_ * from_frame_ - RMat::Identity(d, d)).cwiseAbs().maxCoeff();
    r = std::max(r, std::abs(lattice_pairing(gram_, e_, e_)));
    r = std::max(r, std::abs(lattice_pairing(gram_, e_tilde_, e_tilde_)));
    r = std::max(r, std::abs(lattice_pairing(gram_, e_, e_tilde_) - 1.0));
    for (int i = 0; i < n_; ++i) {
        const RVec& bi = basis_b_[static_cast<size_t>(i)];
        r = std::max(r, std::abs(lattice_pairing(gram_, bi, e_)));
        r = std::max(r, std::abs(lattice_pairing(gram_, bi, e_prime_)));
        for (int j = 0; j < n_; ++j) {
            double expect = i == j ? 2.0 * eps_sign(i) : 0.0;
            r = std::max(r, std::abs(lattice_pairing(gram_, bi, basis_b_[static_cast<size_t>(j)]) - expect));
        }
    }
    residual_ = r;
    if (residual_ > 1e-10) throw InputError("frame: basis violates the frame relations (residual " + std::to_string(r) + ")");
}

RVec WittFrame::eps() const {
    RVec e(n_);
    for (int j = 0; j < n_; ++j) e(j) = eps_sign(j);
    return e;
}

RVec WittFrame::to_frame(const LatticeVector& v) const {
    if (v.size() != dim()) throw InputError("to_frame: dimension mismatch");
    return to_frame_ * v.to_real();
}

RMat WittFrame::isometry_to_frame(const RationalMatrix& m) const {
    RMat M(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) M(i, j) = to_double(m(i, j));
    return to_frame_ * M * from_frame_;
}

cplx q_complex(const CVec& z) {
    cplx s = 0.0;
    for (int j = 0; j < z.size(); ++j) s += eps_sign(j) * z(j) * z(j);
    return s;
}

CVec psi(const CVec& z) {
    CVec p(z.size() + 2);
    p(0) = -q_complex(z);
    p(1) = 1.0;
    p.tail(z.size()) = z;
    return p;
}

DomainPoint::DomainPoint(CVec z) : z_(std::move(z)) {
    if (z_.size() < 1) throw InputError("domain point needs n >= 1 coordinates");
    double q = 0.0;
    for (int j = 0; j < z_.size(); ++j) q += eps_sign(j) * z_(j).imag() * z_(j).imag();
    qY_ = q;
    if (!(qY_ > 0.0) || !(z_(0).imag() > 0.0)) throw DomainError("point is not in the component {q(Y) > 0, y_1 > 0}");
    psiZ_ = psi(z_);
}

DomainPoint DomainPoint::from_xy(const RVec& x, const RVec& y) {
    if (x.size() != y.size()) throw InputError("from_xy: dimension mismatch");
    CVec z(x.size());
    for (int j = 0; j < x.size(); ++j) z(j) = cplx(x(j), y(j));
    return DomainPoint(z);
}

cplx pair_psi(const RVec& lambda, const DomainPoint& Z) {
    const CVec& z = Z.z();
    cplx s = lambda(0) - lambda(1) * q_complex(z);
    for (int j = 0; j < z.size(); ++j) s += 2.0 * eps_sign(j) * lambda(2 + j) * z(j);
    return s;
}

cplx pair_psi_bar(const RVec& lambda, const DomainPoint& Z) { return std::conj(pair_psi(lambda, Z)); }

ActResult act(const RMat& sigma, const DomainPoint& Z) {
    if (sigma.rows() != Z.n() + 2 || sigma.cols() != Z.n() + 2) throw InputError("act: dimension mismatch");
    CVec w = sigma.cast<cplx>() * Z.psiZ();
    cplx j = w(1);
    if (std::abs(j) < 1e-300) throw DomainError("act: factor of automorphy vanishes");
    CVec z = w.tail(Z.n()) / j;
    if (!(z(0).imag() > 0.0)) throw DomainError("act: isometry maps the point to the other component");
    return {DomainPoint(z), j};
}

ActResult act(const WittFrame& frame, const Isometry& sigma, const DomainPoint& Z) {
    return act(frame.isometry_to_frame(sigma.matrix), Z);
}

cplx automorphy_factor(const RMat& sigma, const DomainPoint& Z) {
    return (sigma.row(1).cast<cplx>() * Z.psiZ())(0);
}

bool preserves_component(const RMat& sigma) {
    const int n = static_cast<int>(sigma.rows()) - 2;
    CVec z = CVec::Zero(n);
    z(0) = cplx(0.0, 1.0);
    CVec w = sigma.cast<cplx>() * psi(z);
    return (w(2) / w(1)).imag() > 0.0;
}

ScalarFn slash(ScalarFn h, int kappa, RMat sigma) {
    return [h = std::move(h), kappa, sigma = std::move(sigma)](const DomainPoint& Z) {
        ActResult r = act(sigma, Z);
        return std::pow(r.j, -kappa) * h(r.point);
    };
}

CMat action_jacobian(const RMat& sigma, const DomainPoint& Z) {
    const int n = Z.n();
    const CMat S = sigma.cast<cplx>();
    const CVec w = S * Z.psiZ();
    const cplx j = w(1);
    CMat J(n, n);
    for (int k = 0; k < n; ++k) {
        CVec dpsi = CVec::Zero(n + 2);
        dpsi(0) = -2.0 * eps_sign(k) * Z.z()(k);
        dpsi(2 + k) = 1.0;
        CVec dw = S * dpsi;
        for (int i = 0; i < n; ++i) J(i, k) = (dw(2 + i) * j - w(2 + i) * dw(1)) / (j * j);
    }
    return J;
}

CVec pullback_top(const RMat& sigma, const DomainPoint& Z, const CVec& g_at_image) {
    CMat J = action_jacobian(sigma, Z);
    Eigen::PartialPivLU<CMat> lu(J);
    double scale = std::norm(lu.determinant());
    return scale * (lu.inverse().conjugate() * g_at_image);
}

TopFn slash_top(TopFn H, int kappa, RMat sigma) {
    return [H = std::move(H), kappa, sigma = std::move(sigma)](const DomainPoint& Z) {
        ActResult r = act(sigma, Z);
        CVec g = pullback_top(sigma, Z, H(r.point));
        return CVec(std::pow(r.j, kappa) * g);
    };
}

Projection project(const RVec& lambda, const DomainPoint& Z) {
    const RVec px = Z.psiX();
    const RVec py = Z.psiY();
    const double two_q = 2.0 * Z.qY();
    RVec vp = frame_pairing(lambda, px) / two_q * px + frame_pairing(lambda, py) / two_q * py;
    RVec vm = lambda - vp;
    return {frame_q(vp), frame_q(vm), vp, vm};
}

double q_plus_product(const RVec& lambda, const DomainPoint& Z) {
    return std::norm(pair_psi(lambda, Z)) / (4.0 * Z.qY());
}

double majorant(const RVec& lambda, const DomainPoint& Z) {
    Projection p = project(lambda, Z);
    return p.q_plus - p.q_minus;
}

Metric metric(const RVec& y) {
    const int n = static_cast<int>(y.size());
    double q = 0.0;
    for (int j = 0; j < n; ++j) q += eps_sign(j) * y(j) * y(j);
    if (!(q > 0.0)) throw DomainError("metric: q(Y) must be positive");
    Metric m;
    m.h_upper.resize(n, n);
    m.h_lower.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double delta = i == j ? 1.0 : 0.0;
            m.h_upper(i, j) = 4.0 * y(i) * y(j) - 2.0 * q * delta * eps_sign(i);
            m.h_lower(i, j) = eps_sign(i) * eps_sign(j) * y(i) * y(j) / (q * q) - eps_sign(i) * delta / (2.0 * q);
        }
    m.det_h = m.h_lower.determinant();
    m.vol_scale = std::pow(4.0 * q, -n);
    return m;
}

RMat eichler_frame(const RVec& k) {
    const int n = static_cast<int>(k.size());
    RVec kf = RVec::Zero(n + 2);
    kf.tail(n) = k;
    RVec e = RVec::Zero(n + 2);
    e(0) = 1.0;
    const double qk = frame_q(kf);
    RMat E(n + 2, n + 2);
    for (int c = 0; c < n + 2; ++c) {
        RVec v = RVec::Zero(n + 2);
        v(c) = 1.0;
        const double ve = frame_pairing(v, e);
        E.col(c) = v + ve * kf - frame_pairing(v, kf) * e - qk * ve * e;
    }
    return E;
}

RMat reflection_frame(const RVec& w) {
    const double qw = frame_q(w);
    if (qw == 0.0) throw InputError("reflection_frame: vector must be anisotropic");
    const int d = static_cast<int>(w.size());
    RMat S(d, d);
    for (int c = 0; c < d; ++c) {
        RVec v = RVec::Zero(d);
        v(c) = 1.0;
        S.col(c) = v - frame_pairing(v, w) / qw * w;
    }
    return S;
}

}  // namespace orthoharm
