#include "orthoharm/calculus.hpp"

#include <cmath>

#include "orthoharm/errors.hpp"

namespace orthoharm {

namespace {

constexpr cplx I(0.0, 1.0);

cplx four_i_q_pow(const DomainPoint& Z) { return std::pow(4.0 * I * Z.qY(), Z.n()); }

double fd_step(const DomainPoint& Z, const FdOptions& fd) {
    double h = fd.rel_step * std::sqrt(Z.qY());
    if (!(h > 1e-300)) throw NumericalError("finite differences: step underflow");
    return h;
}

DomainPoint shifted(const DomainPoint& Z, int j, cplx delta) {
    CVec z = Z.z();
    z(j) += delta;
    try {
        return DomainPoint(z);
    } catch (const DomainError&) {
        throw NumericalError("finite differences: stencil leaves the domain; reduce the step");
    }
}

// Central difference of F along direction delta in coordinate j, with
// optional Richardson extrapolation in the step.
template <class F, class T>
T central(const F& f, const DomainPoint& Z, int j, cplx unit, double h, int levels) {
    auto d = [&](double s) -> T { return (f(shifted(Z, j, unit * s)) - f(shifted(Z, j, -unit * s))) / (2.0 * s); };
    if (levels <= 0) return d(h);
    T coarse = d(h);
    T fine = d(h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

CatalogField CatalogField::q_Y() {
    return CatalogField([](const DomainPoint& Z) {
        const int n = Z.n();
        CVec d(n);
        for (int j = 0; j < n; ++j) d(j) = I * eps_sign(j) * Z.z()(j).imag();
        return Jet{Z.qY(), d};
    });
}

CatalogField CatalogField::pair_psi(const RVec& lambda) {
    return CatalogField([lambda](const DomainPoint& Z) { return Jet{orthoharm::pair_psi(lambda, Z), CVec::Zero(Z.n())}; });
}

CatalogField CatalogField::pair_psi_bar(const RVec& lambda) {
    return CatalogField([lambda](const DomainPoint& Z) {
        const int n = Z.n();
        CVec d(n);
        for (int j = 0; j < n; ++j) d(j) = 2.0 * eps_sign(j) * (lambda(2 + j) - lambda(1) * std::conj(Z.z()(j)));
        return Jet{orthoharm::pair_psi_bar(lambda, Z), d};
    });
}

CatalogField CatalogField::q_plus(const RVec& lambda) {
    return pair_psi(lambda) * pair_psi_bar(lambda) / (4.0 * q_Y());
}

CatalogField CatalogField::q_minus(const RVec& lambda) {
    return constant(frame_q(lambda)) - q_plus(lambda);
}

CatalogField CatalogField::constant(cplx c) {
    return CatalogField([c](const DomainPoint& Z) { return Jet{c, CVec::Zero(Z.n())}; });
}

CatalogField operator+(const CatalogField& a, const CatalogField& b) {
    return CatalogField([a, b](const DomainPoint& Z) {
        auto ja = a.jet(Z), jb = b.jet(Z);
        return CatalogField::Jet{ja.first + jb.first, ja.second + jb.second};
    });
}

CatalogField operator-(const CatalogField& a, const CatalogField& b) { return a + cplx(-1.0) * b; }

CatalogField operator*(const CatalogField& a, const CatalogField& b) {
    return CatalogField([a, b](const DomainPoint& Z) {
        auto ja = a.jet(Z), jb = b.jet(Z);
        return CatalogField::Jet{ja.first * jb.first, ja.second * jb.first + ja.first * jb.second};
    });
}

CatalogField operator/(const CatalogField& a, const CatalogField& b) {
    return CatalogField([a, b](const DomainPoint& Z) {
        auto ja = a.jet(Z), jb = b.jet(Z);
        if (jb.first == 0.0) throw SingularityError("catalog field: division by zero", 0.0);
        return CatalogField::Jet{ja.first / jb.first, (ja.second * jb.first - ja.first * jb.second) / (jb.first * jb.first)};
    });
}

CatalogField operator*(cplx s, const CatalogField& a) {
    return CatalogField([s, a](const DomainPoint& Z) {
        auto ja = a.jet(Z);
        return CatalogField::Jet{s * ja.first, s * ja.second};
    });
}

CatalogField CatalogField::pow(int k) const {
    CatalogField self = *this;
    return CatalogField([self, k](const DomainPoint& Z) {
        auto j = self.jet(Z);
        if (k < 0 && j.first == 0.0) throw SingularityError("catalog field: negative power of zero", 0.0);
        if (k == 0) return Jet{1.0, CVec::Zero(Z.n())};
        cplx pk1 = std::pow(j.first, k - 1);
        return Jet{pk1 * j.first, static_cast<double>(k) * pk1 * j.second};
    });
}

ScalarFn CatalogField::as_function() const {
    CatalogField self = *this;
    return [self](const DomainPoint& Z) { return self.value(Z); };
}

Form01 dbar_scalar(const CatalogField& f, const DomainPoint& Z) { return f.dbar(Z); }

Form01 dbar_scalar(const ScalarFn& f, const DomainPoint& Z, const FdOptions& fd) {
    const int n = Z.n();
    const double h = fd_step(Z, fd);
    CVec d(n);
    for (int j = 0; j < n; ++j) {
        cplx dx = central<ScalarFn, cplx>(f, Z, j, cplx(1.0, 0.0), h, fd.richardson_levels);
        cplx dy = central<ScalarFn, cplx>(f, Z, j, I, h, fd.richardson_levels);
        d(j) = 0.5 * (dx + I * dy);
    }
    return {d};
}

FormTop star01(const Form01& omega, const DomainPoint& Z) {
    const Metric m = metric(Z.y());
    CVec g = (-0.5 / four_i_q_pow(Z)) * (m.h_upper.cast<cplx>().transpose() * omega.coeffs.conjugate());
    return {g};
}

cplx star_pairing(const Form01& alpha, const Form01& beta, const DomainPoint& Z) {
    const Metric m = metric(Z.y());
    return 0.5 * (alpha.coeffs.transpose() * m.h_upper.cast<cplx>() * beta.coeffs.conjugate())(0);
}

cplx wedge_top(const Form01& alpha, const FormTop& H, const DomainPoint& Z) {
    return -four_i_q_pow(Z) * (alpha.coeffs.transpose() * H.coeffs)(0);
}

FormTop xi(const CatalogField& h, int kappa, const DomainPoint& Z) {
    FormTop s = star01(h.dbar(Z), Z);
    s.coeffs *= std::pow(Z.qY(), kappa);
    return s;
}

FormTop xi(const ScalarFn& h, int kappa, const DomainPoint& Z, const FdOptions& fd) {
    FormTop s = star01(dbar_scalar(h, Z, fd), Z);
    s.coeffs *= std::pow(Z.qY(), kappa);
    return s;
}

cplx dbar_top(const TopFn& H, const DomainPoint& Z, const FdOptions& fd) {
    const int n = Z.n();
    const double h = fd_step(Z, fd);
    cplx div = 0.0;
    for (int j = 0; j < n; ++j) {
        auto gj = [&H, j](const DomainPoint& W) { return H(W)(j); };
        cplx dx = central<decltype(gj), cplx>(gj, Z, j, cplx(1.0, 0.0), h, fd.richardson_levels);
        cplx dy = central<decltype(gj), cplx>(gj, Z, j, I, h, fd.richardson_levels);
        div += 0.5 * (dx + I * dy);
    }
    return div;
}

cplx xi_top(const TopFn& H, int kappa, const DomainPoint& Z, const FdOptions& fd) {
    cplx top = -four_i_q_pow(Z) * dbar_top(H, Z, fd);
    return std::conj(top) * std::pow(Z.qY(), -kappa);
}

cplx laplace(const ScalarFn& h, int kappa, const DomainPoint& Z, const FdOptions& fd) {
    TopFn inner = [h, kappa, fd](const DomainPoint& W) { return xi(h, kappa, W, fd).coeffs; };
    return xi_top(inner, kappa, Z, fd);
}

cplx laplace(const CatalogField& h, int kappa, const DomainPoint& Z, const FdOptions& fd) {
    TopFn inner = [h, kappa](const DomainPoint& W) { return xi(h, kappa, W).coeffs; };
    return xi_top(inner, kappa, Z, fd);
}

}  // namespace orthoharm
