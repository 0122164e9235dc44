#pragma once

#include <memory>
#include <utility>

#include "orthoharm/domain.hpp"

namespace orthoharm {

// sum f_i dzbar_i at a point.
struct Form01 {
    CVec coeffs;
};

// sum g_j hat(dzbar_j) at a point, where hat(dzbar_j) is
// dz_1 ^ dzbar_1 ^ ... ^ dz_n ^ dzbar_n with dzbar_j removed.
struct FormTop {
    CVec coeffs;
};

struct FdOptions {
    // Step is rel_step * sqrt(q(Y)).
    double rel_step = 1e-4;
    // 0: plain central differences; 1: one Richardson level.
    int richardson_levels = 1;
};

// Scalar field with closed-form dbar, built from q(Y), (lambda, psi(Z)),
// (lambda, psi(Zbar)), q(lambda_{Z+-}) by sums, products, quotients and
// integer powers.
class CatalogField {
public:
    using Jet = std::pair<cplx, CVec>;

    static CatalogField q_Y();
    static CatalogField pair_psi(const RVec& lambda);
    static CatalogField pair_psi_bar(const RVec& lambda);
    static CatalogField q_plus(const RVec& lambda);
    static CatalogField q_minus(const RVec& lambda);
    static CatalogField constant(cplx c);

    friend CatalogField operator+(const CatalogField& a, const CatalogField& b);
    friend CatalogField operator-(const CatalogField& a, const CatalogField& b);
    friend CatalogField operator*(const CatalogField& a, const CatalogField& b);
    friend CatalogField operator/(const CatalogField& a, const CatalogField& b);
    friend CatalogField operator*(cplx s, const CatalogField& a);
    CatalogField pow(int k) const;

    cplx value(const DomainPoint& Z) const { return jet(Z).first; }
    Form01 dbar(const DomainPoint& Z) const { return {jet(Z).second}; }
    Jet jet(const DomainPoint& Z) const { return (*eval_)(Z); }
    ScalarFn as_function() const;

private:
    using Eval = std::function<Jet(const DomainPoint&)>;
    explicit CatalogField(Eval e) : eval_(std::make_shared<Eval>(std::move(e))) {}
    std::shared_ptr<const Eval> eval_;
};

Form01 dbar_scalar(const CatalogField& f, const DomainPoint& Z);
// d/dzbar_j = (d/dx_j + i d/dy_j) / 2 by central differences.
Form01 dbar_scalar(const ScalarFn& f, const DomainPoint& Z, const FdOptions& fd = {});

// Antilinear Hodge star on (0,1)-forms:
// g_j = -(1/2) sum_i conj(f_i) h^{ij}(Y) / (4i q(Y))^n.
FormTop star01(const Form01& omega, const DomainPoint& Z);
// Scalar star(alpha ^ star(beta)) = (1/2) sum f_i conj(g_j) h^{ij}(Y).
cplx star_pairing(const Form01& alpha, const Form01& beta, const DomainPoint& Z);
// alpha ^ H as a multiple of dmu(Z): -(4i q(Y))^n sum f_j g_j.
cplx wedge_top(const Form01& alpha, const FormTop& H, const DomainPoint& Z);

// xi_kappa h = q(Y)^kappa star01(dbar h).
FormTop xi(const CatalogField& h, int kappa, const DomainPoint& Z);
FormTop xi(const ScalarFn& h, int kappa, const DomainPoint& Z, const FdOptions& fd = {});

// Divergence part sum_j dg_j/dzbar_j by central differences.
cplx dbar_top(const TopFn& H, const DomainPoint& Z, const FdOptions& fd = {});
// xi_{-kappa} H for H of weight -kappa:
// conj(-(4i q(Y))^n sum_j dg_j/dzbar_j) q(Y)^{-kappa}.
cplx xi_top(const TopFn& H, int kappa, const DomainPoint& Z, const FdOptions& fd = {});

// Delta_kappa h = xi_{-kappa} xi_kappa h, both steps by finite differences.
cplx laplace(const ScalarFn& h, int kappa, const DomainPoint& Z, const FdOptions& fd = {});
// Same with the inner xi in closed form.
cplx laplace(const CatalogField& h, int kappa, const DomainPoint& Z, const FdOptions& fd = {});

}  // namespace orthoharm
