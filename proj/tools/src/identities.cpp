#include <cmath>

#include "common.hpp"
#include "orthoharm/errors.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

namespace {

void geometry(int n, int samples, const SuiteParams& p, Rng& rng, Report& out) {
    if (samples == 0) return;
    const std::string tag = "/n=" + std::to_string(n);
    const std::string in = text("geometry", n, samples, p.seed);
    const double tol = tol_or(p, 1e-10);
    auto iso = worst("geometry/psi-isotropic" + tag, "psi-isotropy", "geometry", in, tol);
    auto herm = worst("geometry/psi-hermitian" + tag, "psi-hermitian-norm", "geometry", in, tol);
    auto reim = worst("geometry/psi-real-imaginary" + tag, "psi-real-imaginary", "geometry", in, tol);
    auto epair = worst("geometry/e-pairing" + tag, "psi-e-pairing", "geometry", in, tol);
    auto equi = worst("geometry/equivariance" + tag, "automorphy-equivariance", "geometry", in, tol);
    auto imag = worst("geometry/imaginary-part" + tag, "imaginary-part-transformation", "geometry", in, tol);
    auto cocycle = worst("geometry/cocycle" + tag, "automorphy-cocycle", "geometry", in, tol);
    auto proj = worst("geometry/projection" + tag, "grassmannian-projection", "geometry", in, tol);
    for (int s = 0; s < samples; ++s) {
        const DomainPoint Z = random_point(n, rng);
        const RVec lam = random_vector(n, rng);
        const RMat g1 = random_isometry(n, rng);
        const RMat g2 = random_isometry(n, rng);
        const CVec& ps = Z.psiZ();
        const double qY = Z.qY();
        const double psi_scale = ps.squaredNorm();
        iso.add(frame_pairing(ps, ps) / 2.0, 0.0, psi_scale);
        herm.add(frame_pairing(ps, CVec(ps.conjugate())), 4.0 * qY);
        const RVec px = Z.psiX(), py = Z.psiY();
        reim.add(frame_q(px), qY);
        reim.add(frame_q(py), qY);
        reim.add(frame_pairing(px, py), 0.0, qY);
        RVec e = RVec::Zero(n + 2);
        e(0) = 1.0;
        epair.add(pair_psi(e, Z), 1.0);
        try {
            const ActResult r = act(g1, Z);
            const RVec pre = g1.inverse() * lam;
            const cplx lhs = pair_psi(lam, r.point);
            const cplx rhs = pair_psi(pre, Z) / r.j;
            equi.add(lhs, rhs, lam.norm() * ps.norm() / std::abs(r.j));
            imag.add(r.point.qY(), qY / std::norm(r.j));
            const ActResult r2 = act(g2, Z);
            const ActResult r12 = act(g1, r2.point);
            const ActResult both = act(g1 * g2, Z);
            cocycle.add(both.j, r12.j * r2.j);
            cocycle.add((both.point.z() - r12.point.z()).norm(), 0.0, both.point.z().norm());
        } catch (const std::exception& ex) {
            equi.fail(ex.what());
        }
        const Projection pr = project(lam, Z);
        const double scale = std::abs(pr.q_plus) + std::abs(pr.q_minus);
        proj.add(pr.q_plus, q_plus_product(lam, Z), scale);
        proj.add(pr.q_plus + pr.q_minus, frame_q(lam), scale);
        if (pr.q_plus < -1e-12 * scale || pr.q_minus > 1e-12 * scale) proj.fail("projection signs violated");
    }
    for (auto* w : {&iso, &herm, &reim, &epair, &equi, &imag, &cocycle, &proj}) out.records.push_back(w->record());

    const auto ctx = build_context(standard_lattice(n));
    auto rec = make_abs_record("geometry/witt-frame" + tag, "witt-frame", text("frame", n), ctx->frame.residual(), 0.0,
                               tol_or(p, 1e-12));
    out.records.push_back(grouped(rec, "geometry"));
}

void metric_checks(int n, int samples, const SuiteParams& p, Rng& rng, Report& out) {
    if (samples == 0) return;
    const std::string tag = "/n=" + std::to_string(n);
    const std::string in = text("metric", n, samples, p.seed);
    const double tol = tol_or(p, 1e-10);
    auto inv = worst("metric/inverse" + tag, "metric-inverse", "metric", in, tol, true);
    auto det = worst("metric/determinant" + tag, "metric-determinant", "metric", in, tol);
    for (int s = 0; s < samples; ++s) {
        const DomainPoint Z = random_point(n, rng);
        const Metric m = metric(Z.y());
        const RMat prod = m.h_upper * m.h_lower;
        inv.add((prod - RMat::Identity(n, n)).cwiseAbs().maxCoeff(), 0.0);
        det.add(m.det_h * std::pow(2.0 * Z.qY(), n), 1.0);
    }
    out.records.push_back(inv.record());
    out.records.push_back(det.record());
}

void star_products(int n, int samples, const SuiteParams& p, Rng& rng, Report& out) {
    if (samples == 0) return;
    const std::string tag = "/n=" + std::to_string(n);
    const std::string in = text("star-products", n, samples, p.seed);
    const double tol = tol_or(p, 1e-9);
    auto c1 = worst("star-products/i" + tag, "star-products-i", "star-products", in, tol);
    auto c2 = worst("star-products/ii" + tag, "star-products-ii", "star-products", in, tol);
    auto c3 = worst("star-products/iii" + tag, "star-products-iii", "star-products", in, tol);
    auto c4 = worst("star-products/iv" + tag, "star-products-iv", "star-products", in, tol);
    auto c5 = worst("star-products/dbar-wedge-p" + tag, "p-wedge-p", "star-products", in, tol);
    for (int s = 0; s < samples; ++s) {
        const DomainPoint Z = random_point(n, rng);
        const RVec lam = random_vector(n, rng);
        const double q = Z.qY();
        const double lp = lam(1);
        const double lX = frame_pairing(lam, Z.psiX());
        const double lY = frame_pairing(lam, Z.psiY());
        const double ql = frame_q(lam);
        const cplx a = pair_psi(lam, Z), ab = pair_psi_bar(lam, Z);
        const CatalogField A = CatalogField::pair_psi_bar(lam);
        const CatalogField Q = CatalogField::q_Y();
        const CVec dA = A.dbar(Z).coeffs, dq = Q.dbar(Z).coeffs;

        c1.add(star_pairing({dA}, {dA}, Z), 2 * lY * lY - 4 * q * ql + 4 * lX * q * lp,
               2 * lY * lY + 4 * std::abs(q * ql) + 4 * std::abs(lX * q * lp));
        c2.add(std::norm(a) * star_pairing({dq}, {dq}, Z) / (q * q), std::norm(a));
        c3.add(-2.0 * std::real(star_pairing({CVec(a * dA)}, {dq}, Z) / q), -2 * lY * lY - 4 * lX * q * lp,
               2 * lY * lY + 4 * std::abs(lX * q * lp));
        const CVec f = (q * dA - ab * dq) / (q * q);
        const double qm = ql - q_plus_product(lam, Z);
        const double scale4 = 4.0 * (std::abs(ql) + q_plus_product(lam, Z)) / q;
        c4.add(star_pairing({f}, {f}, Z), -4.0 * qm / q, scale4);
        const FormTop pz = p_form(lam, Z);
        c5.add(std::conj(wedge_top({f}, pz, Z)) / q, -4.0 * qm / q, scale4);
    }
    for (auto* w : {&c1, &c2, &c3, &c4, &c5}) out.records.push_back(w->record());
}

void laplace_checks(int n, int samples, const SuiteParams& p, Rng& rng, Report& out) {
    if (samples == 0) return;
    const std::string tag = "/n=" + std::to_string(n);
    auto w = worst("laplace/eigenvalue" + tag, "laplace-eigenfunction", "laplace", text("laplace", n, samples, p.seed),
                   tol_or(p, 1e-6));
    for (int s = 0; s < samples; ++s) {
        const DomainPoint Z = random_point(n, rng);
        const RVec lam = random_vector(n, rng);
        ScalarFn h = [lam](const DomainPoint& W) { return pair_psi_bar(lam, W) / W.qY(); };
        try {
            w.add(laplace(h, 1, Z), 0.5 * n * h(Z));
        } catch (const std::exception& ex) {
            w.fail(ex.what());
        }
    }
    out.records.push_back(w.record());
}

}  // namespace

Report run_identities(const SuiteParams& p) {
    Report out;
    out.suite = "identities";
    out.seed = p.seed;
    const std::vector<int> ns = p.n_values.empty() ? std::vector<int>{1, 2, 3, 4} : p.n_values;
    Rng root(p.seed);
    for (int n : ns) {
        Rng rng = root.split(static_cast<std::uint64_t>(n));
        geometry(n, samples_or(p, 250), p, rng, out);
        metric_checks(n, samples_or(p, 250), p, rng, out);
        star_products(n, samples_or(p, 200), p, rng, out);
        laplace_checks(n, samples_or(p, 50), p, rng, out);
    }
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
