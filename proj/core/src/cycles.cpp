#include "orthoharm/cycles.hpp"

#include <cmath>
#include <numbers>

#include "orthoharm/errors.hpp"
#include "orthoharm/kernels.hpp"
#include "orthoharm/parallel.hpp"
#include "orthoharm/quadrature.hpp"

namespace orthoharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_identity(const RMat& m) { return (m - RMat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < 1e-15; }

RVec unit_b(int n, int j, double sign = 1.0) {
    RVec v = RVec::Zero(n + 2);
    v(2 + j) = sign;
    return v;
}

// Product h H pulled back along the chart transport, at a model point.
CVec pulled_product(const ScalarFn& h, const TopFn& H, const CycleChart& chart, const DomainPoint& Z) {
    if (is_identity(chart.transport)) return h(Z) * H(Z);
    const ActResult r = act(chart.transport, Z);
    return h(r.point) * pullback_top(chart.transport, Z, H(r.point));
}

// Tensor-product iteration over a list of 1D rules; fn(nodes, weight).
template <class Fn>
void for_each_node(const std::vector<QuadratureRule>& axes, Fn&& fn) {
    const size_t d = axes.size();
    std::vector<size_t> idx(d, 0);
    RVec pt(static_cast<int>(d));
    while (true) {
        double w = 1.0;
        for (size_t a = 0; a < d; ++a) {
            pt(static_cast<int>(a)) = axes[a].nodes[idx[a]];
            w *= axes[a].weights[idx[a]];
        }
        fn(pt, w);
        size_t a = d;
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].nodes.size()) break;
            idx[a] = 0;
            if (a == 0) return;
        }
        if (d == 0) return;
    }
}

// Splits the first axis across workers; partial sums are added in order.
template <class Fn>
cplx tensor_sum(const std::vector<QuadratureRule>& axes, int workers, Fn&& fn) {
    if (axes.empty()) return fn(RVec(0), 1.0);
    const QuadratureRule& first = axes.front();
    std::vector<QuadratureRule> rest(axes.begin() + 1, axes.end());
    std::vector<cplx> partial(first.nodes.size(), 0.0);
    parallel_for(first.nodes.size(), workers, [&](size_t i) {
        cplx acc = 0.0;
        const int d = static_cast<int>(axes.size());
        auto inner = [&](const RVec& p, double w) {
            RVec full(d);
            full(0) = first.nodes[i];
            full.tail(d - 1) = p;
            acc += w * fn(full, 1.0);
        };
        if (rest.empty()) inner(RVec(0), 1.0);
        else for_each_node(rest, inner);
        partial[i] = first.weights[i] * acc;
    });
    cplx total = 0.0;
    for (const cplx& p : partial) total += p;
    return total;
}

// Ball B_k parametrisation: k = 1 -> t; k = 2 -> (rho, theta); k = 3 -> (rho, theta, phi).
void ball_map(int k, const RVec& s, RVec& y, RMat& dy) {
    y.resize(k);
    dy = RMat::Zero(k, k);
    if (k == 1) {
        y(0) = s(0);
        dy(0, 0) = 1.0;
    } else if (k == 2) {
        const double r = s(0), t = s(1);
        y << r * std::cos(t), r * std::sin(t);
        dy << std::cos(t), -r * std::sin(t), std::sin(t), r * std::cos(t);
    } else if (k == 3) {
        const double r = s(0), t = s(1), p = s(2);
        const double ct = std::cos(t), st = std::sin(t), cp = std::cos(p), sp = std::sin(p);
        y << r * ct, r * st * cp, r * st * sp;
        dy << ct, -r * st, 0.0, st * cp, r * ct * cp, -r * st * sp, st * sp, r * ct * sp, r * st * cp;
    } else {
        throw InputError("tube integral: n <= 4 supported");
    }
}

// Unit sphere S_{k-1} in R^k: k = 2 -> theta; k = 3 -> (theta, phi).
void sphere_map(int k, const RVec& s, RVec& w, RMat& dw) {
    w.resize(k);
    dw = RMat::Zero(k, k - 1);
    if (k == 2) {
        w << std::cos(s(0)), std::sin(s(0));
        dw << -std::sin(s(0)), std::cos(s(0));
    } else if (k == 3) {
        const double t = s(0), p = s(1);
        const double ct = std::cos(t), st = std::sin(t), cp = std::cos(p), sp = std::sin(p);
        w << ct, st * cp, st * sp;
        dw << -st, 0.0, ct * cp, -st * sp, ct * sp, st * cp;
    } else {
        throw InputError("tube integral: n <= 4 supported");
    }
}

std::vector<QuadratureRule> ball_rules(int k, int nodes) {
    if (k == 1) return {gauss_legendre(nodes, -1.0, 1.0)};
    if (k == 2) return {gauss_legendre(nodes, 0.0, 1.0), gauss_legendre(nodes, 0.0, kTwoPi)};
    return {gauss_legendre(nodes, 0.0, 1.0), gauss_legendre(nodes, 0.0, std::numbers::pi), gauss_legendre(nodes, 0.0, kTwoPi)};
}

std::vector<QuadratureRule> sphere_rules(int k, int nodes) {
    if (k == 2) return {gauss_legendre(nodes, 0.0, kTwoPi)};
    return {gauss_legendre(nodes, 0.0, std::numbers::pi), gauss_legendre(nodes, 0.0, kTwoPi)};
}

// Tube coordinates P = (y_1', x_2', ..., x_n', x_1', y_2'', ..., y_n'') -> ambient reals.
struct TubeMap {
    int n;
    double eps;

    CVec point(const RVec& P) const {
        CVec z(n);
        const double y1 = P(0), x1p = P(n);
        z(0) = cplx(eps * y1 * x1p, y1);
        for (int j = 1; j < n; ++j) z(j) = cplx(P(j), eps * y1 * P(n + j));
        return z;
    }

    // Rows: (x_1, y_1, ..., x_n, y_n); columns: P.
    RMat jacobian(const RVec& P) const {
        RMat D = RMat::Zero(2 * n, 2 * n);
        const double y1 = P(0), x1p = P(n);
        D(0, 0) = eps * x1p;
        D(0, n) = eps * y1;
        D(1, 0) = 1.0;
        for (int j = 1; j < n; ++j) {
            D(2 * j, j) = 1.0;
            D(2 * j + 1, 0) = eps * P(n + j);
            D(2 * j + 1, n + j) = eps * y1;
        }
        return D;
    }
};

cplx face_contribution(const TubeMap& tm, const RVec& P, const RMat& dP, const RVec& normal_P,
                       const std::function<CVec(const DomainPoint&)>& form) {
    const RMat D = tm.jacobian(P);
    const RMat T = D * dP;
    const RVec N = D * normal_P;
    const int m = static_cast<int>(T.cols());
    RMat frame(2 * tm.n, m + 1);
    frame.col(0) = N;
    frame.rightCols(m) = T;
    const double orient = frame.determinant() >= 0.0 ? 1.0 : -1.0;
    std::vector<RVec> tangents;
    tangents.reserve(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) tangents.push_back(T.col(c));
    const DomainPoint Z(tm.point(P));
    return orient * evaluate_top(form(Z), tangents);
}

cplx tube_integral_once(const std::function<CVec(const DomainPoint&)>& form, double eps, const CycleChart& chart,
                        int window_nodes, int normal_nodes) {
    const int n = static_cast<int>(chart.window.size());
    const TubeMap tm{n, eps};
    std::vector<QuadratureRule> cyc;
    for (const auto& iv : chart.window) cyc.push_back(gauss_legendre(window_nodes, iv.lo, iv.hi));

    cplx total = 0.0;
    // Caps {x_1' = +-1} x B_{n-1}.
    for (double side : {-1.0, 1.0}) {
        std::vector<QuadratureRule> axes = cyc;
        if (n > 1) {
            auto b = ball_rules(n - 1, normal_nodes);
            axes.insert(axes.end(), b.begin(), b.end());
        }
        total += tensor_sum(axes, chart.workers, [&](const RVec& s, double) {
            RVec P(2 * n);
            RMat dP = RMat::Zero(2 * n, 2 * n - 1);
            for (int a = 0; a < n; ++a) {
                P(a) = s(a);
                dP(a, a) = 1.0;
            }
            P(n) = side;
            if (n > 1) {
                RVec y;
                RMat dy;
                ball_map(n - 1, s.tail(n - 1), y, dy);
                P.tail(n - 1) = y;
                dP.block(n + 1, n, n - 1, n - 1) = dy;
            }
            RVec normal = RVec::Zero(2 * n);
            normal(n) = side;
            return face_contribution(tm, P, dP, normal, form);
        });
    }
    if (n == 1) return total;
    // Side (-1, 1) x S_{n-2}.
    if (n == 2) {
        for (double side : {-1.0, 1.0}) {
            std::vector<QuadratureRule> axes = cyc;
            axes.push_back(gauss_legendre(normal_nodes, -1.0, 1.0));
            total += tensor_sum(axes, chart.workers, [&](const RVec& s, double) {
                RVec P(4);
                RMat dP = RMat::Zero(4, 3);
                P << s(0), s(1), s(2), side;
                dP(0, 0) = dP(1, 1) = dP(2, 2) = 1.0;
                RVec normal = RVec::Zero(4);
                normal(3) = side;
                return face_contribution(tm, P, dP, normal, form);
            });
        }
        return total;
    }
    std::vector<QuadratureRule> axes = cyc;
    axes.push_back(gauss_legendre(normal_nodes, -1.0, 1.0));
    auto sr = sphere_rules(n - 1, normal_nodes);
    axes.insert(axes.end(), sr.begin(), sr.end());
    total += tensor_sum(axes, chart.workers, [&](const RVec& s, double) {
        RVec P(2 * n);
        RMat dP = RMat::Zero(2 * n, 2 * n - 1);
        for (int a = 0; a <= n; ++a) {
            P(a) = s(a);
            dP(a, a) = 1.0;
        }
        RVec w;
        RMat dw;
        sphere_map(n - 1, s.tail(n - 2), w, dw);
        P.tail(n - 1) = w;
        dP.block(n + 1, n + 1, n - 1, n - 2) = dw;
        RVec normal = RVec::Zero(2 * n);
        normal.tail(n - 1) = w;
        return face_contribution(tm, P, dP, normal, form);
    });
    return total;
}

cplx neville_at_zero(const std::vector<double>& x, std::vector<cplx> p) {
    const size_t m = x.size();
    for (size_t level = 1; level < m; ++level)
        for (size_t i = 0; i + level < m; ++i)
            p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
    return p[0];
}

TopFn transported(const TopFn& H, int kappa, const CycleChart& chart) {
    if (is_identity(chart.transport)) return H;
    return slash_top(H, kappa, chart.transport);
}

}  // namespace

RMat transport_to(const RVec& model, const RVec& target) {
    const double qm = frame_q(model), qt = frame_q(target);
    if (qm == 0.0 || std::abs(qm - qt) > 1e-12 * std::max(1.0, std::abs(qm)))
        throw InputError("transport: model and target must have the same nonzero norm");
    const int d = static_cast<int>(model.size());
    RMat g = RMat::Identity(d, d);
    if ((model - target).cwiseAbs().maxCoeff() > 1e-15) {
        const RVec w = model - target;
        if (std::abs(frame_q(w)) > 1e-10 * std::abs(qm)) {
            g = reflection_frame(w);
        } else {
            g = reflection_frame(target) * reflection_frame(model + target);
        }
    }
    if (!preserves_component(g)) {
        // Reflect in a positive vector orthogonal to the model vector.
        std::vector<RVec> candidates;
        RVec r1 = RVec::Zero(d);
        r1(0) = r1(1) = 1.0;
        candidates.push_back(r1);
        for (int j = 2; j < d; ++j) candidates.push_back(unit_b(d - 2, j - 2));
        bool fixed = false;
        for (const RVec& r : candidates) {
            if (frame_q(r) <= 0.0 || std::abs(frame_pairing(r, model)) > 1e-14) continue;
            g = g * reflection_frame(r);
            fixed = true;
            break;
        }
        if (!fixed) throw NumericalError("transport: no component-fixing reflection found");
    }
    if ((g * model - target).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, target.cwiseAbs().maxCoeff()))
        throw NumericalError("transport: construction failed");
    return g;
}

CycleChart make_chart_C(const RVec& mu, std::vector<Interval> window) {
    const int n = static_cast<int>(mu.size()) - 2;
    const double q = frame_q(mu);
    if (!(q > 0.0)) throw InputError("chart C: q(mu) > 0 required");
    if (static_cast<int>(window.size()) != n) throw InputError("chart C: window needs n intervals (y_1, x_2, ..., x_n)");
    CycleChart c;
    c.kind = CycleKind::real_analytic;
    c.scale = std::sqrt(q);
    c.transport = transport_to(unit_b(n, 0), mu / c.scale);
    c.window = std::move(window);
    return c;
}

CycleChart make_chart_T(const RVec& nu, std::vector<Interval> window) {
    const int n = static_cast<int>(nu.size()) - 2;
    if (n < 2) throw InputError("chart T: n >= 2 required");
    const double q = frame_q(nu);
    if (!(q < 0.0)) throw InputError("chart T: q(nu) < 0 required");
    if (static_cast<int>(window.size()) != 2 * (n - 1)) throw InputError("chart T: window needs 2(n-1) intervals");
    CycleChart c;
    c.kind = CycleKind::algebraic;
    c.scale = std::sqrt(-q);
    c.transport = transport_to(unit_b(n, n - 1, -1.0), nu / c.scale);
    c.window = std::move(window);
    return c;
}

DomainPoint model_point_C(const RVec& params) {
    const int n = static_cast<int>(params.size());
    CVec z(n);
    z(0) = cplx(0.0, params(0));
    for (int j = 1; j < n; ++j) z(j) = params(j);
    return DomainPoint(z);
}

DomainPoint model_point_T(const RVec& params, int n) {
    CVec z = CVec::Zero(n);
    for (int k = 0; k < n - 1; ++k) z(k) = cplx(params(2 * k), params(2 * k + 1));
    return DomainPoint(z);
}

cplx evaluate_top(const CVec& g, const std::vector<RVec>& tangents) {
    const int n = static_cast<int>(g.size());
    const int m = 2 * n - 1;
    if (static_cast<int>(tangents.size()) != m) throw InputError("evaluate_top: need 2n-1 tangent vectors");
    CMat dz(n, m), dzb(n, m);
    for (int b = 0; b < m; ++b)
        for (int k = 0; k < n; ++k) {
            dz(k, b) = cplx(tangents[static_cast<size_t>(b)](2 * k), tangents[static_cast<size_t>(b)](2 * k + 1));
            dzb(k, b) = std::conj(dz(k, b));
        }
    cplx total = 0.0;
    for (int j = 0; j < n; ++j) {
        if (g(j) == 0.0) continue;
        CMat M(m, m);
        int row = 0;
        for (int k = 0; k < n; ++k) {
            M.row(row++) = dz.row(k);
            if (k != j) M.row(row++) = dzb.row(k);
        }
        total += g(j) * M.determinant();
    }
    return total;
}

IntegralEstimate tube_boundary_integral(const ScalarFn& h, const TopFn& H, double eps, const CycleChart& chart,
                                        bool estimate_error) {
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("tube integral: 0 < eps < 1 required");
    auto form = [&](const DomainPoint& Z) { return pulled_product(h, H, chart, Z); };
    const cplx coarse = tube_integral_once(form, eps, chart, chart.window_nodes, chart.normal_nodes);
    if (!estimate_error) return {static_cast<double>(chart.orientation) * coarse, 0.0};
    const cplx fine = tube_integral_once(form, eps, chart, 2 * chart.window_nodes, 2 * chart.normal_nodes);
    return {static_cast<double>(chart.orientation) * fine, std::abs(fine - coarse)};
}

IntegralEstimate cycle_integral_C(const ScalarFn& h, int kappa, const CycleChart& chart, bool estimate_error) {
    const int n = static_cast<int>(chart.window.size());
    const ScalarFn ht = is_identity(chart.transport) ? h : slash(h, kappa, chart.transport);
    const RVec model = chart.scale * unit_b(n, 0);
    auto once = [&](int nodes) {
        std::vector<QuadratureRule> axes;
        for (const auto& iv : chart.window) axes.push_back(gauss_legendre(nodes, iv.lo, iv.hi));
        return tensor_sum(axes, chart.workers, [&](const RVec& s, double) {
            const DomainPoint Z = model_point_C(s);
            return ht(Z) * std::pow(pair_psi(model, Z), kappa - n);
        });
    };
    const double pre = std::pow(chart.scale, n - 2 * kappa) * chart.orientation;
    const cplx coarse = pre * once(chart.window_nodes);
    if (!estimate_error) return {coarse, 0.0};
    const cplx fine = pre * once(2 * chart.window_nodes);
    return {fine, std::abs(fine - coarse)};
}

CircleIntegral fiber_integral(const TopFn& H, int kappa, double eps, const CycleChart& chart, const CVec& z_prime,
                              const CircleOptions& options) {
    const int n = static_cast<int>(z_prime.size()) + 1;
    double qy = 0.0;
    for (int k = 0; k < n - 1; ++k) qy += eps_sign(k) * z_prime(k).imag() * z_prime(k).imag();
    if (!(qy > 0.0)) throw DomainError("fiber integral: base point not in the domain");
    const double r = eps * std::sqrt(qy);
    const TopFn Ht = transported(H, kappa, chart);
    auto once = [&](int N) {
        cplx acc = 0.0;
        for (int m = 0; m < N; ++m) {
            const double th = kTwoPi * m / N;
            const cplx zn = std::polar(r, th);
            CVec z(n);
            z.head(n - 1) = z_prime;
            z(n - 1) = zn;
            const cplx g = Ht(DomainPoint(z))(n - 1);
            const cplx dz = options.sector == Sector::holomorphic ? cplx(0.0, 1.0) * zn : cplx(0.0, -1.0) * std::conj(zn);
            acc += g / std::pow(chart.scale * 2.0 * zn, kappa) * dz;
        }
        return acc * (kTwoPi / N);
    };
    const cplx a = once(options.nodes);
    const cplx b = once(2 * options.nodes);
    return {b, std::abs(b - a)};
}

std::vector<RestrictionSample> restrict_T(const TopFn& H, int kappa, double eps, const CycleChart& chart,
                                          const CircleOptions& options) {
    const int n = static_cast<int>(chart.window.size()) / 2 + 1;
    std::vector<QuadratureRule> axes;
    for (const auto& iv : chart.window) axes.push_back(gauss_legendre(chart.window_nodes, iv.lo, iv.hi));
    std::vector<std::pair<RVec, double>> nodes;
    for_each_node(axes, [&](const RVec& p, double w) { nodes.emplace_back(p, w); });
    std::vector<RestrictionSample> out(nodes.size());
    const std::vector<double> sched{eps, eps / 2.0, eps / 4.0};
    parallel_for(nodes.size(), chart.workers, [&](size_t i) {
        const DomainPoint base = model_point_T(nodes[i].first, n);
        const CVec zp = base.z().head(n - 1);
        std::vector<cplx> vals;
        double change = 0.0;
        for (double e : sched) {
            CircleIntegral c = fiber_integral(H, kappa, e, chart, zp, options);
            vals.push_back(c.value);
            change = std::max(change, c.doubling_change);
        }
        out[i] = {nodes[i].first, nodes[i].second, vals[0], extrapolate_to_zero(sched, vals), change};
    });
    return out;
}

CycleIntegralT cycle_integral_T(const TopFn& H, int kappa, double eps, const CycleChart& chart,
                                const CircleOptions& options) {
    const int n = static_cast<int>(chart.window.size()) / 2 + 1;
    const auto samples = restrict_T(H, kappa, eps, chart, options);
    const cplx vol = std::pow(cplx(0.0, -2.0), n - 1) * static_cast<double>(chart.orientation);
    cplx v = 0.0, x = 0.0;
    for (const auto& s : samples) {
        v += s.weight * s.value;
        x += s.weight * s.extrapolated;
    }
    return {vol * v, vol * x};
}

IntegralEstimate tube_boundary_integral_T(const TopFn& F, double eps, const CycleChart& chart) {
    const int n = static_cast<int>(chart.window.size()) / 2 + 1;
    std::vector<QuadratureRule> axes;
    for (const auto& iv : chart.window) axes.push_back(gauss_legendre(chart.window_nodes, iv.lo, iv.hi));
    QuadratureRule theta;
    const int N = chart.normal_nodes;
    for (int m = 0; m < N; ++m) {
        theta.nodes.push_back(kTwoPi * m / N);
        theta.weights.push_back(kTwoPi / N);
    }
    axes.push_back(theta);
    const cplx total = tensor_sum(axes, chart.workers, [&](const RVec& s, double) {
        CVec z(n);
        for (int k = 0; k < n - 1; ++k) z(k) = cplx(s(2 * k), s(2 * k + 1));
        double qy = 0.0;
        for (int k = 0; k < n - 1; ++k) qy += eps_sign(k) * s(2 * k + 1) * s(2 * k + 1);
        const double r = eps * std::sqrt(qy);
        const double th = s(2 * n - 2);
        z(n - 1) = std::polar(r, th);
        std::vector<RVec> tangents;
        for (int a = 0; a < 2 * n - 2; ++a) {
            RVec t = RVec::Zero(2 * n);
            t(a) = 1.0;
            if (a % 2 == 1) {
                const int k = a / 2;
                const double dr = eps * eps_sign(k) * s(a) / std::sqrt(qy);
                t(2 * n - 2) = dr * std::cos(th);
                t(2 * n - 1) = dr * std::sin(th);
            }
            tangents.push_back(t);
        }
        RVec tt = RVec::Zero(2 * n);
        tt(2 * n - 2) = -r * std::sin(th);
        tt(2 * n - 1) = r * std::cos(th);
        tangents.push_back(tt);
        RMat frame(2 * n, 2 * n);
        RVec normal = RVec::Zero(2 * n);
        normal(2 * n - 2) = std::cos(th);
        normal(2 * n - 1) = std::sin(th);
        frame.col(0) = normal;
        for (int c = 0; c < 2 * n - 1; ++c) frame.col(c + 1) = tangents[static_cast<size_t>(c)];
        const double orient = frame.determinant() >= 0.0 ? 1.0 : -1.0;
        return orient * evaluate_top(F(DomainPoint(z)), tangents);
    });
    return {static_cast<double>(chart.orientation) * total, 0.0};
}

cplx extrapolate_to_zero(const std::vector<double>& eps, const std::vector<cplx>& values, double order) {
    if (eps.size() != values.size() || eps.empty()) throw InputError("extrapolation: need matching nonempty schedules");
    std::vector<double> x;
    for (double e : eps) x.push_back(std::pow(e, order));
    return neville_at_zero(x, values);
}

double loglog_slope(const std::vector<double>& eps, const std::vector<cplx>& values) {
    const size_t m = eps.size();
    if (m < 2 || values.size() != m) throw InputError("loglog_slope: need at least two points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double x = std::log(eps[i]);
        const double y = std::log(std::abs(values[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

cplx SmoothBump::value(const DomainPoint& Z) const {
    double v = 1.0;
    for (const auto& f : factors) {
        const cplx zk = Z.z()(f.axis / 2);
        const double t = f.axis % 2 == 0 ? zk.real() : zk.imag();
        const double s = (t - f.center) / f.radius;
        if (std::abs(s) >= 1.0) return 0.0;
        v *= std::pow(1.0 - s * s, 4);
    }
    return v;
}

Form01 SmoothBump::dbar(const DomainPoint& Z) const {
    const int n = Z.n();
    std::vector<double> w(factors.size()), dw(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        const cplx zk = Z.z()(f.axis / 2);
        const double t = f.axis % 2 == 0 ? zk.real() : zk.imag();
        const double s = (t - f.center) / f.radius;
        if (std::abs(s) >= 1.0) return {CVec::Zero(n)};
        w[i] = std::pow(1.0 - s * s, 4);
        dw[i] = -8.0 * s * std::pow(1.0 - s * s, 3) / f.radius;
    }
    CVec d = CVec::Zero(n);
    for (size_t i = 0; i < factors.size(); ++i) {
        double partial = dw[i];
        for (size_t k = 0; k < factors.size(); ++k)
            if (k != i) partial *= w[k];
        const int axis = factors[i].axis;
        d(axis / 2) += 0.5 * (axis % 2 == 0 ? cplx(partial, 0.0) : cplx(0.0, partial));
    }
    return {d};
}

ScalarFn SmoothBump::as_function() const {
    SmoothBump self = *this;
    return [self](const DomainPoint& Z) { return self.value(Z); };
}

namespace {

QuadratureRule graded_toward(int nodes, double a, double b, bool toward_b, int panels) {
    if (!toward_b) return graded_gauss_legendre(nodes, a, b, panels, 0.4);
    QuadratureRule r = graded_gauss_legendre(nodes, -b, -a, panels, 0.4);
    for (auto& x : r.nodes) x = -x;
    return r;
}

}  // namespace

StokesCheck windowed_stokes_check(const SmoothBump& h, int kappa, double eps, int nodes, int panels) {
    Interval box[4];
    bool seen[4] = {false, false, false, false};
    for (const auto& f : h.factors) {
        if (f.axis < 0 || f.axis > 3) throw InputError("stokes check: n = 2 bump axes are 0..3");
        box[f.axis] = {f.center - f.radius, f.center + f.radius};
        seen[f.axis] = true;
    }
    for (bool s : seen)
        if (!s) throw InputError("stokes check: every axis (x_1, y_1, x_2, y_2) needs a bump factor");
    const double hole = eps * box[1].hi;
    if (!(box[0].lo < -hole && box[0].hi > hole && box[3].lo < -hole && box[3].hi > hole))
        throw InputError("stokes check: tube must lie inside the support box");

    const RVec b1 = unit_b(2, 0);
    const KernelParams kp{b1, kappa, Branch::real};
    const QuadratureRule ry = gauss_legendre(nodes, box[1].lo, box[1].hi);
    const QuadratureRule rx2 = gauss_legendre(nodes, box[2].lo, box[2].hi);

    cplx omega_term = 0.0, dbar_term = 0.0;
    for (size_t iy = 0; iy < ry.nodes.size(); ++iy) {
        const double y1 = ry.nodes[iy];
        const double e = eps * y1;
        const QuadratureRule xs[3] = {graded_toward(nodes, box[0].lo, -e, true, panels), gauss_legendre(nodes, -e, e),
                                      graded_toward(nodes, e, box[0].hi, false, panels)};
        const QuadratureRule ys[3] = {graded_toward(nodes, box[3].lo, -e, true, panels), gauss_legendre(nodes, -e, e),
                                      graded_toward(nodes, e, box[3].hi, false, panels)};
        for (size_t ix2 = 0; ix2 < rx2.nodes.size(); ++ix2) {
            const double x2 = rx2.nodes[ix2];
            const double wout = ry.weights[iy] * rx2.weights[ix2];
            for (int cx = 0; cx < 3; ++cx)
                for (int cy = 0; cy < 3; ++cy) {
                    if (cx == 1 && cy == 1) continue;
                    for (size_t a = 0; a < xs[cx].nodes.size(); ++a)
                        for (size_t b = 0; b < ys[cy].nodes.size(); ++b) {
                            CVec z(2);
                            z << cplx(xs[cx].nodes[a], y1), cplx(x2, ys[cy].nodes[b]);
                            const DomainPoint Z(z);
                            const double w = wout * xs[cx].weights[a] * ys[cy].weights[b];
                            const double q = Z.qY();
                            const double dens = 1.0 / (4.0 * q * q);  // dmu = (-1/(2q))^2 dx dy
                            const cplx hv = h.value(Z);
                            if (hv == 0.0) continue;
                            omega_term += w * dens * hv * std::conj(omega_kernel(kp, Z)) * std::pow(q, kappa);
                            dbar_term += w * dens * wedge_top(h.dbar(Z), p_tilde(kp, Z), Z);
                        }
                }
        }
    }
    CycleChart chart = make_chart_C(b1, {box[1], box[2]});
    chart.window_nodes = nodes;
    chart.normal_nodes = nodes;
    const IntegralEstimate tube = tube_boundary_integral(h.as_function(), p_tilde_field(kp), eps, chart, false);
    StokesCheck out;
    out.omega_term = omega_term;
    out.dbar_term = dbar_term;
    out.boundary_term = -tube.value;
    out.residual = std::abs(omega_term + dbar_term - out.boundary_term);
    return out;
}

}  // namespace orthoharm
