#include <cmath>

#include "common.hpp"
#include "orthoharm/errors.hpp"
#include "orthoharm/tools/suites.hpp"

namespace orthoharm::tools {

using namespace detail;

namespace {

// Smallest -q(lambda_{Z-}) / q(lambda) over the vector set (distance to the cycles C_lambda).
double cycle_gap(const TruncatedSeries& ts, const DomainPoint& Z) {
    double gap = 1e300;
    for (const RVec& v : ts.frame_vectors()) {
        const double q = frame_q(v);
        gap = std::min(gap, std::abs(q - q_plus_product(v, Z)) / std::abs(q));
    }
    return gap;
}

}  // namespace

Report run_series(const SuiteParams& p) {
    Report out;
    out.suite = "series";
    out.seed = p.seed;
    std::vector<LatticeConfig> lattices = p.lattices;
    if (lattices.empty()) lattices = {standard_lattice(1), standard_lattice(2)};
    const int samples = samples_or(p, 2);
    Rng root(p.seed);
    for (size_t li = 0; li < lattices.size(); ++li) {
        const auto ctx = build_context(lattices[li]);
        const int n = ctx->lattice.n();
        const std::string lname = lattices[li].label.empty() ? "lattice" + std::to_string(li) : lattices[li].label;
        Rng rng = root.split(li + 1);
        // lambda and -lambda both occur for the zero coset, so odd weights vanish identically.
        const int even_kappa = (n + 2) % 2 == 0 ? n + 2 : n + 3;
        const std::vector<int> kappas = p.kappa_values.empty() ? std::vector<int>{even_kappa} : p.kappa_values;
        for (int kappa : kappas) {
            for (const Rational& m : p.m_values) {
                const std::string base = "series/" + lname + "/kappa=" + std::to_string(kappa) + "/m=" + to_string(m);
                SeriesSpec spec{ctx, ctx->cosets.front(), m, kappa, 0.0, p.workers};
                for (int s = 0; s < samples; ++s) {
                    // A sample point away from the singular cycles of the largest vector set.
                    DomainPoint Z = random_point(n, rng, 1.0, 2.0);
                    for (int attempt = 0; attempt < 100; ++attempt) {
                        spec.bound = 2.0 * p.bounds.back();
                        if (m < 0 || cycle_gap(TruncatedSeries(spec, Z), Z) > 0.05) break;
                        Z = random_point(n, rng, 1.0, 2.0);
                    }
                    const std::string ztag = "/z=" + std::to_string(s);
                    const std::string zin = vec_text(Z.x()) + "|" + vec_text(Z.y());
                    for (double B : p.bounds) {
                        const std::string tag = base + "/B=" + num(B) + ztag;
                        const std::string in = text(lname, kappa, to_string(m), B, zin);
                        try {
                            spec.bound = B;
                            const SeriesValue v1 = eval_omega(spec, Z);
                            SeriesSpec doubled = spec;
                            doubled.bound = 2.0 * B;
                            const SeriesValue v2 = eval_omega(doubled, Z);
                            out.curves.push_back({base + ztag, B, v1.value});
                            CheckRecord d = make_abs_record(tag + "/doubling", "series-truncation", in, v2.value, v1.value,
                                                            2.0 * v1.tail);
                            d.note = "tolerance = 2 tail(B)";
                            out.records.push_back(grouped(d, "series"));

                            const TruncatedSeries ts(spec, Z);
                            const SeriesForm Om = ts.Omega(Z);
                            const SeriesValue om = ts.omega(Z);
                            const cplx lhs = xi_top(ts.Omega_field(), kappa, Z);
                            CheckRecord x = make_abs_record(tag + "/xi", "xi-of-series", in, lhs, om.value,
                                                            Om.tail + om.tail + 1e-6);
                            x.note = "tolerance = tail(Omega) + tail(omega) + 1e-6";
                            out.records.push_back(grouped(x, "series"));

                            for (size_t gi = 0; gi < ctx->group.generators.size(); ++gi) {
                                const Isometry& g = ctx->group.generators[gi];
                                const double defect = modularity_defect(spec, Z, g);
                                const ActResult r = act(ctx->frame, g, Z);
                                const double tails = v1.tail + std::pow(std::abs(r.j), -kappa) * eval_omega(spec, r.point).tail;
                                CheckRecord md = make_abs_record(tag + "/modularity/g" + std::to_string(gi), "series-modularity",
                                                                 text(in, gi), defect, 0.0, tails);
                                md.note = "tolerance = tail(Z) + |j|^-kappa tail(gamma Z)";
                                out.records.push_back(grouped(md, "series"));
                            }
                        } catch (const std::exception& ex) {
                            CheckRecord f = make_abs_record(tag + "/error", "series-truncation", in, 0.0, 0.0, 0.0);
                            f.pass = false;
                            f.note = ex.what();
                            out.records.push_back(grouped(f, "series"));
                        }
                    }
                }

                // Cuspidality along Y -> tY, and worker-count independence.
                if (m > 0) {
                    RVec x = RVec::Zero(n), y = RVec::Zero(n);
                    y(0) = 2.0;
                    double last = 1e300;
                    bool monotone = true;
                    cplx first = 0.0, final_value = 0.0;
                    for (double t : {1.0, 2.0, 4.0, 8.0}) {
                        spec.bound = p.bounds.back();
                        const SeriesValue v = eval_omega(spec, DomainPoint::from_xy(x, t * y));
                        out.curves.push_back({base + "/cusp", t, v.value});
                        if (t == 1.0) first = v.value;
                        final_value = v.value;
                        monotone = monotone && std::abs(v.value) < last;
                        last = std::abs(v.value);
                    }
                    CheckRecord c = make_abs_record(base + "/cusp-decay", "cusp-decay", text(base, "cusp"), final_value, first, 0.0);
                    c.pass = monotone;
                    c.abs_err = monotone ? 0.0 : 1.0;
                    c.note = "pass iff |value(tY)| decreases for t = 1, 2, 4, 8";
                    out.records.push_back(grouped(c, "series-cusp"));
                }
                {
                    spec.bound = p.bounds.back();
                    const DomainPoint Z = random_point(n, rng, 1.0, 2.0);
                    SeriesSpec serial = spec, parallel = spec;
                    serial.workers = 1;
                    parallel.workers = 3;
                    const cplx a = eval_omega(serial, Z).value, b = eval_omega(parallel, Z).value;
                    CheckRecord det = make_abs_record(base + "/determinism", "series-truncation", text(base, "workers"), b, a, 0.0);
                    out.records.push_back(grouped(det, "series-determinism"));
                }
            }
        }
    }
    out.sort();
    return out;
}

}  // namespace orthoharm::tools
