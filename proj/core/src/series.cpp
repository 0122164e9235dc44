#include "orthoharm/series.hpp"

#include <cmath>
#include <string>

#include "orthoharm/errors.hpp"
#include "orthoharm/parallel.hpp"

namespace orthoharm {

namespace {

double neumaier(double& sum, double x) {
    const double t = sum + x;
    double c = std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    return c;
}

std::string describe(const LatticeVector& v) {
    std::string s = "(";
    for (int i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v.coords[static_cast<size_t>(i)]);
    return s + ")";
}

void check_spec(const SeriesSpec& spec) {
    if (!spec.context) throw InputError("series: missing lattice context");
    if (spec.kappa <= spec.context->lattice.n()) throw InputError("series: kappa > n required");
    if (!(spec.bound > 0.0)) throw InputError("series: bound must be positive");
    if (spec.m == 0) throw InputError("series: m must be nonzero");
}

}  // namespace

void CompensatedSum::add(cplx x) {
    double sr = sum_.real(), si = sum_.imag();
    const double cr = neumaier(sr, x.real());
    const double ci = neumaier(si, x.imag());
    sum_ = cplx(sr, si);
    comp_ += cplx(cr, ci);
}

TruncatedSeries::TruncatedSeries(const SeriesSpec& spec, const DomainPoint& center) : spec_(spec) {
    check_spec(spec_);
    const LatticeContext& ctx = *spec_.context;
    vectors_ = enumerate_majorant(ctx.lattice, ctx.frame, center, spec_.m, spec_.coset, spec_.bound, {spec_.workers});
    frame_vectors_.reserve(vectors_.size());
    majorants_.reserve(vectors_.size());
    for (const auto& v : vectors_) {
        frame_vectors_.push_back(ctx.frame.to_frame(v));
        majorants_.push_back(majorant(frame_vectors_.back(), center));
    }
}

bool TruncatedSeries::in_shell(std::size_t i) const { return majorants_[i] >= 0.5 * spec_.bound; }

SeriesValue TruncatedSeries::omega(const DomainPoint& Z) const {
    std::vector<cplx> terms(frame_vectors_.size());
    parallel_for(terms.size(), spec_.workers, [&](std::size_t i) {
        try {
            terms[i] = omega_kernel(KernelParams{frame_vectors_[i], spec_.kappa, Branch::real}, Z);
        } catch (const SingularityError& e) {
            throw SingularityError(std::string(e.what()) + " (lambda = " + describe(vectors_[i]) + ")", e.distance());
        }
    });
    CompensatedSum acc;
    SeriesValue out;
    std::size_t shell = 0;
    double shell_max = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        acc.add(terms[i]);
        if (in_shell(i)) {
            ++shell;
            shell_max = std::max(shell_max, std::abs(terms[i]));
        }
    }
    out.value = acc.value();
    out.tail = static_cast<double>(shell) * shell_max;
    out.count = terms.size();
    return out;
}

SeriesForm TruncatedSeries::Omega(const DomainPoint& Z) const {
    const int n = Z.n();
    std::vector<CVec> terms(frame_vectors_.size());
    parallel_for(terms.size(), spec_.workers, [&](std::size_t i) {
        try {
            terms[i] = p_tilde(KernelParams{frame_vectors_[i], spec_.kappa, Branch::real}, Z).coeffs;
        } catch (const SingularityError& e) {
            throw SingularityError(std::string(e.what()) + " (lambda = " + describe(vectors_[i]) + ")", e.distance());
        }
    });
    std::vector<CompensatedSum> acc(static_cast<std::size_t>(n));
    std::size_t shell = 0;
    double shell_max = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (int j = 0; j < n; ++j) acc[static_cast<std::size_t>(j)].add(terms[i](j));
        if (in_shell(i)) {
            ++shell;
            shell_max = std::max(shell_max, terms[i].cwiseAbs().maxCoeff());
        }
    }
    SeriesForm out;
    out.value.coeffs.resize(n);
    for (int j = 0; j < n; ++j) out.value.coeffs(j) = acc[static_cast<std::size_t>(j)].value();
    out.tail = static_cast<double>(shell) * shell_max;
    out.count = terms.size();
    return out;
}

TopFn TruncatedSeries::Omega_field() const {
    auto self = std::make_shared<TruncatedSeries>(*this);
    return [self](const DomainPoint& Z) { return self->Omega(Z).value.coeffs; };
}

ScalarFn TruncatedSeries::omega_field() const {
    auto self = std::make_shared<TruncatedSeries>(*this);
    return [self](const DomainPoint& Z) { return self->omega(Z).value; };
}

SeriesValue eval_omega(const SeriesSpec& spec, const DomainPoint& Z) { return TruncatedSeries(spec, Z).omega(Z); }

SeriesForm eval_Omega(const SeriesSpec& spec, const DomainPoint& Z) { return TruncatedSeries(spec, Z).Omega(Z); }

double modularity_defect(const SeriesSpec& spec, const DomainPoint& Z, const Isometry& gamma) {
    check_spec(spec);
    const RMat g = spec.context->frame.isometry_to_frame(gamma.matrix);
    const ActResult r = act(g, Z);
    const SeriesValue at_image = eval_omega(spec, r.point);
    const SeriesValue at_z = eval_omega(spec, Z);
    const cplx slashed = std::pow(r.j, -spec.kappa) * at_image.value;
    return std::abs(slashed - at_z.value);
}

}  // namespace orthoharm
