#include "orthoharm/quadratic_space.hpp"

#include <algorithm>
#include <cmath>

#include "orthoharm/domain.hpp"
#include "orthoharm/errors.hpp"
#include "orthoharm/parallel.hpp"

namespace orthoharm {

LatticeVector LatticeVector::from_ints(const std::vector<long long>& c) {
    LatticeVector v;
    v.coords.reserve(c.size());
    for (long long x : c) v.coords.emplace_back(static_cast<std::int64_t>(x));
    return v;
}

bool LatticeVector::is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.denominator() == 1; });
}

Eigen::VectorXd LatticeVector::to_real() const {
    Eigen::VectorXd v(size());
    for (int i = 0; i < size(); ++i) v(i) = to_double(coords[static_cast<size_t>(i)]);
    return v;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    if (size() != o.size()) throw InputError("vector sum: dimension mismatch");
    LatticeVector r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    return *this + o * Rational(-1);
}

LatticeVector LatticeVector::operator*(const Rational& s) const {
    LatticeVector r = *this;
    for (auto& c : r.coords) c *= s;
    return r;
}

bool LatticeVector::operator<(const LatticeVector& o) const {
    return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(), o.coords.end());
}

QuadraticLattice::QuadraticLattice(RationalMatrix gram) : gram_(std::move(gram)) {
    const int d = gram_.rows();
    if (d < 3 || gram_.cols() != d) throw InputError("gram must be square of size n+2 >= 3");
    if (!gram_.is_integral()) throw InputError("gram must have integer entries");
    if (gram_ != gram_.transpose()) throw InputError("gram must be symmetric");
    for (int i = 0; i < d; ++i)
        if (gram_(i, i).numerator() % 2 != 0) throw InputError("gram must have even diagonal (even lattice)");

    gram_real_.resize(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gram_real_(i, j) = to_double(gram_(i, j));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_real_);
    int pos = 0, neg = 0;
    for (int i = 0; i < d; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev > 1e-9) ++pos;
        else if (ev < -1e-9) ++neg;
        else throw InputError("gram is degenerate");
    }
    signature_ = {pos, neg};
    if (pos != 2) throw InputError("gram must have signature (2, n)");
    dual_basis_ = gram_.inverse();
}

QuadraticLattice QuadraticLattice::from_ints(const std::vector<std::vector<long long>>& gram) {
    const int d = static_cast<int>(gram.size());
    RationalMatrix g(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(gram[static_cast<size_t>(i)].size()) != d) throw InputError("gram must be square");
        for (int j = 0; j < d; ++j) g(i, j) = Rational(static_cast<std::int64_t>(gram[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
    return QuadraticLattice(g);
}

Rational QuadraticLattice::bilinear(const LatticeVector& v, const LatticeVector& w) const {
    if (v.size() != dim() || w.size() != dim()) throw InputError("bilinear: dimension mismatch");
    Rational s = 0;
    for (int i = 0; i < dim(); ++i) {
        if (v.coords[static_cast<size_t>(i)] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < dim(); ++j) row += gram_(i, j) * w.coords[static_cast<size_t>(j)];
        s += v.coords[static_cast<size_t>(i)] * row;
    }
    return s;
}

bool QuadraticLattice::in_dual(const LatticeVector& v) const {
    return LatticeVector(gram_ * v.coords).is_integral();
}

bool preserves_form(const QuadraticLattice& L, const RationalMatrix& m) {
    return m.rows() == L.dim() && m.cols() == L.dim() && m.transpose() * L.gram() * m == L.gram();
}

bool preserves_lattice(const RationalMatrix& m) {
    if (!m.is_integral()) return false;
    return m.inverse().is_integral();
}

Isometry eichler_transformation(const QuadraticLattice& L, const LatticeVector& e, const LatticeVector& k) {
    if (L.q(e) != 0) throw InputError("eichler_transformation: e must be isotropic");
    if (L.bilinear(e, k) != 0) throw InputError("eichler_transformation: k must be orthogonal to e");
    const int d = L.dim();
    const Rational qk = L.q(k);
    RationalMatrix m(d, d);
    for (int c = 0; c < d; ++c) {
        LatticeVector v = LatticeVector::zero(d);
        v.coords[static_cast<size_t>(c)] = 1;
        Rational ve = L.bilinear(v, e);
        Rational vk = L.bilinear(v, k);
        LatticeVector img = v + k * ve - e * vk - e * (qk * ve);
        for (int r = 0; r < d; ++r) m(r, c) = img.coords[static_cast<size_t>(r)];
    }
    return {m, true};
}

Isometry reflection(const QuadraticLattice& L, const LatticeVector& r) {
    const Rational qr = L.q(r);
    if (qr == 0) throw InputError("reflection: vector must be anisotropic");
    const int d = L.dim();
    RationalMatrix m(d, d);
    for (int c = 0; c < d; ++c) {
        LatticeVector v = LatticeVector::zero(d);
        v.coords[static_cast<size_t>(c)] = 1;
        LatticeVector img = v - r * (L.bilinear(v, r) / qr);
        for (int row = 0; row < d; ++row) m(row, c) = img.coords[static_cast<size_t>(row)];
    }
    // Reflections in negative vectors keep the component; positive ones swap it.
    return {m, qr < 0};
}

Eigen::MatrixXd majorant_gram(const WittFrame& frame, const DomainPoint& Z0) {
    const Eigen::MatrixXd& G = frame.gram();
    Eigen::VectorXd u = G * frame.from_frame(Z0.psiX());
    Eigen::VectorXd v = G * frame.from_frame(Z0.psiY());
    Eigen::MatrixXd A = (u * u.transpose() + v * v.transpose()) / (2.0 * Z0.qY()) - 0.5 * G;
    return 0.5 * (A + A.transpose());
}

namespace {

struct FinckePohst {
    Eigen::MatrixXd mu;      // mu(i, j) = R(i, j) / R(i, i), j > i
    Eigen::VectorXd rdiag2;  // R(i, i)^2
    std::vector<double> shift;
    double bound;
    int d;

    void run(int i, double rem, std::vector<double>& u, std::vector<long long>& x,
             std::vector<std::vector<long long>>& out) const {
        double center = 0.0;
        for (int j = i + 1; j < d; ++j) center -= mu(i, j) * u[static_cast<size_t>(j)];
        const double t = std::sqrt(std::max(rem, 0.0) / rdiag2(i));
        const double slack = 1e-9 * (1.0 + t);
        const long long lo = static_cast<long long>(std::ceil(center - t - shift[static_cast<size_t>(i)] - slack));
        const long long hi = static_cast<long long>(std::floor(center + t - shift[static_cast<size_t>(i)] + slack));
        for (long long xi = lo; xi <= hi; ++xi) {
            u[static_cast<size_t>(i)] = static_cast<double>(xi) + shift[static_cast<size_t>(i)];
            const double diff = u[static_cast<size_t>(i)] - center;
            const double r2 = rem - rdiag2(i) * diff * diff;
            if (r2 < -1e-9 * (1.0 + bound)) continue;
            x[static_cast<size_t>(i)] = xi;
            if (i == 0) out.push_back(x);
            else run(i - 1, r2, u, x, out);
        }
    }
};

}  // namespace

std::vector<LatticeVector> enumerate_majorant(const QuadraticLattice& L, const WittFrame& frame, const DomainPoint& Z0,
                                              const Rational& m, const LatticeVector& coset, double bound,
                                              const EnumerateOptions& options) {
    if (!(bound > 0.0)) throw InputError("enumerate_majorant: bound must be positive");
    const int d = L.dim();
    if (coset.size() != d) throw InputError("enumerate_majorant: coset has wrong dimension");

    const Eigen::MatrixXd A = majorant_gram(frame, Z0);
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success) throw NumericalError("enumerate_majorant: majorant matrix is not positive definite");
    const Eigen::MatrixXd R = llt.matrixU();

    FinckePohst fp;
    fp.d = d;
    fp.bound = bound;
    fp.mu = Eigen::MatrixXd::Zero(d, d);
    fp.rdiag2.resize(d);
    for (int i = 0; i < d; ++i) {
        fp.rdiag2(i) = R(i, i) * R(i, i);
        for (int j = i + 1; j < d; ++j) fp.mu(i, j) = R(i, j) / R(i, i);
    }
    fp.shift.resize(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) fp.shift[static_cast<size_t>(i)] = to_double(coset.coords[static_cast<size_t>(i)]);

    // Split the search tree on the last coordinate.
    const int top = d - 1;
    const double t = std::sqrt(bound / fp.rdiag2(top));
    const long long lo = static_cast<long long>(std::ceil(-t - fp.shift[static_cast<size_t>(top)] - 1e-9));
    const long long hi = static_cast<long long>(std::floor(t - fp.shift[static_cast<size_t>(top)] + 1e-9));
    const size_t branches = hi >= lo ? static_cast<size_t>(hi - lo + 1) : 0;
    std::vector<std::vector<std::vector<long long>>> partial(branches);
    parallel_for(branches, options.workers, [&](size_t b) {
        std::vector<double> u(static_cast<size_t>(d), 0.0);
        std::vector<long long> x(static_cast<size_t>(d), 0);
        const long long xt = lo + static_cast<long long>(b);
        u[static_cast<size_t>(top)] = static_cast<double>(xt) + fp.shift[static_cast<size_t>(top)];
        x[static_cast<size_t>(top)] = xt;
        const double r2 = bound * (1.0 + 1e-12) - fp.rdiag2(top) * u[static_cast<size_t>(top)] * u[static_cast<size_t>(top)];
        if (r2 < -1e-9 * (1.0 + bound)) return;
        if (top == 0) partial[b].push_back(x);
        else fp.run(top - 1, r2, u, x, partial[b]);
    });

    const double cut = bound * (1.0 + 1e-12) + 1e-12;
    std::vector<LatticeVector> result;
    for (const auto& part : partial)
        for (const auto& x : part) {
            LatticeVector lam = coset;
            for (int i = 0; i < d; ++i) lam.coords[static_cast<size_t>(i)] += Rational(static_cast<std::int64_t>(x[static_cast<size_t>(i)]));
            if (L.q(lam) != m) continue;
            Eigen::VectorXd lr = lam.to_real();
            if (lr.dot(A * lr) > cut) continue;
            result.push_back(std::move(lam));
        }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace orthoharm
