#pragma once

#include <memory>
#include <vector>

#include "orthoharm/kernels.hpp"

namespace orthoharm {

// Lattice, frame and group data shared by series evaluations.
struct LatticeContext {
    QuadraticLattice lattice;
    WittFrame frame;
    std::vector<LatticeVector> cosets;
    GroupData group;
};

struct SeriesSpec {
    std::shared_ptr<const LatticeContext> context;
    LatticeVector coset;
    Rational m;
    int kappa = 0;
    double bound = 0.0;
    int workers = 1;
};

struct SeriesValue {
    cplx value = 0.0;
    double tail = 0.0;
    std::size_t count = 0;
};

struct SeriesForm {
    FormTop value;
    double tail = 0.0;
    std::size_t count = 0;
};

// Norm-class vector set enumerated once at a centre point; evaluation at
// nearby points keeps the set fixed (used for finite differences).
class TruncatedSeries {
public:
    TruncatedSeries(const SeriesSpec& spec, const DomainPoint& center);

    std::size_t size() const { return vectors_.size(); }
    const std::vector<LatticeVector>& vectors() const { return vectors_; }
    const std::vector<RVec>& frame_vectors() const { return frame_vectors_; }

    SeriesValue omega(const DomainPoint& Z) const;
    SeriesForm Omega(const DomainPoint& Z) const;
    TopFn Omega_field() const;
    ScalarFn omega_field() const;

private:
    bool in_shell(std::size_t i) const;

    SeriesSpec spec_;
    std::vector<LatticeVector> vectors_;
    std::vector<RVec> frame_vectors_;
    std::vector<double> majorants_;
};

// sum over {lambda in coset + L : q(lambda) = m, majorant at Z <= B} of (lambda, psi(Z))^{-kappa}.
SeriesValue eval_omega(const SeriesSpec& spec, const DomainPoint& Z);
// Same vector set, summing p_tilde coefficientwise.
SeriesForm eval_Omega(const SeriesSpec& spec, const DomainPoint& Z);
// |(S|_kappa gamma)(Z) - S(Z)| for the truncated scalar series S, where S at
// gamma Z is truncated with the majorant at gamma Z.
double modularity_defect(const SeriesSpec& spec, const DomainPoint& Z, const Isometry& gamma);

// Compensated summation (Neumaier); fixed order gives reproducible sums.
class CompensatedSum {
public:
    void add(cplx x);
    cplx value() const { return sum_ + comp_; }

private:
    cplx sum_ = 0.0;
    cplx comp_ = 0.0;
};

}  // namespace orthoharm
