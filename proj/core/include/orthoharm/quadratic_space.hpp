#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "orthoharm/rational.hpp"

namespace orthoharm {

class WittFrame;
class DomainPoint;

// Element of V = L (x) Q in L-basis coordinates.
struct LatticeVector {
    std::vector<Rational> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<Rational> c) : coords(std::move(c)) {}
    static LatticeVector zero(int dim) { return LatticeVector(std::vector<Rational>(static_cast<size_t>(dim))); }
    static LatticeVector from_ints(const std::vector<long long>& c);

    int size() const { return static_cast<int>(coords.size()); }
    bool is_integral() const;
    Eigen::VectorXd to_real() const;

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator*(const Rational& r) const;
    bool operator==(const LatticeVector& o) const { return coords == o.coords; }
    bool operator<(const LatticeVector& o) const;
};

class QuadraticLattice {
public:
    // gram must be integral, symmetric, with even diagonal, of signature (2, n), n >= 1.
    explicit QuadraticLattice(RationalMatrix gram);
    static QuadraticLattice from_ints(const std::vector<std::vector<long long>>& gram);

    int dim() const { return gram_.rows(); }
    int n() const { return gram_.rows() - 2; }
    const RationalMatrix& gram() const { return gram_; }
    const Eigen::MatrixXd& gram_real() const { return gram_real_; }
    std::pair<int, int> signature() const { return signature_; }
    // Row i is the i-th dual basis vector in L-coordinates.
    const RationalMatrix& dual_basis() const { return dual_basis_; }

    Rational bilinear(const LatticeVector& v, const LatticeVector& w) const;
    Rational q(const LatticeVector& v) const { return bilinear(v, v) / 2; }
    bool contains(const LatticeVector& v) const { return v.is_integral(); }
    bool in_dual(const LatticeVector& v) const;

private:
    RationalMatrix gram_;
    Eigen::MatrixXd gram_real_;
    std::pair<int, int> signature_;
    RationalMatrix dual_basis_;
};

// Isometry of V in L-coordinates (acts on column vectors).
struct Isometry {
    RationalMatrix matrix;
    bool plus_component = true;

    static Isometry identity(int dim) { return {RationalMatrix::identity(dim), true}; }
    LatticeVector apply(const LatticeVector& v) const { return LatticeVector(matrix * v.coords); }
    Isometry operator*(const Isometry& o) const { return {matrix * o.matrix, plus_component == o.plus_component}; }
    Isometry inverse() const { return {matrix.inverse(), plus_component}; }
};

struct GroupData {
    std::vector<Isometry> generators;
    std::string label;
};

bool preserves_form(const QuadraticLattice& L, const RationalMatrix& m);
bool preserves_lattice(const RationalMatrix& m);

// v -> v + (v,e)k - (v,k)e - q(k)(v,e)e for isotropic e and k orthogonal to e, e'.
Isometry eichler_transformation(const QuadraticLattice& L, const LatticeVector& e, const LatticeVector& k);
// v -> v - (v,r)/q(r) r.
Isometry reflection(const QuadraticLattice& L, const LatticeVector& r);

// Gram matrix (L-coordinates) of the majorant q(lambda_{Z+}) - q(lambda_{Z-}).
Eigen::MatrixXd majorant_gram(const WittFrame& frame, const DomainPoint& Z0);

struct EnumerateOptions {
    int workers = 1;
};

// All lambda in coset + L with q(lambda) = m and majorant at Z0 at most B,
// sorted lexicographically. Fincke-Pohst on the Cholesky factor of the
// majorant Gram matrix.
std::vector<LatticeVector> enumerate_majorant(const QuadraticLattice& L, const WittFrame& frame, const DomainPoint& Z0,
                                              const Rational& m, const LatticeVector& coset, double bound,
                                              const EnumerateOptions& options = {});

}  // namespace orthoharm
