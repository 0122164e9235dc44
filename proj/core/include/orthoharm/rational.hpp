#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74's mixed rational/int equality recurses under C++20 reversed
// operator candidates; exact-match overloads take precedence.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }

}  // namespace boost

namespace orthoharm {

using Rational = boost::rational<std::int64_t>;

// Accepts "a", "-a", "a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Dense row-major rational matrix; only what lattice bookkeeping needs.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    // Throws InputError when singular.
    RationalMatrix inverse() const;
    // Basis of {x : A x = 0}, one vector per free column, from the reduced
    // row echelon form.
    std::vector<std::vector<Rational>> nullspace() const;
    bool is_integral() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace orthoharm
