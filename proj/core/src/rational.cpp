#include "orthoharm/rational.hpp"

#include <algorithm>
#include <cctype>

#include "orthoharm/errors.hpp"

namespace orthoharm {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
    size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InputError("not a rational number: '" + whole + "'");
    }
    if (pos != s.size()) throw InputError("not a rational number: '" + whole + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s, text));
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product: dimension mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InputError("matrix-vector product: dimension mismatch");
    std::vector<Rational> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
    const int n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw InputError("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
    RationalMatrix a = *this;
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = row;
        while (piv < rows_ && a(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (int j = 0; j < cols_; ++j) std::swap(a(piv, j), a(row, j));
        Rational p = a(row, col);
        for (int j = 0; j < cols_; ++j) a(row, j) /= p;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (int j = 0; j < cols_; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        std::vector<Rational> v(static_cast<size_t>(cols_));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivot_cols.size(); ++r)
            v[static_cast<size_t>(pivot_cols[r])] = -a(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RationalMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.denominator() == 1; });
}

}  // namespace orthoharm
