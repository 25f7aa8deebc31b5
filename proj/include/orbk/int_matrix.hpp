#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "orbk/errors.hpp"

namespace orbk {

// Exact integer everywhere; Smith pivots can outgrow any fixed width.
using Int = boost::multiprecision::cpp_int;

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// Dense integer matrix, row-major. Zero-row/zero-column shapes are legal and
// show up routinely (empty relation sets, maps from or to the trivial group).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    // Row-literal constructor for tests and small fixtures.
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw error("ragged row in matrix literal");
            for (long long v : row) e_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const {
        for (const Int& v : e_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw error("matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(r, k);
                if (a == 0) continue;  // products here are mostly sparse
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    const Int& b = o.at(k, c);
                    if (b != 0) p.at(r, c) += a * b;
                }
            }
        }
        return p;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix difference shape mismatch");
        IntMatrix d(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) d.e_[i] = e_[i] - o.e_[i];
        return d;
    }

    // Stack b's rows under a's; both must have the same column count.
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.cols_) throw error("vstack column mismatch");
        IntMatrix s(a.rows_ + b.rows_, a.cols_);
        s.e_.assign(a.e_.begin(), a.e_.end());
        s.e_.insert(s.e_.end(), b.e_.begin(), b.e_.end());
        return s;
    }

    // Fraction-free Bareiss elimination; exact.
    Int determinant() const {
        if (rows_ != cols_) throw error("determinant of a non-square matrix");
        std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a.at(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a.at(p, k) == 0) ++p;
                if (p == n) return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                    a.at(i, j) = num / prev;  // divides exactly
                }
                a.at(i, k) = 0;
            }
            prev = a.at(k, k);
        }
        return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    // row_i += q * row_j
    void row_addmul(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Int& s = at(j, c);
            if (s != 0) at(i, c) += q * s;
        }
    }

    // col_i += q * col_j
    void col_addmul(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Int& s = at(r, j);
            if (s != 0) at(r, i) += q * s;
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << rows_ << "x" << cols_ << " [";
        for (std::size_t r = 0; r < rows_; ++r) {
            out << (r == 0 ? "[" : " [");
            for (std::size_t c = 0; c < cols_; ++c) out << (c == 0 ? "" : " ") << at(r, c);
            out << "]";
        }
        out << "]";
        return out.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

}  // namespace orbk
