#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include "wedgeforge/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wedgeforge {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
            for (long long v : r) data_.emplace_back(v);
        }
    }

    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0) {
        IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Integer& at(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
        return (*this)(r, c);
    }
    const Integer& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
        return (*this)(r, c);
    }

    std::vector<Integer> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    IntMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
        IntMatrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i) {
            for (std::size_t j = 0; j < col_idx.size(); ++j) {
                if (row_idx[i] >= rows_ || col_idx[j] >= cols_) {
                    throw Error(ErrorCode::IndexOutOfRange, "submatrix index out of range");
                }
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
            }
        }
        return out;
    }

    IntMatrix columns(const std::vector<std::size_t>& col_idx) const {
        std::vector<std::size_t> all(rows_);
        for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
        return submatrix(all, col_idx);
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
    }
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Determinant by Bareiss fraction-free elimination.
inline Integer det(IntMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Determinant of the submatrix on the given rows and columns.
inline Integer minor(const IntMatrix& m, const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) {
    if (row_idx.size() != col_idx.size()) throw Error(ErrorCode::ShapeMismatch, "minor needs as many rows as columns");
    return det(m.submatrix(row_idx, col_idx));
}

struct SmithForm {
    IntMatrix D;
    IntMatrix U; // rows x rows, unimodular
    IntMatrix V; // cols x cols, unimodular
    std::vector<Integer> divisors; // min(rows, cols) entries, d_k | d_{k+1}

    std::size_t rank() const {
        return static_cast<std::size_t>(
            std::count_if(divisors.begin(), divisors.end(), [](const Integer& d) { return d != 0; }));
    }
    bool all_unit() const {
        return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
    }
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& a, std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = from; i < a.rows(); ++i)
        for (std::size_t j = from; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

} // namespace detail

/// Smith normal form with transforms: U·A·V = D.
///
/// Pivots on the smallest nonzero magnitude of the trailing block, clears the
/// pivot row and column by division with remainder, then enforces
/// divisibility of the trailing block by folding a bad row into the pivot row.
inline SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            auto pivot = detail::smallest_nonzero(a, t);
            if (!pivot) break;
            a.swap_rows(t, pivot->first);
            u.swap_rows(t, pivot->first);
            a.swap_cols(t, pivot->second);
            v.swap_cols(t, pivot->second);

            bool clear = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) clear = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0) clear = false;
            }
            if (!clear) continue;

            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            a.add_row(t, *bad_row, 1);
            u.add_row(t, *bad_row, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm out{a, u, v, {}};
    for (std::size_t t = 0; t < steps; ++t) out.divisors.push_back(out.D(t, t));
    return out;
}

inline std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

/// Row-style Hermite normal form: echelon rows, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_rows(IntMatrix a) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t r = pivot_row; r < a.rows(); ++r) {
                if (a(r, c) == 0) continue;
                if (!best || abs(a(r, c)) < abs(a(*best, c))) best = r;
            }
            if (!best) break;
            a.swap_rows(pivot_row, *best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < a.rows(); ++r) {
                if (a(r, c) == 0) continue;
                Integer q = a(r, c) / a(pivot_row, c);
                a.add_row(r, pivot_row, -q);
                if (a(r, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(pivot_row, c) == 0) continue;
        if (a(pivot_row, c) < 0) a.negate_row(pivot_row);
        const Integer p = a(pivot_row, c);
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q = a(r, c) / p;
            if (a(r, c) - q * p < 0) q -= 1; // floor division
            a.add_row(r, pivot_row, -q);
        }
        ++pivot_row;
    }
    std::vector<std::vector<Integer>> kept;
    for (std::size_t r = 0; r < pivot_row; ++r) kept.push_back(a.row(r));
    return IntMatrix::from_rows(kept, a.cols());
}

/// Saturated basis of {x ∈ Z^cols : M x = 0}, one basis vector per column,
/// canonicalized to Hermite form with positive leading entries.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    const SmithForm snf = smith_normal_form(m);
    const std::size_t r = snf.rank();
    const std::size_t k = m.cols() - r;
    if (k == 0) return IntMatrix(m.cols(), 0);
    IntMatrix basis(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = snf.V(c, r + i);
    return hermite_rows(basis).transpose();
}

} // namespace wedgeforge
