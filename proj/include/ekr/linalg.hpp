#pragma once

// Dense exact linear algebra: fraction-free (Bareiss) rank over the integers,
// rational Gauss–Jordan for kernels and linear solves, and a plain-text
// matrix format for diffing against other tools.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "ekr/exact.hpp"

namespace ekr {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    bool operator==(const Matrix& o) const = default;

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
}

/// K_n = J_n - I_n
template <class T>
Matrix<T> complete_graph_matrix(std::size_t n) {
    Matrix<T> m(n, n, T(1));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(0);
    return m;
}

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return m;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> m(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(j, i) = a(i, j);
    return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw InputError("multiply: inner dimensions differ");
    Matrix<T> m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw InputError("multiply: vector length differs from column count");
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && x[k] != 0) y[i] += a(i, k) * x[k];
    return y;
}

/// Columns of `a` followed by columns of `b`.
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw InputError("hconcat: row counts differ");
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class T>
Matrix<T> append_column(const Matrix<T>& a, const std::vector<T>& col) {
    Matrix<T> c(col.size(), 1);
    for (std::size_t i = 0; i < col.size(); ++i) c(i, 0) = col[i];
    return hconcat(a, c);
}

template <class T>
Matrix<T> select_columns(const Matrix<T>& a, const std::vector<std::size_t>& cols) {
    Matrix<T> m(a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(i, cols[j]);
    return m;
}

template <class T>
Matrix<T> select_rows(const Matrix<T>& a, const std::vector<std::size_t>& rows) {
    Matrix<T> m(rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(rows[i], j);
    return m;
}

/// Rank of an integer matrix by fraction-free elimination. Every division
/// is exact; intermediate entries are minors of the input.
inline std::size_t bareiss_rank(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        while (p < m && a(p, col) == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = col; j < n; ++j) std::swap(a(p, j), a(r, j));
        const BigInt pivot = a(r, col);
        for (std::size_t i = r + 1; i < m; ++i) {
            const BigInt lead = a(i, col);
            for (std::size_t j = col + 1; j < n; ++j) {
                BigInt v = pivot * a(i, j);
                if (lead != 0) v -= lead * a(r, j);
                if (prev != 1) v /= prev;
                a(i, j) = std::move(v);
            }
            a(i, col) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Scales each row by the lcm of its denominators.
inline IntMatrix clear_denominators(const RationalMatrix& a) {
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) l = mp::lcm(l, BigInt(mp::denominator(a(i, j))));
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mp::numerator(a(i, j)) * (l / mp::denominator(a(i, j)));
    }
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
    if constexpr (std::is_same_v<T, Rational>) {
        return bareiss_rank(clear_denominators(a));
    } else if constexpr (std::is_same_v<T, BigInt>) {
        return bareiss_rank(a);
    } else {
        return bareiss_rank(a.template cast<BigInt>());
    }
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t p = r;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = 1 / a(r, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            if (a(r, j) != 0) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

/// Basis of {y : a·y = 0}, one vector per free column, each verified.
template <class T>
std::vector<RationalVector> kernel_basis(const Matrix<T>& input) {
    RationalMatrix a = input.template cast<Rational>();
    const auto pivots = rref_in_place(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector y(a.cols(), Rational(0));
        y[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) y[pivots[k]] = -a(k, free);
        basis.push_back(std::move(y));
    }
    const RationalMatrix original = input.template cast<Rational>();
    for (const auto& y : basis)
        for (const auto& v : multiply(original, y))
            if (v != 0) throw InvariantViolation("kernel_basis: basis vector not in kernel");
    return basis;
}

/// Some solution of a·y = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero, so the solution is unique exactly when
/// a has full column rank.
template <class T>
std::optional<RationalVector> solve(const Matrix<T>& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw InputError("solve: right-hand side length differs from row count");
    RationalMatrix aug = append_column(a.template cast<Rational>(), b);
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RationalVector y(a.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) y[pivots[k]] = aug(k, a.cols());
    return y;
}

// Text format: first line "<rows> <cols>", then one line per row with
// space-separated entries written as integers or "p/q".
template <class T>
void write_matrix(std::ostream& os, const Matrix<T>& a) {
    os << a.rows() << " " << a.cols() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << " ";
            if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>)
                os << to_string(a(i, j));
            else
                os << a(i, j);
        }
        os << "\n";
    }
}

inline RationalMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw InputError("read_matrix: missing dimensions header");
    RationalMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw InputError("read_matrix: too few entries");
            try {
                a(i, j) = Rational(tok);
            } catch (const std::exception&) {
                throw InputError("read_matrix: bad entry '" + tok + "'");
            }
        }
    return a;
}

}  // namespace ekr
