#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dgs/errors.hpp"

namespace dgs {

/// Dense row-major matrix over an exact scalar type (mpz_class, mpq_class,
/// or a machine integer for small fast paths). Entries are value types; a
/// Matrix is freely copyable and never shares storage.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw Error("matrix dimensions must be positive");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw SizeMismatch("matrix product dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw SizeMismatch("matrix sum dimension mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw SizeMismatch("matrix difference dimension mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = c[i];
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_)
            throw SizeMismatch("matrix-vector dimension mismatch");
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < cols_; ++j)
                acc += (*this)(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const T& x : data_)
            if (x != T(0))
                return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Arbitrary-precision integer matrix. Walk-matrix entries grow like n^n, so
/// fixed-width integers are never used for these.
using IntMatrix = Matrix<mpz_class>;

/// Exact rational matrix; mpq_class keeps every entry in lowest terms with a
/// positive denominator.
using RatMatrix = Matrix<mpq_class>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = mpq_class(m(i, j));
    return r;
}

/// Exact rational with num/den canonicalized (gcd removed, positive
/// denominator). mpq_class construction from two integers does not
/// canonicalize on its own.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

/// Exact inverse of a nonsingular integer matrix, by Gauss-Jordan elimination
/// over the rationals.
inline RatMatrix rat_inverse(const IntMatrix& m) {
    if (!m.is_square())
        throw NonSquare("rat_inverse requires a square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = to_rational(m);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0)
            ++piv;
        if (piv == n)
            throw Singular("matrix is singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        mpq_class d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0)
                continue;
            mpq_class f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// --- matrix text format: first line "rows cols", then one line per row of
// whitespace-separated decimal integers.

inline IntMatrix read_matrix_text(std::istream& in) {
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols))
        throw ParseError("matrix header must be \"rows cols\"");
    if (rows < 1 || cols < 1)
        throw ParseError("matrix dimensions must be positive");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(in >> tok))
                throw ParseError("matrix body ended early");
            try {
                m(i, j) = mpz_class(tok, 10);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad integer literal: " + tok);
            }
        }
    std::string trailing;
    if (in >> trailing)
        throw ParseError("trailing content after matrix body: " + trailing);
    return m;
}

inline IntMatrix read_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_text(in);
}

inline void write_matrix_text(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << m(i, j).get_str();
        }
        out << '\n';
    }
}

inline std::string write_matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    write_matrix_text(out, m);
    return out.str();
}

} // namespace dgs
