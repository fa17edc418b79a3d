#pragma once

// Exact characteristic polynomials and determinants of integer (and rational)
// matrices with entries of unbounded size.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "slopelab/newton.hpp"

namespace slopelab {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        }
        return c;
    }

    T trace() const {
        T t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

/// Monic integer polynomial det(xI - M), coefficients stored from x^d down
/// to x^0, so coeffs[0] == 1 and coeffs[d] is (-1)^d det(M).
struct CharPoly {
    std::vector<mpz_class> coeffs{mpz_class(1)};

    std::size_t degree() const { return coeffs.size() - 1; }
    const mpz_class& constant_term() const { return coeffs.back(); }
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Division-free (Berkowitz) characteristic polynomial. Valid over any
/// commutative ring; returns coefficients from degree d down to 0.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("berkowitz: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<T> poly{T(1)};
    std::vector<T> v;
    std::vector<T> w;
    std::vector<T> toeplitz;
    for (std::size_t r = 0; r < n; ++r) {
        // Extend the char poly of the leading r x r block to (r+1) x (r+1).
        // toeplitz = [1, -a, -R C, -R A C, ..., -R A^(r-1) C].
        toeplitz.assign(r + 2, T(0));
        toeplitz[0] = 1;
        toeplitz[1] = -m(r, r);
        v.resize(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t j = 0; j < r; ++j) {
            T acc = 0;
            for (std::size_t i = 0; i < r; ++i) acc += m(r, i) * v[i];
            toeplitz[j + 2] = -acc;
            if (j + 1 == r) break;
            w.assign(r, T(0));
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t l = 0; l < r; ++l) w[i] += m(i, l) * v[l];
            }
            v.swap(w);
        }
        std::vector<T> next(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= r && j <= i; ++j) next[i] += toeplitz[i - j] * poly[j];
        }
        poly.swap(next);
    }
    return poly;
}

/// Exact char poly of a square integer matrix. The empty matrix gives 1.
CharPoly char_poly(const IntMatrix& m);

/// Exact char poly of a rational matrix (coefficients from degree d down).
std::vector<mpq_class> char_poly(const RatMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination, independent of the
/// Berkowitz path.
mpz_class det_bareiss(IntMatrix m);

/// ord_p(det M); nullopt (infinity) when det M == 0.
Valuation det_valuation(const IntMatrix& m, long p);

/// Inverse of a nonsingular rational matrix via Gauss-Jordan; throws
/// std::domain_error if singular.
RatMatrix inverse(RatMatrix m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace slopelab
