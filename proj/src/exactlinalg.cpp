#include "slopelab/exactlinalg.hpp"

#include <utility>

namespace slopelab {

CharPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
    return CharPoly{berkowitz(m)};
}

std::vector<mpq_class> char_poly(const RatMatrix& m) { return berkowitz(m); }

mpz_class det_bareiss(IntMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // m(i,j) = (m(i,j) m(k,k) - m(i,k) m(k,j)) / prev, exact.
                mpz_class t = m(i, j) * m(k, k);
                mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Valuation det_valuation(const IntMatrix& m, long p) {
    return ordp(char_poly(m).constant_term(), p);
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    }
    return r;
}

RatMatrix inverse(RatMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const mpq_class scale = mpq_class(1) / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const mpq_class f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace slopelab
