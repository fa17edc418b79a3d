#pragma once

// Level-one cusp forms: dimensions, the E4^a E6^b Delta basis, its echelon
// (Miller) form, and matrices of Hecke operators.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slopelab/exactlinalg.hpp"
#include "slopelab/qseries.hpp"

namespace slopelab {

/// dim S_k(SL2(Z)) for even k >= 0. Odd k throws std::invalid_argument.
int cusp_dim(int k);

/// Exponents (a, b) with 4a + 6b = k - 12, ordered by decreasing a.
std::vector<std::pair<int, int>> monomial_exponents(int k);

/// The forms Delta * E4^a * E6^b in monomial_exponents order.
std::vector<IntSeries> monomial_basis(int k, std::size_t prec);

/// Weight-k level-one cusp space held in echelon form: basis element i
/// (1-indexed) is q^i + O(q^(d+1)) with integer coefficients.
struct CuspSpace {
    int weight = 0;
    std::size_t prec = 0;
    std::vector<IntSeries> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Miller basis built from the unit-triangular integral family
/// A * E6^(2(d-i)) * Delta^i and back substitution; no division occurs.
CuspSpace miller_basis(int k, std::size_t prec);

/// Same space obtained by reducing monomial_basis over Q. Throws if the
/// leading d x d block is singular or a coefficient is not integral.
CuspSpace miller_basis_from_monomials(int k, std::size_t prec);

/// Coefficients needed to read off the matrix of T_p on S_k: d*p + 1.
std::size_t hecke_precision(int k, long p);

class InsufficientPrecision : public std::runtime_error {
public:
    InsufficientPrecision(std::size_t have, std::size_t required)
        : std::runtime_error("insufficient q-expansion precision: have " + std::to_string(have) + ", need " +
                             std::to_string(required)),
          required_(required) {}
    std::size_t required() const { return required_; }

private:
    std::size_t required_;
};

/// T_p on a weight-k q-expansion: a_n -> a_{np} + p^(k-1) a_{n/p}. The
/// result carries floor((prec-1)/p) + 1 coefficients.
IntSeries apply_hecke(const IntSeries& f, long p, int k);

struct HeckeMatrix {
    long p = 0;
    int k = 0;
    /// Row i holds the coordinates of T_p(basis_i).
    IntMatrix entries;
};

HeckeMatrix hecke_matrix(const CuspSpace& space, long p);

/// Matrix of T_p in the raw monomial basis, found by solving against the
/// leading coefficient block. Oracle for hecke_matrix.
RatMatrix hecke_matrix_monomial(int k, long p);

}  // namespace slopelab
