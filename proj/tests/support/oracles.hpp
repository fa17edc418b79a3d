#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "slopelab/exactlinalg.hpp"

namespace oracle {

// Integer polynomials, lowest degree first.
using Poly = std::vector<mpz_class>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);

// det(xI - M) by cofactor expansion over Z[x]; highest degree first.
std::vector<mpz_class> charpoly_cofactor(const slopelab::IntMatrix& m);

// tau(1..n-1) from q * prod (1 - q^m)^24, slot 0 is zero.
std::vector<mpz_class> tau_eta(std::size_t n);

// sigma_r(n) by trial division.
mpz_class sigma_naive(unsigned r, unsigned long n);

// Monic prod (x - r_i), highest degree first.
std::vector<mpz_class> poly_from_roots(const std::vector<mpz_class>& roots);

}  // namespace oracle
