#pragma once

// Truncated q-expansions with arbitrary-precision integer coefficients,
// and the level-one generators E4, E6 and Delta.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace slopelab {

/// A power series a_0 + a_1 q + ... + a_{prec-1} q^{prec-1} + O(q^prec).
///
/// The precision is part of the value: two series with identical retained
/// coefficients but different precisions are different objects, and binary
/// operations return a result at the smaller of the two precisions.
class IntSeries {
public:
    /// The zero series O(q^prec).
    explicit IntSeries(std::size_t prec);
    explicit IntSeries(std::vector<mpz_class> coeffs);
    IntSeries(std::initializer_list<long> coeffs, std::size_t prec);

    static IntSeries one(std::size_t prec);

    std::size_t prec() const { return coeffs_.size(); }
    const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
    mpz_class& operator[](std::size_t n) { return coeffs_[n]; }
    std::span<const mpz_class> coeffs() const { return coeffs_; }

    IntSeries truncated(std::size_t prec) const;
    bool is_zero() const;
    /// Largest bit length among the coefficients (0 for the zero series).
    std::size_t max_bits() const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

IntSeries series_add(const IntSeries& a, const IntSeries& b);
IntSeries series_sub(const IntSeries& a, const IntSeries& b);
/// Cauchy product truncated to min(a.prec, b.prec).
IntSeries series_mul(const IntSeries& a, const IntSeries& b);
IntSeries series_pow(const IntSeries& a, unsigned e);
IntSeries series_scale(const IntSeries& a, const mpz_class& c);
/// Divides every coefficient by `c`; throws std::domain_error on a remainder.
IntSeries series_divexact(const IntSeries& a, const mpz_class& c);
/// a -= c * b, coefficientwise over the first min(a.prec, b.prec) terms.
void series_submul(IntSeries& a, const mpz_class& c, const IntSeries& b);

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return series_add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return series_sub(a, b); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return series_mul(a, b); }

/// sigma_r(n) = sum of d^r over divisors d of n, for 0 <= n < limit
/// (the n = 0 slot is zero). Computed with a divisor sieve.
std::vector<mpz_class> divisor_sigma(unsigned r, std::size_t limit);

/// E4 = 1 + 240 sum sigma_3(n) q^n.
IntSeries eisenstein_e4(std::size_t prec);
/// E6 = 1 - 504 sum sigma_5(n) q^n.
IntSeries eisenstein_e6(std::size_t prec);
/// Delta = (E4^3 - E6^2) / 1728; the coefficient of q^n is tau(n).
IntSeries delta(std::size_t prec);

}  // namespace slopelab
