#pragma once

// p-adic valuations and Newton polygons of integer polynomials.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "slopelab/rational.hpp"

namespace slopelab {

struct CharPoly;

/// ord_p of an integer; std::nullopt stands for +infinity (the valuation of 0).
using Valuation = std::optional<std::int64_t>;

Valuation ordp(const mpz_class& n, long p);

/// A slope together with how many roots carry it.
struct SlopeMult {
    Rational slope;
    std::int64_t mult = 0;
    friend bool operator==(const SlopeMult&, const SlopeMult&) = default;
};

/// Sum of slope * multiplicity.
Rational slope_sum(const std::vector<SlopeMult>& slopes);
/// Sum of multiplicities.
std::int64_t slope_count(const std::vector<SlopeMult>& slopes);
/// Expands multiplicities into a flat ascending list.
std::vector<Rational> expand(const std::vector<SlopeMult>& slopes);
/// Groups an ascending list into (slope, multiplicity) runs.
std::vector<SlopeMult> group(const std::vector<Rational>& sorted);

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct NewtonPolygon {
    long p = 0;
    /// (i, ord_p(coefficient of x^(d-i))) for every nonzero coefficient.
    std::vector<LatticePoint> points;
    /// Lower convex hull, from (0, 0) to (d, ord_p(constant term)).
    std::vector<LatticePoint> vertices;
    /// Strictly increasing segment slopes; multiplicity = horizontal length.
    std::vector<SlopeMult> slopes;
};

class InfiniteSlopeError : public std::domain_error {
public:
    InfiniteSlopeError() : std::domain_error("zero eigenvalue / infinite slope: constant term is 0") {}
};

/// Newton polygon of a monic integer polynomial given from the leading
/// coefficient down. Throws InfiniteSlopeError when the constant term is 0.
NewtonPolygon newton_slopes(const std::vector<mpz_class>& coeffs, long p);
NewtonPolygon newton_slopes(const CharPoly& f, long p);

}  // namespace slopelab
