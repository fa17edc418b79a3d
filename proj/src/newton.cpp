#include "slopelab/newton.hpp"

#include <string>

#include "slopelab/exactlinalg.hpp"

namespace slopelab {

Valuation ordp(const mpz_class& n, long p) {
    if (p < 2) throw std::invalid_argument("ordp: p must be at least 2, got " + std::to_string(p));
    if (n == 0) return std::nullopt;
    mpz_class rest;
    const mpz_class prime(p);
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Rational slope_sum(const std::vector<SlopeMult>& slopes) {
    Rational total;
    for (const auto& s : slopes) total += s.slope * Rational(s.mult);
    return total;
}

std::int64_t slope_count(const std::vector<SlopeMult>& slopes) {
    std::int64_t n = 0;
    for (const auto& s : slopes) n += s.mult;
    return n;
}

std::vector<Rational> expand(const std::vector<SlopeMult>& slopes) {
    std::vector<Rational> flat;
    for (const auto& s : slopes) flat.insert(flat.end(), static_cast<std::size_t>(s.mult), s.slope);
    return flat;
}

std::vector<SlopeMult> group(const std::vector<Rational>& sorted) {
    std::vector<SlopeMult> out;
    for (const auto& r : sorted) {
        if (!out.empty() && out.back().slope == r) {
            ++out.back().mult;
        } else {
            out.push_back({r, 1});
        }
    }
    return out;
}

namespace {

// > 0 when o -> a -> b turns counterclockwise.
__int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

}  // namespace

NewtonPolygon newton_slopes(const std::vector<mpz_class>& coeffs, long p) {
    if (coeffs.empty() || coeffs.front() != 1) throw std::invalid_argument("newton_slopes: polynomial must be monic");
    if (coeffs.back() == 0) throw InfiniteSlopeError();

    NewtonPolygon poly;
    poly.p = p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (const Valuation v = ordp(coeffs[i], p)) poly.points.push_back({static_cast<std::int64_t>(i), *v});
    }

    // Monotone chain; points are already sorted by x.
    auto& hull = poly.vertices;
    for (const auto& pt : poly.points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }

    for (std::size_t i = 1; i < hull.size(); ++i) {
        const std::int64_t dx = hull[i].x - hull[i - 1].x;
        const std::int64_t dy = hull[i].y - hull[i - 1].y;
        poly.slopes.push_back({Rational(dy, dx), dx});
    }
    return poly;
}

NewtonPolygon newton_slopes(const CharPoly& f, long p) { return newton_slopes(f.coeffs, p); }

}  // namespace slopelab
