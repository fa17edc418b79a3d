#include "slopelab/rational.hpp"

#include <limits>

namespace slopelab {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string pad_digits(__int128 frac, int places) {
    std::string digits(static_cast<std::size_t>(places), '0');
    for (int i = places - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
        frac /= 10;
    }
    return digits;
}

std::string render_scaled(__int128 scaled, int places) {
    // scaled = value * 10^places, already an integer.
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const auto whole = static_cast<std::int64_t>(scaled / scale);
    std::string out = negative ? "-" : "";
    out += std::to_string(whole);
    if (places > 0) out += "." + pad_digits(scaled % scale, places);
    return out;
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

void Rational::normalize() { *this = from_wide(num_, den_); }

std::string Rational::truncated_decimal(int places) const {
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 n = static_cast<__int128>(num_) * scale;
    __int128 q = n / den_;
    if (n % den_ != 0 && n < 0) --q;
    return render_scaled(q, places);
}

std::string Rational::rounded_decimal(int places) const {
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const __int128 n = static_cast<__int128>(num_) * scale;
    __int128 q = n / den_;
    __int128 r = n % den_;
    if (r < 0) {
        --q;
        r += den_;
    }
    const __int128 twice = 2 * r;
    if (twice > den_ || (twice == den_ && (q % 2 != 0))) ++q;
    return render_scaled(q, places);
}

}  // namespace slopelab
