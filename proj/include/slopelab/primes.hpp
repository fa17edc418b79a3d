#pragma once

#include <vector>

namespace slopelab {

// Trial division; the primes this tool handles are far below 2^31.
constexpr bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<long> primes_between(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo; n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

}  // namespace slopelab
