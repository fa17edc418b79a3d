#include "slopelab/qseries.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <string>

namespace slopelab {

IntSeries::IntSeries(std::size_t prec) : coeffs_(prec) {
    if (prec == 0) throw std::invalid_argument("IntSeries: precision must be positive");
}

IntSeries::IntSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("IntSeries: precision must be positive");
}

IntSeries::IntSeries(std::initializer_list<long> coeffs, std::size_t prec) : IntSeries(prec) {
    std::size_t i = 0;
    for (long c : coeffs) {
        if (i >= prec) break;
        coeffs_[i++] = c;
    }
}

IntSeries IntSeries::one(std::size_t prec) {
    IntSeries s(prec);
    s.coeffs_[0] = 1;
    return s;
}

IntSeries IntSeries::truncated(std::size_t prec) const {
    if (prec > coeffs_.size()) {
        throw std::invalid_argument("IntSeries::truncated: cannot raise precision from " +
                                    std::to_string(coeffs_.size()) + " to " + std::to_string(prec));
    }
    return IntSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec)));
}

bool IntSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

std::size_t IntSeries::max_bits() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) {
        if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return bits;
}

IntSeries series_add(const IntSeries& a, const IntSeries& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
    return IntSeries(std::move(out));
}

IntSeries series_sub(const IntSeries& a, const IntSeries& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
    return IntSeries(std::move(out));
}

namespace {

// Kronecker substitution: a series with |coefficients| < 2^(64*W-1) is
// packed into the integer sum c_i 2^(64*W*i). One GMP multiplication then
// gives the Cauchy product, which is unpacked as balanced base-2^(64W) digits.

mpz_class pack(std::span<const mpz_class> coeffs, std::size_t slot_limbs) {
    const std::size_t total = coeffs.size() * slot_limbs;
    mpz_class pos;
    mpz_class neg;
    mp_limb_t* pp = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
    mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
    std::memset(pp, 0, total * sizeof(mp_limb_t));
    std::memset(np, 0, total * sizeof(mp_limb_t));
    bool any_neg = false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const mpz_srcptr c = coeffs[i].get_mpz_t();
        const std::size_t len = mpz_size(c);
        if (len == 0) continue;
        mp_limb_t* dst = (mpz_sgn(c) > 0 ? pp : np) + i * slot_limbs;
        any_neg = any_neg || mpz_sgn(c) < 0;
        std::memcpy(dst, mpz_limbs_read(c), len * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
    mpz_limbs_finish(neg.get_mpz_t(), any_neg ? static_cast<mp_size_t>(total) : 0);
    if (any_neg) pos -= neg;
    return pos;
}

std::vector<mpz_class> unpack(const mpz_class& packed, std::size_t count, std::size_t slot_limbs) {
    std::vector<mpz_class> out(count);
    const int sign = sgn(packed);
    if (sign == 0) return out;
    const std::size_t size = mpz_size(packed.get_mpz_t());
    const mp_limb_t* src = mpz_limbs_read(packed.get_mpz_t());
    const std::size_t slot_bits = slot_limbs * GMP_NUMB_BITS;
    mpz_class radix;
    mpz_ui_pow_ui(radix.get_mpz_t(), 2, slot_bits);
    bool carry = false;
    for (std::size_t i = 0; i < count; ++i) {
        mpz_class& c = out[i];
        const std::size_t off = i * slot_limbs;
        if (off < size) {
            const std::size_t len = std::min(slot_limbs, size - off);
            mp_limb_t* dst = mpz_limbs_write(c.get_mpz_t(), static_cast<mp_size_t>(len));
            std::memcpy(dst, src + off, len * sizeof(mp_limb_t));
            mpz_limbs_finish(c.get_mpz_t(), static_cast<mp_size_t>(len));
        } else if (!carry) {
            continue;
        }
        if (carry) c += 1;
        // Digits at or above 2^(slot_bits-1) encode negative coefficients.
        carry = c != 0 && mpz_sizeinbase(c.get_mpz_t(), 2) >= slot_bits;
        if (carry) c -= radix;
        if (sign < 0) c = -c;
    }
    return out;
}

}  // namespace

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    const auto ac = a.coeffs().first(n);
    const auto bc = b.coeffs().first(n);
    std::size_t abits = 0;
    std::size_t bbits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ac[i] != 0) abits = std::max(abits, mpz_sizeinbase(ac[i].get_mpz_t(), 2));
        if (bc[i] != 0) bbits = std::max(bbits, mpz_sizeinbase(bc[i].get_mpz_t(), 2));
    }
    if (abits == 0 || bbits == 0) return IntSeries(n);
    // |product coefficient| <= n * max|a| * max|b| < 2^(abits + bbits + bitwidth(n)).
    const std::size_t need = abits + bbits + static_cast<std::size_t>(std::bit_width(n)) + 1;
    const std::size_t slot_limbs = (need + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const mpz_class pa = pack(ac, slot_limbs);
    mpz_class prod;
    if (&a == &b) {
        mpz_mul(prod.get_mpz_t(), pa.get_mpz_t(), pa.get_mpz_t());
    } else {
        const mpz_class pb = pack(bc, slot_limbs);
        mpz_mul(prod.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    }
    return IntSeries(unpack(prod, n, slot_limbs));
}

IntSeries series_pow(const IntSeries& a, unsigned e) {
    IntSeries result = IntSeries::one(a.prec());
    IntSeries base = a;
    while (e > 0) {
        if (e & 1U) result = series_mul(result, base);
        e >>= 1U;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

IntSeries series_scale(const IntSeries& a, const mpz_class& c) {
    std::vector<mpz_class> out(a.prec());
    for (std::size_t i = 0; i < a.prec(); ++i) out[i] = a[i] * c;
    return IntSeries(std::move(out));
}

IntSeries series_divexact(const IntSeries& a, const mpz_class& c) {
    if (c == 0) throw std::domain_error("series_divexact: division by zero");
    std::vector<mpz_class> out(a.prec());
    for (std::size_t i = 0; i < a.prec(); ++i) {
        if (!mpz_divisible_p(a[i].get_mpz_t(), c.get_mpz_t())) {
            throw std::domain_error("series_divexact: coefficient " + std::to_string(i) + " not divisible by " +
                                    c.get_str());
        }
        mpz_divexact(out[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
    }
    return IntSeries(std::move(out));
}

void series_submul(IntSeries& a, const mpz_class& c, const IntSeries& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    for (std::size_t i = 0; i < n; ++i) mpz_submul(a[i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
}

std::vector<mpz_class> divisor_sigma(unsigned r, std::size_t limit) {
    std::vector<mpz_class> sigma(limit);
    mpz_class power;
    for (std::size_t d = 1; d < limit; ++d) {
        mpz_ui_pow_ui(power.get_mpz_t(), d, r);
        for (std::size_t m = d; m < limit; m += d) sigma[m] += power;
    }
    return sigma;
}

IntSeries eisenstein_e4(std::size_t prec) {
    IntSeries e(prec);
    const auto s3 = divisor_sigma(3, prec);
    e[0] = 1;
    for (std::size_t n = 1; n < prec; ++n) e[n] = 240 * s3[n];
    return e;
}

IntSeries eisenstein_e6(std::size_t prec) {
    IntSeries e(prec);
    const auto s5 = divisor_sigma(5, prec);
    e[0] = 1;
    for (std::size_t n = 1; n < prec; ++n) e[n] = -504 * s5[n];
    return e;
}

IntSeries delta(std::size_t prec) {
    const IntSeries e4 = eisenstein_e4(prec);
    const IntSeries e6 = eisenstein_e6(prec);
    const IntSeries diff = series_mul(series_mul(e4, e4), e4) - series_mul(e6, e6);
    return series_divexact(diff, mpz_class(1728));
}

}  // namespace slopelab
