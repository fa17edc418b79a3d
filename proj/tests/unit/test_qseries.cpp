#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "slopelab/qseries.hpp"

using namespace slopelab;

namespace {

IntSeries random_series(std::mt19937_64& rng, std::size_t prec, int bits) {
    std::vector<mpz_class> c(prec);
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(static_cast<unsigned long>(rng()));
    for (auto& x : c) {
        x = gr.get_z_bits(static_cast<mp_bitcnt_t>(rng() % bits + 1));
        if (rng() % 2) x = -x;
        if (rng() % 5 == 0) x = 0;
    }
    return IntSeries(std::move(c));
}

IntSeries naive_mul(const IntSeries& a, const IntSeries& b) {
    const std::size_t n = std::min(a.prec(), b.prec());
    IntSeries c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("construction and precision") {
    CHECK_THROWS_AS(IntSeries(0), std::invalid_argument);
    IntSeries f({1, 2, 3}, 5);
    CHECK(f.prec() == 5);
    CHECK(f[2] == 3);
    CHECK(f[4] == 0);
    CHECK(f.truncated(2) == IntSeries({1, 2}, 2));
    CHECK_THROWS(f.truncated(6));
    CHECK(IntSeries(4).is_zero());
    CHECK(IntSeries({0, -8}, 3).max_bits() == 4);
}

TEST_CASE("binary operations take the smaller precision") {
    IntSeries a({1, 1, 1, 1}, 4);
    IntSeries b({1, -1}, 2);
    CHECK((a * b).prec() == 2);
    CHECK((a + b).prec() == 2);
    CHECK((a * b) == IntSeries({1, 0}, 2));
}

TEST_CASE("Eisenstein series match divisor sums") {
    const auto e4 = eisenstein_e4(60);
    const auto e6 = eisenstein_e6(60);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    CHECK(e6[1] == -504);
    CHECK(e4[1] + e6[1] == -264);
    CHECK(series_mul(e4, e4)[1] == 480);
    for (unsigned long n = 1; n < 60; ++n) {
        CHECK(e4[n] == 240 * oracle::sigma_naive(3, n));
        CHECK(e6[n] == -504 * oracle::sigma_naive(5, n));
    }
    const auto s7 = divisor_sigma(7, 40);
    for (unsigned long n = 1; n < 40; ++n) CHECK(s7[n] == oracle::sigma_naive(7, n));
}

TEST_CASE("E4^3 - E6^2 starts at 1728 q") {
    const auto e4 = eisenstein_e4(10);
    const auto e6 = eisenstein_e6(10);
    const auto d = series_pow(e4, 3) - series_mul(e6, e6);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1728);
}

TEST_CASE("Delta agrees with the eta product") {
    const std::size_t n = 200;
    const auto tau = oracle::tau_eta(n);
    const auto d = delta(n);
    for (std::size_t i = 0; i < n; ++i) CHECK(d[i] == tau[i]);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[6] == -6048);
}

TEST_CASE("tau is multiplicative on coprime arguments") {
    const auto d = delta(901);
    for (unsigned m = 1; m <= 30; ++m)
        for (unsigned n = 1; n <= 30; ++n)
            if (std::gcd(m, n) == 1) CHECK(d[m * n] == d[m] * d[n]);
}

TEST_CASE("series_divexact rejects remainders") {
    IntSeries f({6, 12, 18}, 3);
    CHECK(series_divexact(f, 6) == IntSeries({1, 2, 3}, 3));
    CHECK_THROWS_AS(series_divexact(f, 5), std::domain_error);
}

TEST_CASE("series_submul and scale") {
    IntSeries a({5, 5, 5}, 3);
    series_submul(a, 2, IntSeries({1, 2}, 2));
    CHECK(a == IntSeries({3, 1, 5}, 3));
    CHECK(series_scale(IntSeries({1, -2}, 2), -3) == IntSeries({-3, 6}, 2));
}

TEST_CASE("multiplication agrees with the schoolbook product") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 90;
        const int bits = trial < 30 ? 70 : 900;
        const auto a = random_series(rng, n, bits);
        const auto b = random_series(rng, n + rng() % 5, bits);
        CHECK(series_mul(a, b) == naive_mul(a, b));
        CHECK(series_mul(a, a) == naive_mul(a, a));
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 50;
        const auto a = random_series(rng, n, 200);
        const auto b = random_series(rng, n, 200);
        const auto c = random_series(rng, n, 200);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * IntSeries::one(n) == a);
        CHECK(series_pow(a, 3) == a * a * a);
    }
}

}
