#include "slopelab/modforms.hpp"

#include "slopelab/primes.hpp"

namespace slopelab {

namespace {

void require_even_weight(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("weight must be even and nonnegative, got " + std::to_string(k));
}

void require_basis_precision(int k, std::size_t prec) {
    const auto need = static_cast<std::size_t>(cusp_dim(k)) + 1;
    if (prec < need) throw InsufficientPrecision(prec, need);
}

// Small-weight factor A = E4^a E6^b of weight e in {0, 4, 6, 8, 10, 14}.
IntSeries weight_complement(int e, const IntSeries& e4, const IntSeries& e6) {
    switch (e) {
        case 0: return IntSeries::one(e4.prec());
        case 4: return e4;
        case 6: return e6;
        case 8: return e4 * e4;
        case 10: return e4 * e6;
        case 14: return e4 * e4 * e6;
        default: throw std::logic_error("weight_complement: unexpected residue " + std::to_string(e));
    }
}

}  // namespace

int cusp_dim(int k) {
    require_even_weight(k);
    if (k < 12) return 0;
    int count = 0;
    for (int a = 0; 4 * a <= k - 12; ++a) {
        if ((k - 12 - 4 * a) % 6 == 0) ++count;
    }
    return count;
}

std::vector<std::pair<int, int>> monomial_exponents(int k) {
    require_even_weight(k);
    std::vector<std::pair<int, int>> out;
    for (int a = (k - 12) / 4; a >= 0; --a) {
        const int rest = k - 12 - 4 * a;
        if (rest >= 0 && rest % 6 == 0) out.emplace_back(a, rest / 6);
    }
    return out;
}

std::vector<IntSeries> monomial_basis(int k, std::size_t prec) {
    require_basis_precision(k, prec);
    const auto exps = monomial_exponents(k);
    if (exps.empty()) return {};
    const IntSeries e4 = eisenstein_e4(prec);
    const IntSeries e6 = eisenstein_e6(prec);
    const IntSeries d = delta(prec);

    const int a_max = exps.front().first;
    const int b_max = exps.back().second;
    std::vector<IntSeries> e4_pow{IntSeries::one(prec)};
    std::vector<IntSeries> e6_pow{IntSeries::one(prec)};
    for (int a = 1; a <= a_max; ++a) e4_pow.push_back(e4_pow.back() * e4);
    for (int b = 1; b <= b_max; ++b) e6_pow.push_back(e6_pow.back() * e6);

    std::vector<IntSeries> basis;
    basis.reserve(exps.size());
    for (const auto& [a, b] : exps) basis.push_back(d * e4_pow[static_cast<std::size_t>(a)] * e6_pow[static_cast<std::size_t>(b)]);
    return basis;
}

CuspSpace miller_basis(int k, std::size_t prec) {
    require_basis_precision(k, prec);
    CuspSpace space{k, prec, {}};
    const int n = cusp_dim(k);
    if (n == 0) return space;

    int e = k % 12;
    if (e == 2) e = 14;
    const IntSeries e4 = eisenstein_e4(prec);
    const IntSeries e6 = eisenstein_e6(prec);
    const IntSeries d = delta(prec);
    const IntSeries e6_sq = e6 * e6;

    // g_i = A * E6^(2(n-i)) * Delta^i = q^i + O(q^(i+1)), i = 1..n.
    auto& g = space.basis;
    g.assign(static_cast<std::size_t>(n), IntSeries(prec));
    g[static_cast<std::size_t>(n - 1)] = weight_complement(e, e4, e6);
    for (int i = n - 1; i >= 1; --i) g[static_cast<std::size_t>(i - 1)] = g[static_cast<std::size_t>(i)] * e6_sq;
    IntSeries delta_pow = d;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) delta_pow = delta_pow * d;
        g[static_cast<std::size_t>(i - 1)] = g[static_cast<std::size_t>(i - 1)] * delta_pow;
    }

    // Back substitution: clear q^j (i < j <= n) from g_i using the already
    // reduced g_j. Pivots are 1, so everything stays integral.
    for (int i = n - 1; i >= 1; --i) {
        IntSeries& row = g[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= n; ++j) {
            const mpz_class c = row[static_cast<std::size_t>(j)];
            if (c != 0) series_submul(row, c, g[static_cast<std::size_t>(j - 1)]);
        }
    }
    return space;
}

CuspSpace miller_basis_from_monomials(int k, std::size_t prec) {
    const auto mono = monomial_basis(k, prec);
    CuspSpace space{k, prec, {}};
    const std::size_t n = mono.size();
    if (n == 0) return space;

    RatMatrix lead(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) lead(i, j) = mono[i][j + 1];
    }
    const RatMatrix inv = inverse(lead);  // throws if singular

    for (std::size_t i = 0; i < n; ++i) {
        IntSeries f(prec);
        for (std::size_t c = 0; c < prec; ++c) {
            mpq_class acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += inv(i, j) * mono[j][c];
            if (acc.get_den() != 1) {
                throw std::domain_error("miller_basis_from_monomials: non-integral coefficient at q^" + std::to_string(c) +
                                        " of basis element " + std::to_string(i + 1));
            }
            f[c] = acc.get_num();
        }
        space.basis.push_back(std::move(f));
    }
    return space;
}

std::size_t hecke_precision(int k, long p) {
    return static_cast<std::size_t>(cusp_dim(k)) * static_cast<std::size_t>(p) + 1;
}

IntSeries apply_hecke(const IntSeries& f, long p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("apply_hecke: " + std::to_string(p) + " is not prime");
    const auto up = static_cast<std::size_t>(p);
    const std::size_t out_prec = (f.prec() - 1) / up + 1;
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - 1));
    IntSeries out(out_prec);
    for (std::size_t n = 0; n < out_prec; ++n) {
        out[n] = f[n * up];
        if (n % up == 0) mpz_addmul(out[n].get_mpz_t(), pk.get_mpz_t(), f[n / up].get_mpz_t());
    }
    return out;
}

HeckeMatrix hecke_matrix(const CuspSpace& space, long p) {
    if (!is_prime(p)) throw std::invalid_argument("hecke_matrix: " + std::to_string(p) + " is not prime");
    const auto d = static_cast<std::size_t>(space.dim());
    const std::size_t need = d * static_cast<std::size_t>(p) + 1;
    if (d > 0 && space.prec < need) throw InsufficientPrecision(space.prec, need);

    HeckeMatrix h{p, space.weight, IntMatrix(d, d)};
    for (std::size_t i = 0; i < d; ++i) {
        const IntSeries image = apply_hecke(space.basis[i].truncated(need), p, space.weight);
        for (std::size_t j = 0; j < d; ++j) h.entries(i, j) = image[j + 1];
    }
    return h;
}

RatMatrix hecke_matrix_monomial(int k, long p) {
    const std::size_t prec = std::max<std::size_t>(hecke_precision(k, p), static_cast<std::size_t>(cusp_dim(k)) + 1);
    const auto mono = monomial_basis(k, prec);
    const std::size_t n = mono.size();
    RatMatrix images(n, n);
    RatMatrix lead(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const IntSeries image = apply_hecke(mono[i], p, k);
        for (std::size_t j = 0; j < n; ++j) {
            images(i, j) = image[j + 1];
            lead(i, j) = mono[i][j + 1];
        }
    }
    // images = M * lead  =>  M = images * lead^-1.
    return images * inverse(lead);
}

}  // namespace slopelab
