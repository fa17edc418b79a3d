#include "slopelab/theta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "slopelab/primes.hpp"

namespace slopelab {

std::int64_t ThetaCycle::next_after_last() const {
    // (k-2)p is divisible by p: the filtration falls, here with n = k-1.
    const std::int64_t w = filtrations.back();
    if (w % p != 0) return w + p + 1;
    return w + p + 1 - static_cast<std::int64_t>(seed - 1) * (p - 1);
}

ThetaCycle theta_cycle(long p, int k) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("theta_cycle: p must be a prime >= 5");
    if (k < 4 || k > p - 1 || k % 2 != 0) {
        throw std::invalid_argument("theta_cycle: seed weight must be even with 4 <= k <= p-1");
    }
    ThetaCycle c{p, k, {}};
    const std::int64_t step = p + 1;
    const std::int64_t rise = p - k;  // w_i = k + i(p+1) for i = 0..p-k
    for (std::int64_t i = 0; i <= rise; ++i) c.filtrations.push_back(k + i * step);
    // At w = p(p+1-k) the filtration falls with n = p+2-k.
    const std::int64_t restart = p + 3 - k;
    for (std::int64_t i = rise + 1; i <= p - 2; ++i) c.filtrations.push_back(restart + (i - rise - 1) * step);
    return c;
}

std::vector<std::int64_t> predicted_exception_weights(long p, int seed, std::int64_t k_max) {
    std::vector<std::int64_t> out;
    for (std::int64_t w : theta_cycle(p, seed).filtrations) {
        if (w <= k_max) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PredictedSlope> predicted_slope_profile(long p, int seed, std::int64_t k_max) {
    const ThetaCycle c = theta_cycle(p, seed);
    std::vector<PredictedSlope> out;
    std::int64_t slope = 0;
    for (std::size_t i = 0; i < c.filtrations.size(); ++i) {
        const bool restart = i == 0 || c.filtrations[i] < c.filtrations[i - 1];
        slope = restart ? 1 : slope + 1;
        if (c.filtrations[i] <= k_max) out.push_back({c.filtrations[i], slope});
    }
    std::sort(out.begin(), out.end(), [](const PredictedSlope& a, const PredictedSlope& b) { return a.weight < b.weight; });
    return out;
}

std::string to_string(ThetaMatch m) {
    switch (m) {
        case ThetaMatch::match: return "match";
        case ThetaMatch::slope_mismatch: return "slope-mismatch";
        case ThetaMatch::not_exceptional: return "not-exceptional";
        case ThetaMatch::missing_record: return "missing";
    }
    return "?";
}

bool ThetaReport::full_match() const {
    return applicable && !entries.empty() && unexplained.empty() &&
           std::all_of(entries.begin(), entries.end(), [](const ThetaCheckEntry& e) { return e.status == ThetaMatch::match; });
}

ThetaReport crosscheck_theta(const std::vector<SlopeRecord>& records, long p, int seed) {
    ThetaReport report;
    report.p = p;
    report.seed = seed;
    std::map<int, const SlopeRecord*> by_weight;
    for (const auto& r : records) {
        if (r.p == p) by_weight[r.k] = &r;
    }
    if (!by_weight.empty()) report.sweep_max = by_weight.rbegin()->first;

    std::vector<PredictedSlope> profile;
    try {
        profile = predicted_slope_profile(p, seed, static_cast<std::int64_t>(p) * p);
    } catch (const std::invalid_argument& e) {
        report.reason = std::string("not applicable: ") + e.what();
        return report;
    }
    report.applicable = true;

    std::set<std::int64_t> predicted;
    for (const auto& ps : profile) {
        predicted.insert(ps.weight);
        if (ps.weight > report.sweep_max) {
            report.unverified.push_back(ps.weight);
            continue;
        }
        ThetaCheckEntry entry{ps.weight, ps.slope, {}, ThetaMatch::missing_record};
        if (auto it = by_weight.find(static_cast<int>(ps.weight)); it != by_weight.end()) {
            entry.observed = it->second->exceptional;
            if (entry.observed.empty()) {
                entry.status = ThetaMatch::not_exceptional;
            } else if (entry.observed.size() == 1 && entry.observed[0].mult == 1 &&
                       entry.observed[0].slope == Rational(ps.slope)) {
                entry.status = ThetaMatch::match;
            } else {
                entry.status = ThetaMatch::slope_mismatch;
            }
        }
        report.entries.push_back(std::move(entry));
    }
    for (const auto& [k, rec] : by_weight) {
        if (!rec->exceptional.empty() && !predicted.contains(k)) report.unexplained.push_back(k);
    }
    return report;
}

}  // namespace slopelab
