#pragma once

// Filtrations along a Theta-cycle mod p for a non-ordinary form of weight
// 4 <= k <= p-1, and the exceptional weights/slopes they predict.

#include <cstdint>
#include <string>
#include <vector>

#include "slopelab/slopes.hpp"

namespace slopelab {

struct ThetaCycle {
    long p = 0;
    int seed = 0;
    /// w(Theta^i f) for i = 0..p-2.
    std::vector<std::int64_t> filtrations;

    /// The filtration after one more application of Theta (closes to seed).
    std::int64_t next_after_last() const;
};

/// Throws std::invalid_argument unless p >= 5 is prime and 4 <= k <= p-1 is even.
ThetaCycle theta_cycle(long p, int k);

/// Filtrations of the cycle that are <= k_max, ascending.
std::vector<std::int64_t> predicted_exception_weights(long p, int seed, std::int64_t k_max);

struct PredictedSlope {
    std::int64_t weight = 0;
    std::int64_t slope = 0;
};

/// Slope 1 at the start of each of the two rising runs, +1 per step.
std::vector<PredictedSlope> predicted_slope_profile(long p, int seed, std::int64_t k_max);

enum class ThetaMatch { match, slope_mismatch, not_exceptional, missing_record };

std::string to_string(ThetaMatch m);

struct ThetaCheckEntry {
    std::int64_t weight = 0;
    std::int64_t predicted_slope = 0;
    std::vector<SlopeMult> observed;
    ThetaMatch status = ThetaMatch::missing_record;
};

struct ThetaReport {
    long p = 0;
    int seed = 0;
    bool applicable = false;
    std::string reason;
    int sweep_max = 0;
    std::vector<ThetaCheckEntry> entries;
    /// Cycle weights above the largest swept weight.
    std::vector<std::int64_t> unverified;
    /// Swept weights with exceptional slopes that the cycle does not predict.
    std::vector<int> unexplained;

    bool full_match() const;
};

ThetaReport crosscheck_theta(const std::vector<SlopeRecord>& records, long p, int seed);

}  // namespace slopelab
