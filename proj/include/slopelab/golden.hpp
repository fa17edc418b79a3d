#pragma once

// Embedded reference data and the record verification behind
// `slopelab verify`. Everything here is compiled in; no network access.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopelab/slopes.hpp"

namespace slopelab::golden {

/// Lower-half slope sequence at one (p, k).
struct SlopeRow {
    long p = 0;
    int k = 0;
    std::vector<Rational> lower_half;
};

/// p = 79: every weight in [12, 500] with a fractional or exceptional slope.
const std::vector<SlopeRow>& p79_table();

/// One exceptional slope at (p, k); `slope` is set where it is known
/// outright, `ssing` is the three-decimal truncated supersingularity.
struct ExceptionalSlope {
    long p = 0;
    int k = 0;
    std::optional<std::int64_t> slope;
    std::string ssing;
};

/// p = 59: the 17 exceptional weights up to 496.
const std::vector<ExceptionalSlope>& p59_exceptions();

/// Known exceptional weights per prime. `swept_to` is the largest weight
/// covered by the exhaustive search; weights above it carry no claim.
struct ExceptionRowRef {
    long p = 0;
    std::vector<int> weights;
    int swept_to = 0;
};

const std::vector<ExceptionRowRef>& exception_table();

/// Truncated supersingularities of the p = 59 exceptional slopes, weight order.
const std::vector<std::string>& p59_ssing_series();

/// Train certificates expected to match: (p, exceptional weight).
const std::vector<std::pair<long, int>>& expected_trains();

enum class Outcome { pass, fail, missing };

std::string to_string(Outcome o);

struct VerifyItem {
    std::string name;
    Outcome outcome = Outcome::missing;
    std::string detail;
};

/// Compares records against every fixture that the records cover.
std::vector<VerifyItem> verify_records(const std::vector<SlopeRecord>& records);

/// Parses "0, 1/2, 1" into rationals.
std::vector<Rational> parse_slope_list(const std::string& text);

}  // namespace slopelab::golden
