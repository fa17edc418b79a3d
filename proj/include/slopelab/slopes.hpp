#pragma once

// Slope and supersingularity sequences of U on p-oldforms of level one,
// exceptional/fractional slope detection, trains, and the measures mu_k.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopelab/modforms.hpp"
#include "slopelab/newton.hpp"
#include "slopelab/rational.hpp"

namespace slopelab {

struct SlopeRecord {
    long p = 0;
    int k = 0;
    int dim = 0;
    /// T_p slopes on S_k(1), ascending: the lower half of the U sequence.
    std::vector<SlopeMult> tp_slopes;
    /// Full U slope sequence on the oldforms, ascending, 2*dim entries.
    std::vector<SlopeMult> u_slopes;
    /// u_slopes / (k - 1), ascending.
    std::vector<SlopeMult> ssing;
    /// False when some T_p slope reaches (k-1)/2.
    bool ulmer_ok = true;
    /// Lower-half slopes whose supersingularity exceeds 1/(p+1).
    std::vector<SlopeMult> exceptional;
    /// Lower-half slopes that are not integers.
    std::vector<SlopeMult> fractional;

    friend bool operator==(const SlopeRecord&, const SlopeRecord&) = default;
};

/// Intermediate objects of one (p, k) computation, kept for cross-checks.
struct RecordTrace {
    HeckeMatrix hecke;
    CharPoly charpoly;
    NewtonPolygon polygon;
};

/// Builds a record from T_p slopes on S_k(1) by the oldform pairing rule.
SlopeRecord record_from_tp_slopes(long p, int k, std::vector<SlopeMult> tp_slopes);

/// Full pipeline: Miller basis, T_p matrix, char poly, Newton polygon.
SlopeRecord compute_record(long p, int k, RecordTrace* trace = nullptr);

/// slope / (k-1) > 1/(p+1), decided exactly.
bool is_exceptional(const Rational& slope, long p, int k);

struct ExceptionRow {
    long p = 0;
    int k = 0;
    std::vector<SlopeMult> slopes;
};

/// One row per record that has at least one exceptional slope, ordered by (p, k).
std::vector<ExceptionRow> scan_exceptions(const std::vector<SlopeRecord>& records);

struct TrainStep {
    int weight = 0;
    Rational expected_slope;
    /// Multiplicity of expected_slope in the lower half; nullopt if the record is absent.
    std::optional<std::int64_t> found_mult;
    bool matched() const { return found_mult && *found_mult == 2; }
};

struct TrainCertificate {
    long p = 0;
    int weight = 0;
    std::int64_t slope = 0;
    std::vector<TrainStep> steps;
    bool matched() const;
};

/// For every exceptional integer slope n >= 2 at weight k, checks that
/// weight k - 2j carries slope (2(n-j)-1)/2 with multiplicity exactly 2,
/// for j = 1..n-1. Records may be unsorted; only those for prime p are used.
std::vector<TrainCertificate> detect_trains(const std::vector<SlopeRecord>& records, long p);

/// A finite measure on [0, 1] with exact rational point masses.
struct Measure {
    std::map<Rational, Rational> masses;

    Rational total() const;
    bool is_symmetric() const;
};

/// mu_k: mass 1/(2d) at each eta_i and at 1 - eta_i.
Measure measure_mu(const SlopeRecord& record);

struct Histogram {
    int bins = 0;
    std::vector<Rational> mass;
};

/// Bin index of eta in [0,1]: [i/B, (i+1)/B), the last bin closed.
int bin_index(const Rational& eta, int bins);

/// Dimension-weighted average of the mu_k of all records (with dim > 0),
/// binned into `bins` equal bins.
Histogram aggregate_measures(const std::vector<SlopeRecord>& records, int bins);

/// Supersingularities of exceptional slopes for prime p in weight order,
/// truncated to three decimals.
std::vector<std::string> exceptional_ssing_series(const std::vector<SlopeRecord>& records, long p);

}  // namespace slopelab
