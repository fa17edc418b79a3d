#include "slopelab/slopes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slopelab {

SlopeRecord record_from_tp_slopes(long p, int k, std::vector<SlopeMult> tp_slopes) {
    SlopeRecord rec;
    rec.p = p;
    rec.k = k;
    rec.dim = static_cast<int>(slope_count(tp_slopes));
    rec.tp_slopes = std::move(tp_slopes);

    const Rational top(k - 1);
    const Rational middle(k - 1, 2);
    std::vector<Rational> lower;
    std::vector<Rational> full;
    for (const Rational& a : expand(rec.tp_slopes)) {
        if (a < middle) {
            lower.push_back(a);
            full.push_back(a);
            full.push_back(top - a);
        } else {
            // Double root case for x^2 - a_p x + p^(k-1): both roots have valuation (k-1)/2.
            rec.ulmer_ok = false;
            lower.push_back(middle);
            full.push_back(middle);
            full.push_back(middle);
        }
    }
    std::sort(lower.begin(), lower.end());
    std::sort(full.begin(), full.end());
    rec.u_slopes = group(full);

    for (const auto& s : rec.u_slopes) rec.ssing.push_back({s.slope / top, s.mult});
    for (const auto& s : group(lower)) {
        if (is_exceptional(s.slope, p, k)) rec.exceptional.push_back(s);
        if (!s.slope.is_integer()) rec.fractional.push_back(s);
    }
    return rec;
}

SlopeRecord compute_record(long p, int k, RecordTrace* trace) {
    if (k < 12 || k % 2 != 0) throw std::invalid_argument("compute_record: weight must be even and at least 12");
    const CuspSpace space = miller_basis(k, std::max<std::size_t>(hecke_precision(k, p), 2));
    HeckeMatrix hecke = hecke_matrix(space, p);
    CharPoly cp = char_poly(hecke.entries);
    NewtonPolygon polygon = newton_slopes(cp, p);
    SlopeRecord rec = record_from_tp_slopes(p, k, polygon.slopes);
    if (trace != nullptr) *trace = RecordTrace{std::move(hecke), std::move(cp), std::move(polygon)};
    return rec;
}

bool is_exceptional(const Rational& slope, long p, int k) {
    // slope / (k-1) > 1 / (p+1)  <=>  slope * (p+1) > k-1.
    return slope * Rational(p + 1) > Rational(k - 1);
}

std::vector<ExceptionRow> scan_exceptions(const std::vector<SlopeRecord>& records) {
    std::vector<ExceptionRow> rows;
    for (const auto& r : records) {
        if (!r.exceptional.empty()) rows.push_back({r.p, r.k, r.exceptional});
    }
    std::sort(rows.begin(), rows.end(), [](const ExceptionRow& a, const ExceptionRow& b) {
        return std::pair(a.p, a.k) < std::pair(b.p, b.k);
    });
    return rows;
}

bool TrainCertificate::matched() const {
    return std::all_of(steps.begin(), steps.end(), [](const TrainStep& s) { return s.matched(); });
}

std::vector<TrainCertificate> detect_trains(const std::vector<SlopeRecord>& records, long p) {
    std::map<int, const SlopeRecord*> by_weight;
    for (const auto& r : records) {
        if (r.p == p) by_weight[r.k] = &r;
    }
    const auto lower_mult = [](const SlopeRecord& r, const Rational& s) -> std::int64_t {
        for (const auto& sm : r.tp_slopes) {
            if (sm.slope == s) return sm.mult;
        }
        return 0;
    };

    std::vector<TrainCertificate> out;
    for (const auto& [k, rec] : by_weight) {
        for (const auto& ex : rec->exceptional) {
            if (!ex.slope.is_integer() || ex.slope.num() < 2) continue;
            TrainCertificate cert{p, k, ex.slope.num(), {}};
            for (std::int64_t j = 1; j < cert.slope; ++j) {
                TrainStep step;
                step.weight = k - static_cast<int>(2 * j);
                step.expected_slope = Rational(2 * (cert.slope - j) - 1, 2);
                if (auto it = by_weight.find(step.weight); it != by_weight.end()) {
                    step.found_mult = lower_mult(*it->second, step.expected_slope);
                }
                cert.steps.push_back(step);
            }
            out.push_back(std::move(cert));
        }
    }
    return out;
}

Rational Measure::total() const {
    Rational t;
    for (const auto& [pt, m] : masses) t += m;
    return t;
}

bool Measure::is_symmetric() const {
    for (const auto& [pt, m] : masses) {
        const auto it = masses.find(Rational(1) - pt);
        if (it == masses.end() || it->second != m) return false;
    }
    return true;
}

Measure measure_mu(const SlopeRecord& record) {
    if (record.dim <= 0) throw std::invalid_argument("measure_mu: empty space");
    Measure mu;
    const Rational unit(1, 2 * static_cast<std::int64_t>(record.dim));
    for (const auto& s : record.ssing) mu.masses[s.slope] += unit * Rational(s.mult);
    return mu;
}

int bin_index(const Rational& eta, int bins) {
    const std::int64_t i = (eta * Rational(bins)).floor();
    return static_cast<int>(std::clamp<std::int64_t>(i, 0, bins - 1));
}

Histogram aggregate_measures(const std::vector<SlopeRecord>& records, int bins) {
    if (bins < 1) throw std::invalid_argument("aggregate_measures: bins must be positive");
    Histogram h{bins, std::vector<Rational>(static_cast<std::size_t>(bins))};
    std::int64_t total_dim = 0;
    for (const auto& r : records) total_dim += r.dim;
    if (total_dim == 0) return h;
    // sum_k d_k mu_k / sum_k d_k puts 1 / (2 sum d) on every U slope.
    const Rational unit(1, 2 * total_dim);
    for (const auto& r : records) {
        for (const auto& s : r.ssing) h.mass[static_cast<std::size_t>(bin_index(s.slope, bins))] += unit * Rational(s.mult);
    }
    return h;
}

std::vector<std::string> exceptional_ssing_series(const std::vector<SlopeRecord>& records, long p) {
    std::map<int, const SlopeRecord*> by_weight;
    for (const auto& r : records) {
        if (r.p == p) by_weight[r.k] = &r;
    }
    std::vector<std::string> out;
    for (const auto& [k, rec] : by_weight) {
        for (const auto& ex : rec->exceptional) {
            const std::string text = (ex.slope / Rational(k - 1)).truncated_decimal(3);
            for (std::int64_t m = 0; m < ex.mult; ++m) out.push_back(text);
        }
    }
    return out;
}

}  // namespace slopelab
