#include "slopelab/golden.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "slopelab/primes.hpp"
#include "slopelab/record_io.hpp"

namespace slopelab::golden {

std::vector<Rational> parse_slope_list(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) continue;
        const auto slash = tok.find('/');
        if (slash == std::string::npos) {
            out.emplace_back(std::stoll(tok));
        } else {
            out.emplace_back(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
        }
    }
    return out;
}

namespace {

struct RawRow {
    int k;
    const char* slopes;
};

constexpr RawRow kP79Rows[] = {
    {38, "0, 1"},
    {44, "0, 0, 1"},
    {116, "0, 1/2, 1/2, 1, 1, 1, 1, 1, 1"},
    {118, "0, 0, 0, 1, 1, 1, 1, 1, 2"},
    {122, "0, 0, 1/2, 1/2, 1, 1, 1, 1, 1"},
    {124, "0, 0, 0, 1, 1, 1, 1, 1, 1, 2"},
    {194, "0, 1/2, 1/2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2"},
    {196, "0, 0, 0, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 2"},
    {198, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3"},
    {200, "0, 0, 1/2, 1/2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2"},
    {202, "0, 0, 0, 1, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2"},
    {204, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3"},
    {272, "0, 1/2, 1/2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3"},
    {274, "0, 0, 0, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3"},
    {276, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 5/2, 5/2, 3, 3, 3, 3, 3, 3"},
    {278, "0, 0, 1/2, 1/2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4"},
    {280, "0, 0, 0, 1, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3"},
    {282, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 5/2, 5/2, 3, 3, 3, 3, 3"},
    {284, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4"},
    {350, "0, 1/2, 1/2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4"},
    {352, "0, 0, 0, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4"},
    {354, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 5/2, 5/2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4"},
    {356, "0, 0, 1/2, 1/2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 7/2, 7/2, 4, 4, 4, 4, 4, 4"},
    {358, "0, 0, 0, 1, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5"},
    {360, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 5/2, 5/2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4"},
    {362, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 7/2, 7/2, 4, 4, 4, 4, 4"},
    {364, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5"},
    {428, "0, 1/2, 1/2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5"},
    {430, "0, 0, 0, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5"},
    {432, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 5/2, 5/2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5"},
    {434, "0, 0, 1/2, 1/2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 7/2, 7/2, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5"},
    {436, "0, 0, 0, 1, 1, 1, 1, 1, 1, 3/2, 3/2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 9/2, 9/2, 5, 5, 5, 5, 5, 5"},
    {438, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 5/2, 5/2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6"},
    {440, "0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 7/2, 7/2, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5"},
    {442, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 9/2, 9/2, 5, 5, 5, 5, 5"},
    {444, "0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 6"},
};

bool has_record(const std::map<std::pair<long, int>, const SlopeRecord*>& idx, long p, int k) {
    return idx.contains({p, k});
}

}  // namespace

const std::vector<SlopeRow>& p79_table() {
    static const std::vector<SlopeRow> rows = [] {
        std::vector<SlopeRow> out;
        for (const auto& r : kP79Rows) out.push_back({79, r.k, parse_slope_list(r.slopes)});
        return out;
    }();
    return rows;
}

const std::vector<ExceptionalSlope>& p59_exceptions() {
    static const std::vector<ExceptionalSlope> rows = {
        {59, 16, 1, "0.066"},  {59, 46, 1, "0.022"},  {59, 76, 2, "0.026"},  {59, 106, 2, "0.019"},
        {59, 136, 3, "0.022"}, {59, 166, {}, "0.018"}, {59, 196, {}, "0.020"}, {59, 226, {}, "0.017"},
        {59, 256, {}, "0.019"}, {59, 286, {}, "0.017"}, {59, 316, {}, "0.019"}, {59, 346, {}, "0.017"},
        {59, 376, {}, "0.018"}, {59, 406, {}, "0.017"}, {59, 436, {}, "0.018"}, {59, 466, {}, "0.017"},
        {59, 496, {}, "0.018"},
    };
    return rows;
}

const std::vector<ExceptionRowRef>& exception_table() {
    static const std::vector<ExceptionRowRef> rows = [] {
        std::vector<ExceptionRowRef> out;
        // Exhaustive for p <= 100, 12 <= k <= 500: only 59 and 79 have exceptions.
        for (long p : primes_between(2, 100)) {
            ExceptionRowRef row{p, {}, 500};
            if (p == 59) row.weights = {16, 46, 76, 106, 136, 166, 196, 226, 256, 286, 316, 346, 376, 406, 436, 466, 496};
            if (p == 79) row.weights = {38, 44, 118, 124, 198, 204, 278, 284, 358, 364, 438, 444};
            out.push_back(std::move(row));
        }
        // Isolated large-prime exceptions in low weight.
        out.push_back({2411, {12}, 0});
        out.push_back({15271, {16}, 0});
        out.push_back({187441, {16}, 0});
        out.push_back({3371, {20}, 0});
        out.push_back({64709, {20}, 0});
        return out;
    }();
    return rows;
}

const std::vector<std::string>& p59_ssing_series() {
    static const std::vector<std::string> series = [] {
        std::vector<std::string> out;
        for (const auto& e : p59_exceptions()) out.push_back(e.ssing);
        return out;
    }();
    return series;
}

const std::vector<std::pair<long, int>>& expected_trains() {
    static const std::vector<std::pair<long, int>> trains = {
        {59, 76},  {59, 106}, {59, 136}, {59, 166}, {59, 196}, {59, 226},
        {79, 118}, {79, 124}, {79, 198}, {79, 204}, {79, 278}, {79, 284},
        {79, 358}, {79, 364}, {79, 438}, {79, 444},
    };
    return trains;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "PASS";
        case Outcome::fail: return "FAIL";
        case Outcome::missing: return "MISSING";
    }
    return "?";
}

std::vector<VerifyItem> verify_records(const std::vector<SlopeRecord>& records) {
    std::map<std::pair<long, int>, const SlopeRecord*> idx;
    for (const auto& r : records) idx[{r.p, r.k}] = &r;
    std::vector<VerifyItem> items;

    for (const auto& row : p79_table()) {
        VerifyItem it{"slopes p=" + std::to_string(row.p) + " k=" + std::to_string(row.k), Outcome::missing, ""};
        if (has_record(idx, row.p, row.k)) {
            const auto got = expand(idx.at({row.p, row.k})->tp_slopes);
            it.outcome = got == row.lower_half ? Outcome::pass : Outcome::fail;
            if (it.outcome == Outcome::fail) it.detail = "got " + join_slopes(idx.at({row.p, row.k})->tp_slopes);
        }
        items.push_back(std::move(it));
    }

    for (const auto& ex : p59_exceptions()) {
        VerifyItem it{"exceptional p=" + std::to_string(ex.p) + " k=" + std::to_string(ex.k), Outcome::missing, ""};
        if (has_record(idx, ex.p, ex.k)) {
            const SlopeRecord& r = *idx.at({ex.p, ex.k});
            const auto flat = expand(r.exceptional);
            bool ok = flat.size() == 1;
            if (ok && ex.slope) ok = flat[0] == Rational(*ex.slope);
            if (ok) ok = (flat[0] / Rational(r.k - 1)).truncated_decimal(3) == ex.ssing;
            it.outcome = ok ? Outcome::pass : Outcome::fail;
            if (!ok) it.detail = "exceptional slopes: " + join_slopes(r.exceptional);
        }
        items.push_back(std::move(it));
    }

    for (const auto& row : exception_table()) {
        VerifyItem it{"exception weights p=" + std::to_string(row.p), Outcome::missing, ""};
        std::vector<int> covered;
        std::vector<int> found;
        for (const auto& [key, rec] : idx) {
            if (key.first != row.p) continue;
            const bool claimed = std::find(row.weights.begin(), row.weights.end(), key.second) != row.weights.end();
            if (key.second > row.swept_to && !claimed) continue;
            covered.push_back(key.second);
            if (!rec->exceptional.empty()) found.push_back(key.second);
        }
        if (!covered.empty()) {
            std::vector<int> expected;
            for (int k : row.weights) {
                if (std::find(covered.begin(), covered.end(), k) != covered.end()) expected.push_back(k);
            }
            it.outcome = found == expected ? Outcome::pass : Outcome::fail;
            std::ostringstream os;
            os << covered.size() << " weights checked";
            if (it.outcome == Outcome::fail) {
                os << "; exceptional at";
                for (int k : found) os << ' ' << k;
            }
            it.detail = os.str();
        }
        items.push_back(std::move(it));
    }

    {
        VerifyItem it{"ssing series p=59", Outcome::missing, ""};
        const bool all_present = std::all_of(p59_exceptions().begin(), p59_exceptions().end(),
                                             [&](const ExceptionalSlope& e) { return has_record(idx, e.p, e.k); });
        if (all_present) {
            std::vector<SlopeRecord> subset;
            for (const auto& e : p59_exceptions()) subset.push_back(*idx.at({e.p, e.k}));
            it.outcome = exceptional_ssing_series(subset, 59) == p59_ssing_series() ? Outcome::pass : Outcome::fail;
        }
        items.push_back(std::move(it));
    }

    {
        VerifyItem it{"trains", Outcome::missing, ""};
        int checked = 0;
        std::string bad;
        std::map<std::pair<long, int>, bool> certs;
        std::set<long> primes;
        for (const auto& [p, k] : expected_trains()) primes.insert(p);
        for (long p : primes) {
            for (const auto& cert : detect_trains(records, p)) certs[{cert.p, cert.weight}] = cert.matched();
        }
        for (const auto& [p, k] : expected_trains()) {
            if (!has_record(idx, p, k)) continue;
            ++checked;
            const auto c = certs.find({p, k});
            if (c == certs.end() || !c->second) bad += " " + std::to_string(p) + "/" + std::to_string(k);
        }
        if (checked > 0) {
            it.outcome = bad.empty() ? Outcome::pass : Outcome::fail;
            it.detail = std::to_string(checked) + " trains checked" + (bad.empty() ? "" : "; unmatched:" + bad);
        }
        items.push_back(std::move(it));
    }

    {
        VerifyItem it{"ulmer (all T_p slopes < (k-1)/2)", Outcome::missing, ""};
        if (!records.empty()) {
            std::string bad;
            for (const auto& r : records) {
                if (!r.ulmer_ok) bad += " p" + std::to_string(r.p) + "_k" + std::to_string(r.k);
            }
            it.outcome = bad.empty() ? Outcome::pass : Outcome::fail;
            it.detail = std::to_string(records.size()) + " records" + (bad.empty() ? "" : "; violated at" + bad);
        }
        items.push_back(std::move(it));
    }
    return items;
}

}  // namespace slopelab::golden
