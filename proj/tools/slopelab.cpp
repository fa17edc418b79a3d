// slopelab: U_p slope sequences on p-oldforms of level one.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slopelab/golden.hpp"
#include "slopelab/modforms.hpp"
#include "slopelab/primes.hpp"
#include "slopelab/record_io.hpp"
#include "slopelab/slopes.hpp"
#include "slopelab/store.hpp"
#include "slopelab/theta.hpp"

namespace {

using namespace slopelab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCompute = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        if (lo > hi) throw UsageError(std::string(what) + " range is empty: " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(std::string("bad ") + what + " range '" + text + "' (expected A..B)");
    }
}

void check_prime(long p) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

void check_weight(long k) {
    if (k % 2 != 0) throw UsageError("weight " + std::to_string(k) + " is odd; level-one cusp forms have even weight");
    if (k < 12) throw UsageError("weight " + std::to_string(k) + " has no level-one cusp forms (need k >= 12)");
}

void warn_ulmer(const SlopeRecord& r) {
    if (r.ulmer_ok) return;
    std::cerr << "!!! p=" << r.p << " k=" << r.k << ": a T_p slope reaches (k-1)/2; "
              << "U is paired as ((k-1)/2, (k-1)/2) and semisimplicity is not established here !!!\n";
}

int cmd_compute(long p, int k, bool json) {
    check_prime(p);
    check_weight(k);
    const SlopeRecord r = compute_record(p, k);
    warn_ulmer(r);
    std::cout << (json ? serialize_record(r) : format_record_text(r));
    return kExitOk;
}

int cmd_sweep(const std::string& primes, const std::string& weights, const std::string& out, unsigned workers,
              bool quiet) {
    const Range pr = parse_range(primes, "prime");
    const Range wr = parse_range(weights, "weight");
    SweepOptions opts;
    opts.prime_lo = pr.lo;
    opts.prime_hi = pr.hi;
    opts.weight_lo = static_cast<int>(wr.lo);
    opts.weight_hi = static_cast<int>(wr.hi);
    opts.workers = workers;
    if (wr.lo % 2 != 0 || wr.hi % 2 != 0 || wr.lo < 12) {
        std::cerr << "note: only even weights >= 12 carry level-one cusp forms; odd and smaller weights in "
                  << weights << " are not enumerated\n";
    }
    if (sweep_jobs(opts).empty()) throw UsageError("sweep range contains no (prime, even weight >= 12) pairs");
    if (!quiet) {
        opts.progress = [](long p, int k, const std::string& what) {
            std::cerr << "p=" << p << " k=" << k << ": " << what << '\n';
        };
    }
    ResultStore store(out);
    const SweepSummary s = run_sweep(store, opts);
    std::cout << "computed " << s.computed << ", cached " << s.cached << ", failed " << s.failed << '\n';

    std::map<long, std::vector<int>> exceptional;
    for (const auto& r : store.load_all()) {
        warn_ulmer(r);
        if (!r.exceptional.empty()) exceptional[r.p].push_back(r.k);
    }
    for (const auto& [p, ks] : exceptional) {
        std::cout << "exceptional weights p=" << p << ":";
        for (std::size_t i = 0; i < ks.size(); ++i) std::cout << (i ? ", " : " ") << ks[i];
        std::cout << '\n';
    }
    return s.failed > 0 ? kExitCompute : kExitOk;
}

std::vector<SlopeRecord> open_records(const std::string& dir, std::optional<long> p = std::nullopt) {
    if (!std::filesystem::exists(std::filesystem::path(dir) / "manifest.json")) {
        throw UsageError("no result store at '" + dir + "' (missing manifest.json)");
    }
    return ResultStore(dir).load_all(p);
}

int cmd_exceptions(const std::string& dir) {
    for (const auto& row : scan_exceptions(open_records(dir))) {
        std::cout << "p=" << row.p << " k=" << row.k << " exceptional: " << join_slopes(row.slopes) << '\n';
    }
    return kExitOk;
}

int cmd_trains(const std::string& dir, std::optional<long> prime) {
    const auto records = open_records(dir, prime);
    std::map<long, bool> primes;
    for (const auto& r : records) primes[r.p] = true;
    for (const auto& [p, unused] : primes) {
        for (const auto& cert : detect_trains(records, p)) {
            std::cout << "p=" << cert.p << " k=" << cert.weight << " slope " << cert.slope << ": "
                      << (cert.matched() ? "matched" : "unmatched") << '\n';
            for (const auto& step : cert.steps) {
                std::cout << "  k=" << step.weight << " expect " << step.expected_slope << " x2: ";
                if (step.found_mult) {
                    std::cout << "found x" << *step.found_mult;
                } else {
                    std::cout << "no record";
                }
                std::cout << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_theta(long p, int seed, long max_weight, const std::string& dir, bool full_cycle) {
    ThetaCycle cycle;
    try {
        cycle = theta_cycle(p, seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (full_cycle) {
        std::cout << "cycle:";
        for (std::size_t i = 0; i < cycle.filtrations.size(); ++i) std::cout << (i ? ", " : " ") << cycle.filtrations[i];
        std::cout << " -> " << cycle.next_after_last() << '\n';
    }
    const auto weights = predicted_exception_weights(p, seed, max_weight);
    std::cout << "weights:";
    for (std::size_t i = 0; i < weights.size(); ++i) std::cout << (i ? ", " : " ") << weights[i];
    std::cout << '\n' << "profile:";
    const auto profile = predicted_slope_profile(p, seed, max_weight);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        std::cout << (i ? ", " : " ") << profile[i].weight << ':' << profile[i].slope;
    }
    std::cout << '\n';
    if (dir.empty()) return kExitOk;

    const ThetaReport rep = crosscheck_theta(open_records(dir, p), p, seed);
    for (const auto& e : rep.entries) {
        std::cout << "k=" << e.weight << " predicted " << e.predicted_slope << " observed " << join_slopes(e.observed)
                  << ": " << to_string(e.status) << '\n';
    }
    if (!rep.unexplained.empty()) {
        std::cout << "exceptional but not in cycle:";
        for (int k : rep.unexplained) std::cout << ' ' << k;
        std::cout << '\n';
    }
    std::cout << "unverified cycle weights above " << rep.sweep_max << ": " << rep.unverified.size() << '\n';
    std::cout << (rep.full_match() ? "theta cross-check: full match" : "theta cross-check: MISMATCH") << '\n';
    return rep.full_match() ? kExitOk : kExitVerify;
}

int cmd_distribution(const std::string& dir, long p, int bins, const std::string& out, const std::string& weights) {
    check_prime(p);
    if (bins < 1) throw UsageError("--bins must be positive");
    auto records = open_records(dir, p);
    if (!weights.empty()) {
        const Range wr = parse_range(weights, "weight");
        std::erase_if(records, [&](const SlopeRecord& r) { return r.k < wr.lo || r.k > wr.hi; });
    }
    if (records.empty()) throw UsageError("no records for p=" + std::to_string(p) + " in " + dir);
    const Histogram h = aggregate_measures(records, bins);
    if (out == "-") {
        write_distribution_csv(std::cout, h);
    } else {
        std::ostringstream os;
        write_distribution_csv(os, h);
        write_file_atomic(out, os.str());
        std::cout << "wrote " << out << " (" << records.size() << " records, " << bins << " bins)\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& dir) {
    const auto items = golden::verify_records(open_records(dir));
    int pass = 0;
    int fail = 0;
    int missing = 0;
    for (const auto& it : items) {
        switch (it.outcome) {
            case golden::Outcome::pass: ++pass; break;
            case golden::Outcome::fail: ++fail; break;
            case golden::Outcome::missing: ++missing; break;
        }
        if (it.outcome == golden::Outcome::missing) continue;
        std::cout << golden::to_string(it.outcome) << "  " << it.name;
        if (!it.detail.empty()) std::cout << "  (" << it.detail << ')';
        std::cout << '\n';
    }
    std::cout << pass << " passed, " << fail << " failed, " << missing << " not covered by this store\n";
    if (fail > 0 || pass == 0) return kExitVerify;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slopelab: p-adic slopes of U on p-oldforms of level one"};
    app.require_subcommand(1);

    long prime = 0;
    int weight = 0;
    bool json = false;
    bool text = false;
    auto* compute = app.add_subcommand("compute", "Slope record for one (p, k)");
    compute->add_option("--prime", prime, "Prime p")->required();
    compute->add_option("--weight", weight, "Even weight k >= 12")->required();
    auto* json_flag = compute->add_flag("--json", json, "Print the record as JSON");
    compute->add_flag("--text", text, "Print the record as text (default)")->excludes(json_flag);

    std::string primes;
    std::string weights;
    std::string store_dir;
    unsigned workers = 1;
    bool quiet = false;
    auto* sweep = app.add_subcommand("sweep", "Compute and store records over prime and weight ranges");
    sweep->add_option("--primes", primes, "Prime range A..B")->required();
    sweep->add_option("--weights", weights, "Weight range C..D")->required();
    sweep->add_option("--out", store_dir, "Result store directory")->envname("SLOPELAB_STORE")->required();
    sweep->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--quiet", quiet, "No per-record progress");

    auto* exceptions = app.add_subcommand("exceptions", "List exceptional slopes in a store");
    exceptions->add_option("--store", store_dir, "Result store directory")->envname("SLOPELAB_STORE")->required();

    std::optional<long> train_prime;
    auto* trains = app.add_subcommand("trains", "Check fractional-slope trains below exceptional slopes");
    trains->add_option("--store", store_dir, "Result store directory")->envname("SLOPELAB_STORE")->required();
    trains->add_option("--prime", train_prime, "Restrict to one prime");

    int seed = 0;
    long max_weight = 0;
    bool full_cycle = false;
    auto* theta = app.add_subcommand("theta", "Theta-cycle filtrations and predicted exceptional weights");
    theta->add_option("--prime", prime, "Prime p >= 5")->required();
    theta->add_option("--seed", seed, "Seed weight 4 <= k <= p-1")->required();
    theta->add_option("--max", max_weight, "Largest weight to list")->required();
    theta->add_option("--store", store_dir, "Cross-check against this store");
    theta->add_flag("--cycle", full_cycle, "Print the whole cycle");

    int bins = 0;
    std::string csv_out;
    std::string dist_weights;
    auto* distribution = app.add_subcommand("distribution", "Binned average of the measures mu_k as CSV");
    distribution->add_option("--store", store_dir, "Result store directory")->envname("SLOPELAB_STORE")->required();
    distribution->add_option("--prime", prime, "Prime p")->required();
    distribution->add_option("--bins", bins, "Number of bins")->required();
    distribution->add_option("--out", csv_out, "CSV path, or - for stdout")->required();
    distribution->add_option("--weights", dist_weights, "Restrict to weights C..D");

    auto* verify = app.add_subcommand("verify", "Compare stored records against embedded reference data");
    verify->add_option("--store", store_dir, "Result store directory")->envname("SLOPELAB_STORE")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(prime, weight, json);
        if (*sweep) return cmd_sweep(primes, weights, store_dir, workers, quiet);
        if (*exceptions) return cmd_exceptions(store_dir);
        if (*trains) return cmd_trains(store_dir, train_prime);
        if (*theta) return cmd_theta(prime, seed, max_weight, store_dir, full_cycle);
        if (*distribution) return cmd_distribution(store_dir, prime, bins, csv_out, dist_weights);
        if (*verify) return cmd_verify(store_dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kExitCompute;
    }
    return kExitUsage;
}
