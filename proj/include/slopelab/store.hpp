#pragma once

// On-disk result store: one JSON file per (p, k) plus a manifest carrying
// the tool version, a SHA-256 per record, and sweep completion status.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopelab/slopes.hpp"

namespace slopelab {

std::string sha256_hex(std::string_view data);

/// Writes `data` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);
std::string read_file(const std::filesystem::path& path);

struct ManifestEntry {
    long p = 0;
    int k = 0;
    std::string file;
    std::string status;  // "ok" or "failed"
    std::string sha256;
    std::string error;
};

class ResultStore {
public:
    explicit ResultStore(std::filesystem::path root);

    static std::string record_filename(long p, int k);

    const std::filesystem::path& root() const { return root_; }

    /// True when the manifest lists (p,k) as ok under the current tool
    /// version and the file on disk still hashes to the recorded checksum.
    bool is_current(long p, int k) const;

    std::optional<SlopeRecord> load(long p, int k) const;
    /// All ok records, optionally restricted to one prime, sorted by (p, k).
    std::vector<SlopeRecord> load_all(std::optional<long> p = std::nullopt) const;

    void put(const SlopeRecord& record);
    void mark_failed(long p, int k, const std::string& error);
    /// Top-level status written into the manifest ("complete", "incomplete", "failed").
    void set_status(const std::string& status);

    std::vector<ManifestEntry> entries() const;
    std::string status() const;

private:
    void load_manifest();
    void save_manifest_locked() const;

    std::filesystem::path root_;
    mutable std::mutex mutex_;
    std::map<std::pair<long, int>, ManifestEntry> entries_;
    std::map<std::pair<long, int>, std::vector<std::string>> exceptional_;
    std::string status_ = "incomplete";
};

struct SweepOptions {
    long prime_lo = 2;
    long prime_hi = 2;
    int weight_lo = 12;
    int weight_hi = 12;
    unsigned workers = 1;
    /// Called after each job with (p, k, outcome); outcome is "computed", "cached" or "failed: ...".
    std::function<void(long, int, const std::string&)> progress;
};

struct SweepSummary {
    int computed = 0;
    int cached = 0;
    int failed = 0;
};

/// All (prime p, even k >= 12) pairs in the ranges, ordered by (p, k).
std::vector<std::pair<long, int>> sweep_jobs(const SweepOptions& opts);

/// Computes every job not already current in the store. Record contents
/// do not depend on the worker count.
SweepSummary run_sweep(ResultStore& store, const SweepOptions& opts);

}  // namespace slopelab
