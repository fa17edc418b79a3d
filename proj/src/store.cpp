#include "slopelab/store.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <openssl/evp.h>

#include "slopelab/primes.hpp"
#include "slopelab/record_io.hpp"

namespace slopelab {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4U]);
        out.push_back(hex[digest[i] & 0xFU]);
    }
    return out;
}

void write_file_atomic(const fs::path& path, std::string_view data) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ResultStore::ResultStore(fs::path root) : root_(std::move(root)) {
    fs::create_directories(root_);
    load_manifest();
}

std::string ResultStore::record_filename(long p, int k) {
    return "p" + std::to_string(p) + "_k" + std::to_string(k) + ".json";
}

void ResultStore::load_manifest() {
    const fs::path path = root_ / "manifest.json";
    if (!fs::exists(path)) return;
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw std::runtime_error("corrupt manifest " + path.string() + ": " + e.what());
    }
    // Entries written by another tool version are dropped; their records
    // will be recomputed and overwritten.
    if (j.value("tool_version", "") != kToolVersion) return;
    status_ = j.value("status", "incomplete");
    for (const auto& e : j.at("records")) {
        ManifestEntry m;
        m.p = e.at("p").get<long>();
        m.k = e.at("k").get<int>();
        m.file = e.at("file").get<std::string>();
        m.status = e.at("status").get<std::string>();
        m.sha256 = e.value("sha256", "");
        m.error = e.value("error", "");
        entries_[{m.p, m.k}] = std::move(m);
    }
    if (j.contains("summary") && j["summary"].contains("exceptional")) {
        for (const auto& [key, val] : j["summary"]["exceptional"].items()) {
            const long p = std::stol(key);
            for (const auto& row : val) exceptional_[{p, row.at("k").get<int>()}] = row.at("slopes").get<std::vector<std::string>>();
        }
    }
}

void ResultStore::save_manifest_locked() const {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["status"] = status_;
    ordered_json recs = ordered_json::array();
    int ok = 0;
    int failed = 0;
    for (const auto& [key, m] : entries_) {
        ordered_json e;
        e["p"] = m.p;
        e["k"] = m.k;
        e["file"] = m.file;
        e["status"] = m.status;
        if (m.status == "ok") {
            e["sha256"] = m.sha256;
            ++ok;
        } else {
            e["error"] = m.error;
            ++failed;
        }
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);

    // Exceptional weights per prime with their slopes.
    ordered_json summary;
    summary["ok"] = ok;
    summary["failed"] = failed;
    ordered_json exc = ordered_json::object();
    for (const auto& [key, slopes] : exceptional_) {
        ordered_json row;
        row["k"] = key.second;
        row["slopes"] = slopes;
        exc[std::to_string(key.first)].push_back(std::move(row));
    }
    summary["exceptional"] = std::move(exc);
    j["summary"] = std::move(summary);
    write_file_atomic(root_ / "manifest.json", j.dump(2) + "\n");
}

bool ResultStore::is_current(long p, int k) const {
    ManifestEntry m;
    {
        std::lock_guard lock(mutex_);
        const auto it = entries_.find({p, k});
        if (it == entries_.end() || it->second.status != "ok") return false;
        m = it->second;
    }
    const fs::path path = root_ / m.file;
    if (!fs::exists(path)) return false;
    const std::string text = read_file(path);
    return sha256_hex(text) == m.sha256 && record_tool_version(text) == kToolVersion;
}

std::optional<SlopeRecord> ResultStore::load(long p, int k) const {
    if (!is_current(p, k)) return std::nullopt;
    return parse_record(read_file(root_ / record_filename(p, k)));
}

std::vector<SlopeRecord> ResultStore::load_all(std::optional<long> p) const {
    std::vector<std::pair<long, int>> keys;
    {
        std::lock_guard lock(mutex_);
        for (const auto& [key, m] : entries_) {
            if (m.status == "ok" && (!p || key.first == *p)) keys.push_back(key);
        }
    }
    std::vector<SlopeRecord> out;
    for (const auto& [pp, k] : keys) {
        if (auto r = load(pp, k)) out.push_back(std::move(*r));
    }
    return out;
}

void ResultStore::put(const SlopeRecord& record) {
    const std::string text = serialize_record(record);
    const std::string file = record_filename(record.p, record.k);
    write_file_atomic(root_ / file, text);
    std::lock_guard lock(mutex_);
    entries_[{record.p, record.k}] = ManifestEntry{record.p, record.k, file, "ok", sha256_hex(text), ""};
    std::vector<std::string> exc;
    for (const auto& s : record.exceptional) {
        for (std::int64_t m = 0; m < s.mult; ++m) exc.push_back(s.slope.str());
    }
    if (exc.empty()) {
        exceptional_.erase({record.p, record.k});
    } else {
        exceptional_[{record.p, record.k}] = std::move(exc);
    }
    save_manifest_locked();
}

void ResultStore::mark_failed(long p, int k, const std::string& error) {
    std::lock_guard lock(mutex_);
    entries_[{p, k}] = ManifestEntry{p, k, record_filename(p, k), "failed", "", error};
    exceptional_.erase({p, k});
    save_manifest_locked();
}

void ResultStore::set_status(const std::string& status) {
    std::lock_guard lock(mutex_);
    status_ = status;
    save_manifest_locked();
}

std::vector<ManifestEntry> ResultStore::entries() const {
    std::lock_guard lock(mutex_);
    std::vector<ManifestEntry> out;
    for (const auto& [key, m] : entries_) out.push_back(m);
    return out;
}

std::string ResultStore::status() const {
    std::lock_guard lock(mutex_);
    return status_;
}

std::vector<std::pair<long, int>> sweep_jobs(const SweepOptions& opts) {
    std::vector<std::pair<long, int>> jobs;
    const int k_lo = std::max(opts.weight_lo, 12);
    for (long p : primes_between(opts.prime_lo, opts.prime_hi)) {
        for (int k = k_lo + (k_lo % 2); k <= opts.weight_hi; k += 2) jobs.emplace_back(p, k);
    }
    return jobs;
}

SweepSummary run_sweep(ResultStore& store, const SweepOptions& opts) {
    const auto jobs = sweep_jobs(opts);
    store.set_status("incomplete");
    std::atomic<std::size_t> next{0};
    std::atomic<int> computed{0};
    std::atomic<int> cached{0};
    std::atomic<int> failed{0};
    std::mutex progress_mutex;
    const auto report = [&](long p, int k, const std::string& what) {
        if (!opts.progress) return;
        std::lock_guard lock(progress_mutex);
        opts.progress(p, k, what);
    };

    const auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const auto [p, k] = jobs[i];
            if (store.is_current(p, k)) {
                ++cached;
                report(p, k, "cached");
                continue;
            }
            try {
                store.put(compute_record(p, k));
                ++computed;
                report(p, k, "computed");
            } catch (const std::exception& e) {
                store.mark_failed(p, k, e.what());
                ++failed;
                report(p, k, std::string("failed: ") + e.what());
            }
        }
    };

    const unsigned n = std::max(1U, opts.workers);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    store.set_status(failed > 0 ? "failed" : "complete");
    return {computed.load(), cached.load(), failed.load()};
}

}  // namespace slopelab
