#include "repstab/lr.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/sym_laurent.hpp"

namespace repstab {

namespace {

// Fills the skew shape lam/mu in reading order (rows top to bottom, within a
// row right to left) so the ballot condition can be enforced incrementally.
struct LrCounter {
    std::vector<int> lam, mu, nu;
    std::vector<std::pair<int, int>> boxes;      // (row, col) 0-indexed
    std::vector<std::vector<int>> fill;          // fill[row][col], 0 = empty
    std::vector<int> cnt;                        // per-value usage
    long long total = 0;

    long long run(const Partition& plam, const Partition& pmu, const Partition& pnu) {
        if (plam.size() != pmu.size() + pnu.size()) return 0;
        if (!plam.contains(pmu)) return 0;
        lam.assign(plam.parts().begin(), plam.parts().end());
        mu.assign(pmu.parts().begin(), pmu.parts().end());
        nu.assign(pnu.parts().begin(), pnu.parts().end());
        for (size_t i = 0; i < lam.size(); ++i) {
            const int lo = i < mu.size() ? mu[i] : 0;
            for (int j = lam[i] - 1; j >= lo; --j) boxes.emplace_back(static_cast<int>(i), j);
        }
        if (boxes.empty()) return pnu.empty() ? 1 : 0;
        fill.resize(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) fill[i].assign(static_cast<size_t>(lam[i]), 0);
        cnt.assign(nu.size() + 1, 0);
        rec(0);
        return total;
    }

    bool admissible(int row, int col, int v) const {
        // rows weakly increase left to right
        if (col + 1 < lam[static_cast<size_t>(row)] &&
            fill[static_cast<size_t>(row)][static_cast<size_t>(col + 1)] != 0 &&
            v > fill[static_cast<size_t>(row)][static_cast<size_t>(col + 1)])
            return false;
        // columns strictly increase downward (only within the skew shape)
        if (row > 0 && col < lam[static_cast<size_t>(row - 1)]) {
            const int above_lo = static_cast<size_t>(row - 1) < mu.size() ? mu[row - 1] : 0;
            if (col >= above_lo) {
                const int u = fill[static_cast<size_t>(row - 1)][static_cast<size_t>(col)];
                if (u != 0 && v <= u) return false;
            }
        }
        return true;
    }

    void rec(size_t b) {
        if (b == boxes.size()) {
            ++total;
            return;
        }
        auto [row, col] = boxes[b];
        for (int v = 1; v <= static_cast<int>(nu.size()); ++v) {
            if (cnt[static_cast<size_t>(v)] >= nu[static_cast<size_t>(v - 1)]) continue;
            // ballot: every prefix of the reading word has #v <= #(v-1)
            if (v > 1 && cnt[static_cast<size_t>(v)] >= cnt[static_cast<size_t>(v - 1)]) continue;
            if (!admissible(row, col, v)) continue;
            fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
            cnt[static_cast<size_t>(v)]++;
            rec(b + 1);
            cnt[static_cast<size_t>(v)]--;
            fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
        }
    }
};

std::shared_mutex memo_mutex;
std::map<LrKey, long long> memo;
std::atomic<LrCache*> attached_cache{nullptr};

}  // namespace

long long lr_coefficient_uncached(const Partition& lam, const Partition& mu, const Partition& nu) {
    LrCounter counter;
    return counter.run(lam, mu, nu);
}

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!lam.contains(mu) || !lam.contains(nu)) return 0;
    LrKey key{lam, mu, nu};
    LrCache* cache = attached_cache.load();
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) {
            const long long v = it->second;
            lock.unlock();
            if (cache) cache->record(key, v);  // write-through even on memo hits
            return v;
        }
    }
    if (cache) {
        if (auto v = cache->lookup(key)) {
            std::unique_lock lock(memo_mutex);
            memo.emplace(key, *v);
            return *v;
        }
    }
    const long long value = lr_coefficient_uncached(lam, mu, nu);
    {
        std::unique_lock lock(memo_mutex);
        memo.emplace(key, value);
    }
    if (cache) cache->record(key, value);
    return value;
}

const std::map<Partition, long long>& schur_product_expand(const Partition& mu, const Partition& nu) {
    static std::mutex mx;
    static std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> table;
    std::lock_guard lock(mx);
    auto key = std::make_pair(mu, nu);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    std::map<Partition, long long> out;
    for (const auto& lam : partitions_of(mu.size() + nu.size())) {
        if (!lam.contains(mu) || !lam.contains(nu)) continue;
        if (lam.length() > mu.length() + nu.length()) continue;
        const long long c = lr_coefficient(lam, mu, nu);
        if (c > 0) out.emplace(lam, c);
    }
    return table.emplace(std::move(key), std::move(out)).first->second;
}

void attach_lr_cache(LrCache* cache) { attached_cache.store(cache); }

// ---- file layer ----

LrCache::~LrCache() {
    try {
        flush();
    } catch (...) {
        // destructor must not throw; a failed flush only loses the cache
    }
}

void LrCache::ensure_loaded() const {
    if (loaded_) return;
    loaded_ = true;
    std::ifstream in(file_);
    if (!in) return;  // no file yet
    std::string line;
    if (!std::getline(in, line) || line != version_tag) return;  // stale or foreign: ignore
    while (std::getline(in, line)) {
        const size_t eq = line.rfind('=');
        if (eq == std::string::npos) continue;
        const std::string lhs = line.substr(0, eq);
        const size_t b1 = lhs.find('|');
        const size_t b2 = lhs.find('|', b1 + 1);
        if (b1 == std::string::npos || b2 == std::string::npos) continue;
        try {
            LrKey key{parse_partition(lhs.substr(0, b1)),
                      parse_partition(lhs.substr(b1 + 1, b2 - b1 - 1)),
                      parse_partition(lhs.substr(b2 + 1))};
            entries_.emplace(std::move(key), std::stoll(line.substr(eq + 1)));
        } catch (const std::exception&) {
            continue;  // skip malformed records
        }
    }
}

std::optional<long long> LrCache::lookup(const LrKey& key) const {
    {
        std::shared_lock lock(mutex_);
        if (loaded_) {
            auto it = entries_.find(key);
            if (it == entries_.end()) return std::nullopt;
            return it->second;
        }
    }
    std::unique_lock lock(mutex_);
    ensure_loaded();
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void LrCache::record(const LrKey& key, long long value) {
    std::unique_lock lock(mutex_);
    ensure_loaded();
    auto [it, inserted] = entries_.emplace(key, value);
    if (inserted) dirty_ = true;
}

void LrCache::flush() {
    std::unique_lock lock(mutex_);
    if (!dirty_) return;
    const auto tmp = file_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw EngineError("CacheIo", "cannot write " + tmp);
        out << version_tag << "\n";
        for (const auto& [key, value] : entries_)
            out << format_partition(key.lam) << '|' << format_partition(key.mu) << '|'
                << format_partition(key.nu) << '=' << value << "\n";
    }
    std::filesystem::rename(tmp, file_);
    dirty_ = false;
}

size_t LrCache::entry_count() const {
    std::unique_lock lock(mutex_);
    ensure_loaded();
    return entries_.size();
}

std::map<LrKey, long long> LrCache::snapshot() const {
    std::unique_lock lock(mutex_);
    ensure_loaded();
    return entries_;
}

}  // namespace repstab
