#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "repstab/partition.hpp"

namespace repstab {

/// Ordered triple; (mu, nu) is deliberately not canonicalized, the symmetry
/// c^lam_{mu nu} = c^lam_{nu mu} is a property under test.
struct LrKey {
    Partition lam;
    Partition mu;
    Partition nu;
    friend auto operator<=>(const LrKey&, const LrKey&) = default;
};

/// Number of Littlewood-Richardson skew tableaux of shape lam/mu and content
/// nu; 0 on size mismatch or when mu is not contained in lam. Memoized.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// The raw backtracking enumeration, bypassing every cache layer.
long long lr_coefficient_uncached(const Partition& lam, const Partition& mu, const Partition& nu);

/// s_mu * s_nu = sum over lam of c^lam_{mu nu} s_lam; only nonzero entries.
const std::map<Partition, long long>& schur_product_expand(const Partition& mu, const Partition& nu);

/// File-backed coefficient cache, write-through and optional. One record per
/// line: "lam|mu|nu=c" in partition text syntax, after a version-tag header.
/// Concurrent reads, serialized writes; rewritten atomically on flush.
class LrCache {
public:
    explicit LrCache(std::filesystem::path file) : file_(std::move(file)) {}
    ~LrCache();

    std::optional<long long> lookup(const LrKey& key) const;
    void record(const LrKey& key, long long value);
    void flush();  // atomic rewrite: temp file + rename
    size_t entry_count() const;
    std::map<LrKey, long long> snapshot() const;

    static constexpr std::string_view version_tag = "lrcache-v1";

private:
    void ensure_loaded() const;

    std::filesystem::path file_;
    mutable std::shared_mutex mutex_;
    mutable bool loaded_ = false;
    mutable bool dirty_ = false;
    mutable std::map<LrKey, long long> entries_;
};

/// Routes lr_coefficient's write-through misses into `cache` (pass nullptr to
/// detach). Single-writer contract: attach before spawning readers.
void attach_lr_cache(LrCache* cache);

}  // namespace repstab
