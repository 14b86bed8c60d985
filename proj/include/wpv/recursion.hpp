// The volume recursion. For a stable (g,n) other than the base cases
// (0,3) and (1,1), the polynomial
//
//   P = d(2 b_1 V_{g,n})/d b_1
//     = sum_{i=2..n} A_i  +  B  +  sum_{splittings s} C_s
//
// is assembled from lower volumes through the closed-form kernels, and
// V_{g,n} = halve_integrate(P, slot 1).
#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "wpv/exactalg.hpp"

namespace wpv {

/// One ordered term ((g1,I1),(g2,I2)) of the separating sum. I1 and I2 are
/// sorted, disjoint, and cover {2,...,n}.
struct StableSplitting {
    int g1;
    std::vector<int> I1;
    int g2;
    std::vector<int> I2;

    bool operator==(const StableSplitting&) const = default;
};

/// Every ordered stable splitting of (g,n), sorted by (g1, I1).
std::vector<StableSplitting> stable_splittings(int g, int n);

/// Computed volumes keyed by (g,n). Safe for concurrent use: lookups take a
/// shared lock, and inserting an already present key keeps the first value
/// (recomputation yields an identical polynomial).
class RecursionCache {
public:
    using Entry = std::shared_ptr<const VolumePoly>;

    RecursionCache() = default;
    RecursionCache(const RecursionCache&) = delete;
    RecursionCache& operator=(const RecursionCache&) = delete;

    Entry find(int g, int n) const;
    Entry insert(VolumePoly v);

    /// Number of volumes produced by the recursion engine through this cache.
    std::size_t computed_count() const { return computed_.load(); }
    void note_computed() { ++computed_; }

    /// True once anything was inserted since construction or the last
    /// load/save.
    bool dirty() const { return dirty_.load(); }

    std::vector<Entry> entries() const;
    std::size_t size() const;
    void clear();

    /// Replaces the contents with the file's volumes. Every entry must pass
    /// check_volume_invariants; otherwise Error is thrown and the cache is
    /// left unchanged.
    void load(const std::filesystem::path& path);

    /// Writes to a temporary sibling and renames it over `path`.
    void save(const std::filesystem::path& path);

    static constexpr int kFormatVersion = 1;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, Entry> entries_;
    std::atomic<std::size_t> computed_{0};
    std::atomic<bool> dirty_{false};
};

GradedPoly a_term(int g, int n, int i, RecursionCache& cache);
GradedPoly b_term(int g, int n, RecursionCache& cache);
GradedPoly c_term(int g, int n, const StableSplitting& s, RecursionCache& cache);

/// P = d(2 b_1 V_{g,n})/d b_1 assembled from the three groups of terms.
GradedPoly recursion_rhs(int g, int n, RecursionCache& cache);

/// V_{g,n}: cached, or computed, checked and cached.
RecursionCache::Entry volume(int g, int n, RecursionCache& cache);

/// V_{g,n} with b_i := lengths[i-1] substituted exactly; a polynomial in pi^2.
GradedPoly volume_at(int g, int n, std::span<const Rational> lengths, RecursionCache& cache);

}  // namespace wpv
