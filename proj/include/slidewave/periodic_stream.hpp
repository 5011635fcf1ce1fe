#pragma once

#include "slidewave/source.hpp"
#include "slidewave/types.hpp"
#include "slidewave/wave_state.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace slidewave {

/// gcd with gcd(0, a) = a. `steps`, when given, counts Euclid iterations.
std::int64_t gcd0(std::int64_t a, std::int64_t b, std::uint64_t* steps = nullptr);

/// Diagonals whose current slide has run for more than 4k rows.
///
/// All of them agree with x over the last 4k rows, so x is locally periodic
/// with `period()`, the gcd of the distances to the rightmost one. That lets
/// one comparison per row stand in for all of the non-rightmost diagonals.
class MatureSet {
public:
    /// With `deferred`, raising the rightmost diagonal only marks the period
    /// stale; refresh() recomputes it (once per row).
    explicit MatureSet(bool deferred = false)
        : deferred_(deferred)
    {
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<SlideEntry>& entries() const { return entries_; }

    /// Largest diagonal in the set. Only meaningful when non-empty.
    Diagonal right() const { return right_; }
    std::int64_t period() const { return period_; }
    bool stale() const { return stale_; }

    /// Make `d` the rightmost diagonal and recompute the period from scratch.
    void new_right_mature(Diagonal d);

    /// Add an entry; the locator bookkeeping is the caller's.
    void move_to_matures(const SlideEntry& e);

    /// Remove the entry on diagonal d and return it.
    SlideEntry take(Diagonal d);

    /// Remove everything except the rightmost entry, appending removed
    /// entries to `out`. The period becomes 0.
    void take_all_but_right(std::vector<SlideEntry>& out);

    /// Largest diagonal other than the rightmost one. Requires size() >= 2.
    Diagonal second_right() const;

    void refresh();

    std::uint64_t gcd_steps() const { return gcd_steps_; }
    std::uint64_t scan_steps() const { return scan_steps_; }
    std::uint64_t recomputes() const { return recomputes_; }

    /// gcd fold recomputed independently, for invariant checks.
    std::int64_t recompute_period() const;

private:
    bool deferred_;
    std::vector<SlideEntry> entries_;
    Diagonal right_ = 0;
    std::int64_t period_ = 0;
    bool stale_ = false;
    std::uint64_t gcd_steps_ = 0;
    std::uint64_t scan_steps_ = 0;
    std::uint64_t recomputes_ = 0;
};

struct PeriodicOptions {
    bool retain_frontier = false;
    /// Recompute the period at most once per row (bounds total work by O(kn)).
    bool kn_guard = false;
    /// Verify the periodicity window, the mature-set bookkeeping, and that
    /// list entries really matched since their start. Violations are counted.
    bool check_invariants = false;
    CandidateStore::Layout layout = CandidateStore::Layout::Ring;
    UpdateTrace trace;
    /// Called whenever an entry becomes mature, with the row.
    std::function<void(const SlideEntry&, Row)> on_mature;
};

struct PeriodicStats {
    std::uint64_t comparisons = 0;
    std::uint64_t gcd_steps = 0;
    std::uint64_t maturity_events = 0;
    std::uint64_t mature_scan_steps = 0;
    std::uint64_t period_recomputes = 0;
    std::uint64_t pops = 0;
    std::uint64_t updates = 0;
    std::uint64_t peak_live = 0;
    std::uint64_t peak_matures = 0;
    std::uint64_t premature_recycles = 0;
    std::uint64_t invariant_checks = 0;
    std::uint64_t invariant_violations = 0;
    /// Largest number of maturity events of a single diagonal.
    std::uint64_t max_maturity_per_diagonal = 0;
    ReaderStats x_reader;
    ReaderStats y_reader;

    std::uint64_t total_operations() const
    {
        return comparisons + gcd_steps + mature_scan_steps + pops + updates;
    }
};

struct PeriodicResult {
    BoundedDistance distance;
    FrontierTable frontier;
    PeriodicStats stats;
};

PeriodicResult stream_distance_periodic(ByteSource& x, ByteSource& y, int k, const PeriodicOptions& options = {});

} // namespace slidewave
