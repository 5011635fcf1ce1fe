#pragma once

#include "slidewave/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace slidewave {

/// A pending slide for (d, h) that should start at row `start`.
struct SlideEntry {
    Diagonal d = 0;
    Level h = 0;
    Row start = 0;
    std::uint64_t stamp = 0;
};

/// Per-(d, h) candidate bookkeeping: the counter C(d, h) and the locator
/// D(d, h) of the unique live list occurrence.
struct CandidateSlot {
    Level h = -1;
    int count = 0;
    bool live = false;
    Row row = 0;
    Row start = 0;
    std::uint64_t stamp = 0;
};

/// Storage for C and D. Dense keeps all (2k+1) x (k+1) slots; Ring keeps four
/// levels per diagonal, which suffices because a diagonal whose highest
/// finalized level is h only sees activity on levels h+1 and h+2.
class CandidateStore {
public:
    enum class Layout { Dense, Ring };

    CandidateStore(int k, Layout layout);

    CandidateSlot& acquire(Diagonal d, Level h);
    CandidateSlot* find(Diagonal d, Level h);
    const CandidateSlot* find(Diagonal d, Level h) const;

    Layout layout() const { return layout_; }
    std::size_t slot_count() const { return slots_.size(); }

    /// Ring slots that were recycled while still holding an unfinished
    /// level. Always zero unless the four-level window argument is broken.
    std::uint64_t premature_recycles() const { return premature_recycles_; }

    /// Set the definiteness cap used by the recycle check.
    void set_caps(std::function<int(Diagonal, Level)> caps) { caps_ = std::move(caps); }

private:
    std::size_t index(Diagonal d, Level h) const;

    int k_;
    Layout layout_;
    std::vector<CandidateSlot> slots_;
    std::function<int(Diagonal, Level)> caps_;
    std::uint64_t premature_recycles_ = 0;
};

struct WaveStats {
    std::uint64_t updates = 0;
    std::uint64_t insertions = 0;
    std::uint64_t pops = 0;
    std::uint64_t definite = 0;
    std::uint64_t live = 0;
    std::uint64_t peak_live = 0;
};

using UpdateTrace = std::function<void(Diagonal, Row, Level)>;

/// Row lists, counters, and locators shared by the three wave algorithms.
///
/// The state does not own the lists themselves (each algorithm stores them
/// differently); update() reports where a new occurrence has to be appended.
class WaveState {
public:
    WaveState(const Band& band, CandidateStore::Layout layout);

    const Band& band() const { return band_; }

    /// The Update procedure. `current` is the row being drained; clamped
    /// candidates that land behind it go on the current list. Returns the
    /// new occurrence and the list row to append it to, or nothing when the
    /// existing occurrence already sits on a row at least as high.
    struct Placement {
        SlideEntry entry;
        Row list_row;
    };
    std::optional<Placement> update(Diagonal d, Row row, Level h, Row current);

    /// Pop validation: true when `e` is the live occurrence of its (d, h).
    /// The occurrence is removed (locator nulled).
    bool take(const SlideEntry& e);

    bool definite(Diagonal d, Level h) const;

    /// Re-register a taken entry as live on another list row (parking,
    /// per-row advance, or the mature set). Returns the entry to store.
    SlideEntry relocate(const SlideEntry& e, Row list_row);

    /// Successor candidates of a cell finalized at `reach`, in the order
    /// same diagonal, d+1, d-1. Respects the band and h < k.
    template <class Push>
    void spawn_successors(Diagonal d, Level h, Row reach, Row current, Push&& push)
    {
        if (h >= band_.k) {
            return;
        }
        if (auto p = update(d, reach + 1, h + 1, current)) {
            push(*p);
        }
        if (d < band_.max_diagonal()) {
            if (auto p = update(d + 1, reach, h + 1, current)) {
                push(*p);
            }
        }
        if (d > band_.min_diagonal()) {
            if (auto p = update(d - 1, reach + 1, h + 1, current)) {
                push(*p);
            }
        }
    }

    const CandidateStore& store() const { return store_; }
    const WaveStats& stats() const { return stats_; }
    WaveStats& stats() { return stats_; }

    void set_trace(UpdateTrace trace) { trace_ = std::move(trace); }

private:
    void add_live();

    Band band_;
    CandidateStore store_;
    WaveStats stats_;
    std::uint64_t next_stamp_ = 1;
    UpdateTrace trace_;
};

/// Collects finalized frontier cells. Always tracks the distance (first level
/// at which the terminal diagonal reaches row n) and the last reach per
/// diagonal; keeps a full FrontierTable only when asked to.
class FrontierRecorder {
public:
    FrontierRecorder(const Band& band, bool retain);

    /// Cell (d, h) finalized at `reach`. `next_y` is y[reach + d] when it exists.
    void finalize(Diagonal d, Level h, Row reach, std::optional<std::uint8_t> next_y);

    BoundedDistance distance() const;
    bool retains() const { return retain_; }
    FrontierTable release() { return std::move(table_); }

    /// Largest number of cells held at once (O(k) without retention).
    std::size_t resident_cells() const;

private:
    Band band_;
    bool retain_;
    FrontierTable table_;
    std::vector<Row> last_reach_;
    std::vector<Level> last_level_;
    std::optional<int> distance_;
};

} // namespace slidewave
