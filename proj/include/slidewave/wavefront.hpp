#pragma once

#include "slidewave/lce.hpp"
#include "slidewave/types.hpp"
#include "slidewave/wave_state.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace slidewave {

enum class SlideMode {
    Auto,    ///< Indexed for large inputs, naive otherwise.
    Naive,   ///< Character-by-character.
    Indexed, ///< One LCE query against an index over the whole input (not streaming).
};

struct RowWaveOptions {
    SlideMode slide = SlideMode::Auto;
    bool retain_frontier = true;
    CandidateStore::Layout layout = CandidateStore::Layout::Dense;
    /// Called for every Update, with the clamped candidate row.
    UpdateTrace trace;
};

struct RowWaveStats {
    std::uint64_t slides = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t updates = 0;
    std::uint64_t insertions = 0;
    std::uint64_t pops = 0;
    std::uint64_t peak_live = 0;
};

struct RowWaveResult {
    BoundedDistance distance;
    FrontierTable frontier;
    RowWaveStats stats;
};

/// Row-ordered wave computation over fully materialized inputs.
///
/// One list per row 0..n, drained in row order. An entry whose counter has
/// reached its cap is slid once, recorded, and spawns its three successors;
/// an entry that is not definite yet is dropped, because the last Update for
/// its cell will put it back on a row that has not been drained.
class RowWaveMachine {
public:
    RowWaveMachine(std::string_view x, std::string_view y, int k, RowWaveOptions options = {});

    /// Handle one entry popped from the list of row i.
    void process_entry(const SlideEntry& entry, Row i);

    /// Drain the list of row i, including entries appended while draining it.
    void process_row(Row i);

    /// Seed with Update(0, 0, 0) and drain every row.
    RowWaveResult run();

    const WaveState& state() const { return state_; }

private:
    Row slide(Diagonal d, Row i);
    void push(const WaveState::Placement& p);

    std::string_view x_;
    std::string_view y_;
    Band band_;
    RowWaveOptions options_;
    WaveState state_;
    FrontierRecorder recorder_;
    std::vector<std::vector<SlideEntry>> lists_;
    std::optional<BlockIndex> index_;
    RowWaveStats stats_;
};

RowWaveResult row_wave_distance(std::string_view x, std::string_view y, int k, RowWaveOptions options = {});

} // namespace slidewave
