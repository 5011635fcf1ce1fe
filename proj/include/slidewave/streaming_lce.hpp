#pragma once

#include "slidewave/lce.hpp"
#include "slidewave/source.hpp"
#include "slidewave/types.hpp"
#include "slidewave/wave_state.hpp"

#include <vector>

namespace slidewave {

struct StreamLceOptions {
    bool retain_frontier = false;
    CandidateStore::Layout layout = CandidateStore::Layout::Ring;
    UpdateTrace trace;
};

struct StreamLceStats {
    std::uint64_t blocks = 0;
    std::uint64_t index_symbols = 0; ///< total text length over all block indexes
    std::uint64_t queries = 0;
    std::uint64_t parks = 0;
    std::uint64_t pops = 0;
    std::uint64_t updates = 0;
    std::uint64_t peak_live = 0;
    std::uint64_t premature_recycles = 0;
    ReaderStats x_reader;
    ReaderStats y_reader;

    /// Work done outside index construction.
    std::uint64_t non_build_operations() const { return queries + parks + pops + updates; }
};

struct StreamLceResult {
    BoundedDistance distance;
    FrontierTable frontier;
    StreamLceStats stats;
};

/// Geometry of block j with stride s = max(k, 1): rows [js, js+s) are
/// drained, x' covers x[js, js+3s+1) and y' covers y[js-k, js+2s+1).
struct BlockWindow {
    Row ordinal = 0;
    Row first_row = 0;
    Row stride = 1;
    Row x_begin = 0;
    Row x_end = 0;
    Row y_begin = 0; ///< may be negative in the first block (padded)
    Row y_end = 0;
};

BlockWindow block_window(int k, Row n, Row m, Row ordinal);

StreamLceResult stream_distance_lce(ByteSource& x, ByteSource& y, int k, const StreamLceOptions& options = {});

} // namespace slidewave
