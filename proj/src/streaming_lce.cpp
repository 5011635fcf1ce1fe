#include "slidewave/streaming_lce.hpp"

#include <algorithm>
#include <stdexcept>

namespace slidewave {

BlockWindow block_window(int k, Row n, Row m, Row ordinal)
{
    BlockWindow w;
    w.ordinal = ordinal;
    w.stride = std::max<Row>(k, 1);
    w.first_row = ordinal * w.stride;
    w.x_begin = w.first_row;
    w.x_end = std::min(n, w.first_row + 3 * w.stride + 1);
    w.y_begin = w.first_row - k;
    w.y_end = std::max(w.y_begin, std::min(m, w.first_row + 2 * w.stride + 1));
    return w;
}

StreamLceResult stream_distance_lce(ByteSource& x, ByteSource& y, int k, const StreamLceOptions& options)
{
    if (k < 0) {
        throw std::invalid_argument("stream_distance_lce: k must be non-negative");
    }
    const Band band{k, x.size(), y.size()};
    StreamLceResult result;
    if (!band.feasible() && !options.retain_frontier) {
        return result;
    }

    StreamWindow xw(x);
    StreamWindow yw(y);
    WaveState state(band, options.layout);
    if (options.trace) {
        state.set_trace(options.trace);
    }
    FrontierRecorder recorder(band, options.retain_frontier);
    StreamLceStats& stats = result.stats;

    const Row s = std::max<Row>(k, 1);
    // lists[r] holds entries for global row js + r of the current block;
    // lists[s] collects slides that continue into the next block.
    std::vector<std::vector<SlideEntry>> lists(static_cast<std::size_t>(s + 1));
    Row js = 0;
    auto place = [&](const WaveState::Placement& p) {
        lists[static_cast<std::size_t>(p.list_row - js)].push_back(p.entry);
    };
    if (auto p = state.update(0, 0, 0, 0)) {
        place(*p);
    }

    std::vector<Symbol> xb;
    std::vector<Symbol> yb;
    for (Row j = 0; j * s <= band.n; ++j) {
        const BlockWindow w = block_window(k, band.n, band.m, j);
        js = w.first_row;
        xw.release_before(js);
        yw.release_before(std::max<Row>(0, w.y_begin));

        xb.clear();
        for (Row p = w.x_begin; p < w.x_end; ++p) {
            xb.push_back(xw.at(p));
        }
        yb.clear();
        for (Row p = w.y_begin; p < w.y_end; ++p) {
            yb.push_back(p < 0 ? kPadSymbol : static_cast<Symbol>(yw.at(p)));
        }
        const BlockIndex index(xb, yb);
        ++stats.blocks;
        stats.index_symbols += index.text_size();

        for (Row r = 0; r < s && js + r <= band.n; ++r) {
            const Row row = js + r;
            auto& list = lists[static_cast<std::size_t>(r)];
            for (std::size_t t = 0; t < list.size(); ++t) {
                const SlideEntry e = list[t];
                if (!state.take(e) || !state.definite(e.d, e.h)) {
                    continue;
                }
                const Diagonal d = e.d;
                const Row last = band.last_row(d);
                Row reach = last;
                if (e.start < last) {
                    const Row local = e.start - js;
                    if (local < 0 || local >= s) {
                        throw std::logic_error("stream_distance_lce: slide start outside the drained rows");
                    }
                    ++stats.queries;
                    const Row q = std::min(js + indexed_slide(index, d + k, local), last);
                    if (q >= js + s) {
                        SlideEntry parked = e;
                        parked.start = js + s;
                        lists[static_cast<std::size_t>(s)].push_back(state.relocate(parked, js + s));
                        ++stats.parks;
                        continue;
                    }
                    reach = q;
                }
                std::optional<std::uint8_t> next;
                if (reach + d < band.m) {
                    const Row yp = reach + d;
                    next = static_cast<std::uint8_t>(yp >= w.y_begin && yp < w.y_end
                                                          ? yb[static_cast<std::size_t>(yp - w.y_begin)]
                                                          : yw.at(yp));
                }
                recorder.finalize(d, e.h, reach, next);
                state.spawn_successors(d, e.h, reach, row, place);
            }
            list.clear();
        }
        std::swap(lists[0], lists[static_cast<std::size_t>(s)]);
        lists[static_cast<std::size_t>(s)].clear();
    }

    result.distance = recorder.distance();
    if (options.retain_frontier) {
        result.frontier = recorder.release();
    }
    const WaveStats& ws = state.stats();
    stats.pops = ws.pops;
    stats.updates = ws.updates;
    stats.peak_live = ws.peak_live;
    stats.premature_recycles = state.store().premature_recycles();
    stats.x_reader = xw.stats();
    stats.y_reader = yw.stats();
    return result;
}

} // namespace slidewave
