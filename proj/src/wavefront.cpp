#include "slidewave/wavefront.hpp"

#include <stdexcept>

namespace slidewave {

namespace {

// Below this many matrix cells in the band a naive slide is cheaper than
// building a suffix array over the whole input.
constexpr Row kIndexedThreshold = Row{1} << 22;

} // namespace

RowWaveMachine::RowWaveMachine(std::string_view x, std::string_view y, int k, RowWaveOptions options)
    : x_(x)
    , y_(y)
    , band_{k, static_cast<Row>(x.size()), static_cast<Row>(y.size())}
    , options_(std::move(options))
    , state_(band_, options_.layout)
    , recorder_(band_, options_.retain_frontier)
{
    if (k < 0) {
        throw std::invalid_argument("row_wave_distance: k must be non-negative");
    }
    bool indexed = options_.slide == SlideMode::Indexed;
    if (options_.slide == SlideMode::Auto) {
        indexed = band_.n * (2 * static_cast<Row>(k) + 1) > kIndexedThreshold;
    }
    if (indexed) {
        index_.emplace(x_, y_);
    }
    if (options_.trace) {
        state_.set_trace(options_.trace);
    }
}

Row RowWaveMachine::slide(Diagonal d, Row i)
{
    ++stats_.slides;
    if (index_) {
        return indexed_slide(*index_, d, i);
    }
    return naive_slide(x_, y_, d, i, &stats_.comparisons);
}

void RowWaveMachine::push(const WaveState::Placement& p)
{
    lists_[static_cast<std::size_t>(p.list_row)].push_back(p.entry);
}

void RowWaveMachine::process_entry(const SlideEntry& entry, Row i)
{
    if (!state_.take(entry) || !state_.definite(entry.d, entry.h)) {
        return;
    }
    const Diagonal d = entry.d;
    const Row last = band_.last_row(d);
    const Row reach = entry.start >= last ? last : slide(d, entry.start);
    std::optional<std::uint8_t> next;
    if (reach + d < band_.m) {
        next = static_cast<std::uint8_t>(y_[static_cast<std::size_t>(reach + d)]);
    }
    recorder_.finalize(d, entry.h, reach, next);
    state_.spawn_successors(d, entry.h, reach, i, [&](const WaveState::Placement& p) { push(p); });
}

void RowWaveMachine::process_row(Row i)
{
    auto& list = lists_[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < list.size(); ++t) {
        const SlideEntry entry = list[t];
        process_entry(entry, i);
    }
    list.clear();
    list.shrink_to_fit();
}

RowWaveResult RowWaveMachine::run()
{
    RowWaveResult result;
    if (band_.feasible() || options_.retain_frontier) {
        lists_.assign(static_cast<std::size_t>(band_.n + 1), {});
        if (auto p = state_.update(0, 0, 0, 0)) {
            push(*p);
        }
        for (Row i = 0; i <= band_.n; ++i) {
            process_row(i);
        }
        result.distance = recorder_.distance();
    }
    const WaveStats& ws = state_.stats();
    stats_.updates = ws.updates;
    stats_.insertions = ws.insertions;
    stats_.pops = ws.pops;
    stats_.peak_live = ws.peak_live;
    result.stats = stats_;
    result.frontier = options_.retain_frontier ? recorder_.release() : FrontierTable{};
    return result;
}

RowWaveResult row_wave_distance(std::string_view x, std::string_view y, int k, RowWaveOptions options)
{
    RowWaveMachine machine(x, y, k, std::move(options));
    return machine.run();
}

} // namespace slidewave
