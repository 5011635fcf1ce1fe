#include "slidewave/periodic_stream.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace slidewave {

std::int64_t gcd0(std::int64_t a, std::int64_t b, std::uint64_t* steps)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
        if (steps != nullptr) {
            ++*steps;
        }
    }
    return a;
}

// ---------------------------------------------------------------------------

void MatureSet::new_right_mature(Diagonal d)
{
    right_ = d;
    period_ = 0;
    stale_ = false;
    ++recomputes_;
    for (const SlideEntry& e : entries_) {
        ++scan_steps_;
        if (e.d != d) {
            period_ = gcd0(period_, d - e.d, &gcd_steps_);
        }
    }
}

void MatureSet::move_to_matures(const SlideEntry& e)
{
    entries_.push_back(e);
    if (entries_.size() == 1) {
        right_ = e.d;
        period_ = 0;
        stale_ = false;
        return;
    }
    if (e.d > right_) {
        if (deferred_) {
            right_ = e.d;
            stale_ = true;
        } else {
            new_right_mature(e.d);
        }
        return;
    }
    if (!stale_) {
        period_ = gcd0(period_, right_ - e.d, &gcd_steps_);
    }
}

SlideEntry MatureSet::take(Diagonal d)
{
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        ++scan_steps_;
        if (entries_[t].d == d) {
            const SlideEntry e = entries_[t];
            entries_[t] = entries_.back();
            entries_.pop_back();
            if (entries_.size() <= 1) {
                period_ = 0;
                stale_ = false;
                if (entries_.size() == 1) {
                    right_ = entries_.front().d;
                }
            }
            return e;
        }
    }
    throw std::logic_error("MatureSet::take: diagonal not present");
}

void MatureSet::take_all_but_right(std::vector<SlideEntry>& out)
{
    std::size_t kept = 0;
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        ++scan_steps_;
        if (entries_[t].d == right_) {
            entries_[kept++] = entries_[t];
        } else {
            out.push_back(entries_[t]);
        }
    }
    entries_.resize(kept);
    period_ = 0;
    stale_ = false;
}

Diagonal MatureSet::second_right() const
{
    if (entries_.size() < 2) {
        throw std::logic_error("MatureSet::second_right: fewer than two entries");
    }
    bool found = false;
    Diagonal best = 0;
    for (const SlideEntry& e : entries_) {
        if (e.d != right_ && (!found || e.d > best)) {
            best = e.d;
            found = true;
        }
    }
    return best;
}

void MatureSet::refresh()
{
    if (stale_) {
        new_right_mature(right_);
    }
}

std::int64_t MatureSet::recompute_period() const
{
    std::int64_t p = 0;
    for (const SlideEntry& e : entries_) {
        p = gcd0(p, right_ - e.d);
    }
    return p;
}

// ---------------------------------------------------------------------------

namespace {

class PeriodicStreamer {
public:
    PeriodicStreamer(ByteSource& x, ByteSource& y, const Band& band, const PeriodicOptions& options)
        : band_(band)
        , options_(options)
        , xw_(x)
        , yw_(y)
        , state_(band, options.layout)
        , recorder_(band, options.retain_frontier)
        , matures_(options.kn_guard)
        , maturity_by_diagonal_(static_cast<std::size_t>(2 * band.k + 1), 0)
    {
        if (options_.trace) {
            state_.set_trace(options_.trace);
        }
    }

    PeriodicResult run()
    {
        const Row k = band_.k;
        if (auto p = state_.update(0, 0, 0, 0)) {
            place(*p, 0);
        }
        for (Row i = 0; i <= band_.n; ++i) {
            xw_.release_before(i - 4 * k - 2);
            yw_.release_before(i - (options_.check_invariants ? 5 * k + 2 : k));
            if (options_.check_invariants) {
                check_matures(i);
            }
            handle_matures(i);
            drain(i);
            if (matures_.stale()) {
                matures_.refresh();
            }
            stats_.peak_matures = std::max<std::uint64_t>(stats_.peak_matures, matures_.size());
            cur_.clear();
            std::swap(cur_, next_);
        }
        if (!matures_.empty() || !cur_.empty()) {
            throw std::logic_error("stream_distance_periodic: entries left after the last row");
        }

        PeriodicResult result;
        result.distance = recorder_.distance();
        if (options_.retain_frontier) {
            result.frontier = recorder_.release();
        }
        const WaveStats& ws = state_.stats();
        stats_.pops = ws.pops;
        stats_.updates = ws.updates;
        stats_.peak_live = ws.peak_live;
        stats_.premature_recycles = state_.store().premature_recycles();
        stats_.gcd_steps = matures_.gcd_steps();
        stats_.mature_scan_steps = matures_.scan_steps();
        stats_.period_recomputes = matures_.recomputes();
        stats_.max_maturity_per_diagonal =
            *std::max_element(maturity_by_diagonal_.begin(), maturity_by_diagonal_.end());
        stats_.x_reader = xw_.stats();
        stats_.y_reader = yw_.stats();
        result.stats = stats_;
        return result;
    }

private:
    // x[i] against y[i+d]; running off the end of the diagonal is a mismatch.
    bool matches(Diagonal d, Row i)
    {
        if (i >= band_.last_row(d)) {
            return false;
        }
        ++stats_.comparisons;
        return xw_.at(i) == yw_.at(i + d);
    }

    void place(const WaveState::Placement& p, Row i)
    {
        if (p.list_row == i) {
            cur_.push_back(p.entry);
        } else if (p.list_row == i + 1) {
            next_.push_back(p.entry);
        } else {
            throw std::logic_error("stream_distance_periodic: update outside rows i, i+1");
        }
    }

    void migrate(const SlideEntry& e, Row i)
    {
        state_.take(e);
        if (options_.check_invariants && !state_.definite(e.d, e.h)) {
            ++stats_.invariant_violations;
        }
        cur_.push_back(state_.relocate(e, i));
    }

    void handle_matures(Row i)
    {
        if (matures_.empty()) {
            return;
        }
        if (matures_.size() == 1) {
            if (!matches(matures_.right(), i)) {
                migrate(matures_.take(matures_.right()), i);
            }
            return;
        }
        const std::int64_t p = matures_.period();
        bool continues = false;
        if (i < band_.n && p >= 1) {
            ++stats_.comparisons;
            continues = xw_.at(i) == xw_.at(i - p);
        }
        if (continues) {
            // Every non-rightmost diagonal matches x[i] here; only the
            // rightmost one can fall out.
            if (!matches(matures_.right(), i)) {
                const Diagonal next_right = matures_.second_right();
                const SlideEntry e = matures_.take(matures_.right());
                matures_.new_right_mature(next_right);
                migrate(e, i);
            }
            return;
        }
        // The period breaks: every non-rightmost diagonal mismatches.
        scratch_.clear();
        matures_.take_all_but_right(scratch_);
        for (const SlideEntry& e : scratch_) {
            migrate(e, i);
        }
        if (!matches(matures_.right(), i)) {
            migrate(matures_.take(matures_.right()), i);
        }
    }

    void finalize(const SlideEntry& e, Row reach, Row i)
    {
        std::optional<std::uint8_t> next;
        if (reach + e.d < band_.m) {
            next = yw_.at(reach + e.d);
        }
        recorder_.finalize(e.d, e.h, reach, next);
        state_.spawn_successors(e.d, e.h, reach, i, [&](const WaveState::Placement& p) { place(p, i); });
    }

    void drain(Row i)
    {
        const Row window = 4 * static_cast<Row>(band_.k);
        for (std::size_t t = 0; t < cur_.size(); ++t) {
            const SlideEntry e = cur_[t];
            if (!state_.take(e) || !state_.definite(e.d, e.h)) {
                continue;
            }
            const Row last = band_.last_row(e.d);
            if (i >= last) {
                check_matched_since_start(e, last);
                finalize(e, last, i);
                continue;
            }
            if (!matches(e.d, i)) {
                check_matched_since_start(e, i);
                finalize(e, i, i);
            } else if (i - e.start > window) {
                check_matched_since_start(e, i + 1);
                const SlideEntry mature = state_.relocate(e, i + 1);
                matures_.move_to_matures(mature);
                ++stats_.maturity_events;
                ++maturity_by_diagonal_[static_cast<std::size_t>(e.d + band_.k)];
                if (options_.on_mature) {
                    options_.on_mature(mature, i);
                }
            } else {
                next_.push_back(state_.relocate(e, i + 1));
            }
        }
    }

    void check_matured_window(Row i)
    {
        const std::int64_t p = matures_.period();
        const Row k = band_.k;
        if (p < 1 || p > 2 * k) {
            ++stats_.invariant_violations;
            return;
        }
        for (Row t = std::max<Row>(0, i - 4 * k); t + p < i; ++t) {
            if (xw_.at(t) != xw_.at(t + p)) {
                ++stats_.invariant_violations;
                return;
            }
        }
    }

    void check_matures(Row i)
    {
        if (matures_.size() < 2) {
            return;
        }
        ++stats_.invariant_checks;
        Diagonal top = matures_.entries().front().d;
        for (const SlideEntry& e : matures_.entries()) {
            top = std::max(top, e.d);
        }
        if (top != matures_.right() || matures_.period() != matures_.recompute_period()) {
            ++stats_.invariant_violations;
        }
        if (i < 4 * static_cast<Row>(band_.k)) {
            ++stats_.invariant_violations;
            return;
        }
        check_matured_window(i);
    }

    // A slide leaving the row lists at row `end`, after at most 4k+1 rows,
    // must have matched every row since its start. Checked once per slide
    // rather than once per row, which keeps the total at O(k^3).
    void check_matched_since_start(const SlideEntry& e, Row end)
    {
        if (!options_.check_invariants || end - e.start > 4 * static_cast<Row>(band_.k) + 2) {
            return;
        }
        ++stats_.invariant_checks;
        for (Row t = e.start; t < end; ++t) {
            if (xw_.at(t) != yw_.at(t + e.d)) {
                ++stats_.invariant_violations;
                return;
            }
        }
    }

    Band band_;
    const PeriodicOptions& options_;
    StreamWindow xw_;
    StreamWindow yw_;
    WaveState state_;
    FrontierRecorder recorder_;
    MatureSet matures_;
    std::vector<SlideEntry> cur_;
    std::vector<SlideEntry> next_;
    std::vector<SlideEntry> scratch_;
    std::vector<std::uint64_t> maturity_by_diagonal_;
    PeriodicStats stats_;
};

} // namespace

PeriodicResult stream_distance_periodic(ByteSource& x, ByteSource& y, int k, const PeriodicOptions& options)
{
    if (k < 0) {
        throw std::invalid_argument("stream_distance_periodic: k must be non-negative");
    }
    const Band band{k, x.size(), y.size()};
    // A length gap above k settles the distance; the wave still runs when
    // the caller wants the frontier.
    if (!band.feasible() && !options.retain_frontier) {
        return PeriodicResult{};
    }
    PeriodicStreamer streamer(x, y, band, options);
    return streamer.run();
}

} // namespace slidewave
