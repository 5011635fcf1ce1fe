#include "slidewave/types.hpp"
#include "slidewave/wave_state.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace slidewave {

int cap_c(Diagonal d, Level h)
{
    if (h < 0 || std::abs(d) > h) {
        throw std::invalid_argument("cap_c: requires |d| <= h");
    }
    if (h == 0) {
        return 1;
    }
    const int ad = std::abs(d);
    if (ad <= h - 2) {
        return 3;
    }
    if (ad == h - 1 && ad >= 1) {
        return 2;
    }
    return 1;
}

Diagonal Band::min_diagonal() const
{
    return static_cast<Diagonal>(std::max<Row>(-k, -n));
}

Diagonal Band::max_diagonal() const
{
    return static_cast<Diagonal>(std::min<Row>(k, m));
}

Row Band::last_row(Diagonal d) const
{
    return std::min<Row>(n, m - d);
}

bool Band::feasible() const
{
    const Row t = terminal();
    return t >= -k && t <= k;
}

int Band::candidate_count(Diagonal d, Level h) const
{
    if (h == 0) {
        return 1;
    }
    int count = 0;
    if (std::abs(d) <= h - 1) {
        ++count;
    }
    if (d + 1 <= h - 1 && d + 1 <= max_diagonal()) {
        ++count;
    }
    if (d - 1 >= -(h - 1) && d - 1 >= min_diagonal()) {
        ++count;
    }
    return count;
}

Row Band::clamp(Diagonal d, Row row) const
{
    return std::min(row, last_row(d));
}

// ---------------------------------------------------------------------------

FrontierTable::FrontierTable(int k, Row n, Row m)
    : k_(k)
    , n_(n)
    , m_(m)
    , values_(static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(2 * k + 1), -1)
    , next_y_(values_.size(), -1)
{
    if (k < 0) {
        throw std::invalid_argument("FrontierTable: k must be non-negative");
    }
}

std::size_t FrontierTable::index(Diagonal d, Level h) const
{
    return static_cast<std::size_t>(h) * static_cast<std::size_t>(2 * k_ + 1)
           + static_cast<std::size_t>(d + k_);
}

void FrontierTable::check(Diagonal d, Level h) const
{
    if (h < 0 || h > k_ || std::abs(d) > h) {
        throw std::out_of_range("FrontierTable: cell outside |d| <= h <= k");
    }
}

std::optional<Row> FrontierTable::at(Diagonal d, Level h) const
{
    if (values_.empty() || h < 0 || h > k_ || std::abs(d) > h) {
        return std::nullopt;
    }
    const Row v = values_[index(d, h)];
    if (v < 0) {
        return std::nullopt;
    }
    return v;
}

void FrontierTable::set(Diagonal d, Level h, Row row)
{
    check(d, h);
    values_[index(d, h)] = row;
}

Row FrontierTable::reach(Diagonal d, Level h) const
{
    if (auto v = at(d, h)) {
        return *v;
    }
    check(d, h);
    return band().last_row(d);
}

std::optional<std::uint8_t> FrontierTable::next_y(Diagonal d, Level h) const
{
    if (next_y_.empty() || h < 0 || h > k_ || std::abs(d) > h) {
        return std::nullopt;
    }
    const auto v = next_y_[index(d, h)];
    if (v < 0) {
        return std::nullopt;
    }
    return static_cast<std::uint8_t>(v);
}

void FrontierTable::set_next_y(Diagonal d, Level h, std::uint8_t byte)
{
    check(d, h);
    next_y_[index(d, h)] = byte;
}

std::size_t FrontierTable::defined_count() const
{
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](Row v) { return v >= 0; }));
}

std::vector<std::string> FrontierTable::diff(const FrontierTable& other, std::size_t limit) const
{
    std::vector<std::string> out;
    const int kk = std::max(k_, other.k_);
    for (Level h = 0; h <= kk; ++h) {
        for (Diagonal d = -h; d <= h; ++d) {
            const auto a = at(d, h);
            const auto b = other.at(d, h);
            if (a != b) {
                if (out.size() == limit) {
                    out.emplace_back("...");
                    return out;
                }
                auto show = [](const std::optional<Row>& v) {
                    return v ? std::to_string(*v) : std::string("unset");
                };
                out.push_back("F^" + std::to_string(h) + "(" + std::to_string(d) + "): " + show(a)
                              + " vs " + show(b));
            }
        }
    }
    return out;
}

bool operator==(const FrontierTable& a, const FrontierTable& b)
{
    return a.k_ == b.k_ && a.n_ == b.n_ && a.m_ == b.m_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------

CandidateStore::CandidateStore(int k, Layout layout)
    : k_(k)
    , layout_(layout)
{
    const std::size_t diagonals = static_cast<std::size_t>(2 * k + 1);
    const std::size_t levels = layout == Layout::Dense ? static_cast<std::size_t>(k + 1) : 4;
    slots_.resize(diagonals * levels);
}

std::size_t CandidateStore::index(Diagonal d, Level h) const
{
    const std::size_t diag = static_cast<std::size_t>(d + k_);
    if (layout_ == Layout::Dense) {
        return static_cast<std::size_t>(h) * static_cast<std::size_t>(2 * k_ + 1) + diag;
    }
    return diag * 4 + static_cast<std::size_t>(h & 3);
}

CandidateSlot& CandidateStore::acquire(Diagonal d, Level h)
{
    CandidateSlot& slot = slots_[index(d, h)];
    if (slot.h != h) {
        if (slot.h >= 0 && (slot.live || (caps_ && slot.count < caps_(d, slot.h)))) {
            ++premature_recycles_;
        }
        slot = CandidateSlot{};
        slot.h = h;
    }
    return slot;
}

CandidateSlot* CandidateStore::find(Diagonal d, Level h)
{
    CandidateSlot& slot = slots_[index(d, h)];
    return slot.h == h ? &slot : nullptr;
}

const CandidateSlot* CandidateStore::find(Diagonal d, Level h) const
{
    const CandidateSlot& slot = slots_[index(d, h)];
    return slot.h == h ? &slot : nullptr;
}

// ---------------------------------------------------------------------------

WaveState::WaveState(const Band& band, CandidateStore::Layout layout)
    : band_(band)
    , store_(band.k, layout)
{
    store_.set_caps([b = band_](Diagonal d, Level h) { return b.candidate_count(d, h); });
}

void WaveState::add_live()
{
    ++stats_.live;
    stats_.peak_live = std::max(stats_.peak_live, stats_.live);
}

std::optional<WaveState::Placement> WaveState::update(Diagonal d, Row row, Level h, Row current)
{
    const Row start = band_.clamp(d, row);
    const Row list_row = std::max(start, current);
    ++stats_.updates;
    if (trace_) {
        trace_(d, start, h);
    }
    CandidateSlot& slot = store_.acquire(d, h);
    ++slot.count;
    if (slot.live && slot.row >= list_row) {
        return std::nullopt;
    }
    if (slot.live) {
        --stats_.live;
    }
    slot.live = true;
    slot.row = list_row;
    slot.start = start;
    slot.stamp = next_stamp_++;
    add_live();
    ++stats_.insertions;
    return Placement{SlideEntry{d, h, start, slot.stamp}, list_row};
}

bool WaveState::take(const SlideEntry& e)
{
    ++stats_.pops;
    CandidateSlot* slot = store_.find(e.d, e.h);
    if (slot == nullptr || !slot->live || slot->stamp != e.stamp) {
        return false;
    }
    slot->live = false;
    --stats_.live;
    return true;
}

bool WaveState::definite(Diagonal d, Level h) const
{
    const CandidateSlot* slot = store_.find(d, h);
    return slot != nullptr && slot->count == band_.candidate_count(d, h);
}

SlideEntry WaveState::relocate(const SlideEntry& e, Row list_row)
{
    CandidateSlot& slot = *store_.find(e.d, e.h);
    slot.live = true;
    slot.row = list_row;
    slot.start = e.start;
    slot.stamp = next_stamp_++;
    add_live();
    SlideEntry moved = e;
    moved.stamp = slot.stamp;
    return moved;
}

// ---------------------------------------------------------------------------

FrontierRecorder::FrontierRecorder(const Band& band, bool retain)
    : band_(band)
    , retain_(retain)
    , last_reach_(static_cast<std::size_t>(2 * band.k + 1), -1)
    , last_level_(static_cast<std::size_t>(2 * band.k + 1), -1)
{
    if (retain_) {
        table_ = FrontierTable(band.k, band.n, band.m);
    }
}

void FrontierRecorder::finalize(Diagonal d, Level h, Row reach, std::optional<std::uint8_t> next_y)
{
    const std::size_t slot = static_cast<std::size_t>(d + band_.k);
    const bool attains = h == std::abs(d) || reach > last_reach_[slot];
    last_reach_[slot] = reach;
    last_level_[slot] = h;
    if (!distance_ && d == band_.terminal() && reach == band_.n) {
        distance_ = h;
    }
    if (retain_ && attains) {
        table_.set(d, h, reach);
        if (next_y) {
            table_.set_next_y(d, h, *next_y);
        }
    }
}

BoundedDistance FrontierRecorder::distance() const
{
    return distance_;
}

std::size_t FrontierRecorder::resident_cells() const
{
    return retain_ ? table_.defined_count() + last_reach_.size() : last_reach_.size();
}

} // namespace slidewave
