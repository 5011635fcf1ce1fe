#include "slidewave/lce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace slidewave {

Row naive_slide(std::string_view x, std::string_view y, Diagonal d, Row i, std::uint64_t* comparisons)
{
    const Row n = static_cast<Row>(x.size());
    const Row m = static_cast<Row>(y.size());
    if (i < 0 || i + d < 0) {
        throw std::invalid_argument("naive_slide: start cell outside the matrix");
    }
    const Row last = std::min(n, m - d);
    Row q = i;
    std::uint64_t steps = 0;
    while (q < last) {
        ++steps;
        if (x[static_cast<std::size_t>(q)] != y[static_cast<std::size_t>(q + d)]) {
            break;
        }
        ++q;
    }
    if (comparisons != nullptr) {
        *comparisons += steps;
    }
    return std::max(q, i);
}

namespace {

void check_block(std::span<const Symbol> block)
{
    for (Symbol s : block) {
        const bool byte = s >= 0 && s <= 255;
        if (!byte && s != kPadSymbol) {
            throw std::invalid_argument("BlockIndex: block contains a reserved or out-of-range symbol");
        }
    }
}

// Cyclic-shift sort of `s` over symbols [0, alphabet); `s` must end in a
// unique minimal symbol so that cyclic order equals suffix order.
std::vector<std::int32_t> sort_cyclic_shifts(const std::vector<std::int32_t>& s, std::size_t alphabet)
{
    const std::size_t n = s.size();
    std::vector<std::int32_t> p(n);
    std::vector<std::int32_t> c(n);
    std::vector<std::int32_t> cnt(std::max(alphabet, n), 0);
    for (std::size_t i = 0; i < n; ++i) {
        ++cnt[static_cast<std::size_t>(s[i])];
    }
    for (std::size_t a = 1; a < alphabet; ++a) {
        cnt[a] += cnt[a - 1];
    }
    for (std::size_t i = n; i-- > 0;) {
        p[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(s[i])])] = static_cast<std::int32_t>(i);
    }
    std::int32_t classes = 1;
    c[static_cast<std::size_t>(p[0])] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (s[static_cast<std::size_t>(p[i])] != s[static_cast<std::size_t>(p[i - 1])]) {
            ++classes;
        }
        c[static_cast<std::size_t>(p[i])] = classes - 1;
    }

    std::vector<std::int32_t> pn(n);
    std::vector<std::int32_t> cn(n);
    for (std::size_t len = 1; len < n && static_cast<std::size_t>(classes) < n; len <<= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto shifted = static_cast<std::int64_t>(p[i]) - static_cast<std::int64_t>(len);
            pn[i] = static_cast<std::int32_t>(shifted < 0 ? shifted + static_cast<std::int64_t>(n) : shifted);
        }
        std::fill(cnt.begin(), cnt.begin() + classes, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++cnt[static_cast<std::size_t>(c[static_cast<std::size_t>(pn[i])])];
        }
        for (std::int32_t a = 1; a < classes; ++a) {
            cnt[static_cast<std::size_t>(a)] += cnt[static_cast<std::size_t>(a - 1)];
        }
        for (std::size_t i = n; i-- > 0;) {
            const auto cls = static_cast<std::size_t>(c[static_cast<std::size_t>(pn[i])]);
            p[static_cast<std::size_t>(--cnt[cls])] = pn[i];
        }
        cn[static_cast<std::size_t>(p[0])] = 0;
        classes = 1;
        for (std::size_t i = 1; i < n; ++i) {
            const auto a = static_cast<std::size_t>(p[i]);
            const auto b = static_cast<std::size_t>(p[i - 1]);
            const auto a2 = (a + len) % n;
            const auto b2 = (b + len) % n;
            if (c[a] != c[b] || c[a2] != c[b2]) {
                ++classes;
            }
            cn[a] = classes - 1;
        }
        std::swap(c, cn);
    }
    return p;
}

} // namespace

BlockIndex::BlockIndex(std::span<const Symbol> x_block, std::span<const Symbol> y_block)
    : x_size_(static_cast<Row>(x_block.size()))
    , y_size_(static_cast<Row>(y_block.size()))
{
    check_block(x_block);
    check_block(y_block);
    text_.reserve(x_block.size() + y_block.size() + 2);
    text_.insert(text_.end(), x_block.begin(), x_block.end());
    text_.push_back(kSeparatorX);
    text_.insert(text_.end(), y_block.begin(), y_block.end());
    text_.push_back(kSeparatorY);
    build();
}

BlockIndex::BlockIndex(std::string_view x_block, std::string_view y_block)
    : x_size_(static_cast<Row>(x_block.size()))
    , y_size_(static_cast<Row>(y_block.size()))
{
    text_.reserve(x_block.size() + y_block.size() + 2);
    for (unsigned char c : x_block) {
        text_.push_back(c);
    }
    text_.push_back(kSeparatorX);
    for (unsigned char c : y_block) {
        text_.push_back(c);
    }
    text_.push_back(kSeparatorY);
    build();
}

void BlockIndex::build()
{
    const std::size_t len = text_.size();
    // Rank-reduce the symbols so the counting sorts cost O(L), then reserve
    // 0 for the terminator.
    std::vector<Symbol> alphabet(text_);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<std::int32_t> shifted(len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), text_[i]);
        shifted[i] = static_cast<std::int32_t>(it - alphabet.begin()) + 1;
    }
    shifted[len] = 0;
    std::vector<std::int32_t> order = sort_cyclic_shifts(shifted, alphabet.size() + 1);
    // order[0] is the terminator; drop it.
    std::vector<std::int32_t> sa(order.begin() + 1, order.end());

    rank_.assign(len, 0);
    for (std::size_t r = 0; r < len; ++r) {
        rank_[static_cast<std::size_t>(sa[r])] = static_cast<std::int32_t>(r);
    }

    // Kasai: lcp[r] = lcp(sa[r-1], sa[r]).
    std::vector<std::int32_t> lcp(len, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const auto r = static_cast<std::size_t>(rank_[i]);
        if (r == 0) {
            h = 0;
            continue;
        }
        const auto j = static_cast<std::size_t>(sa[r - 1]);
        while (i + h < len && j + h < len && text_[i + h] == text_[j + h]) {
            ++h;
        }
        lcp[r] = static_cast<std::int32_t>(h);
        if (h > 0) {
            --h;
        }
    }

    const std::size_t levels = static_cast<std::size_t>(std::bit_width(len));
    sparse_.assign(levels, {});
    sparse_[0] = std::move(lcp);
    for (std::size_t lv = 1; lv < levels; ++lv) {
        const std::size_t half = std::size_t{1} << (lv - 1);
        const std::size_t span = std::size_t{1} << lv;
        if (span > len) {
            sparse_.resize(lv);
            break;
        }
        auto& row = sparse_[lv];
        const auto& prev = sparse_[lv - 1];
        row.resize(len - span + 1);
        for (std::size_t i = 0; i + span <= len; ++i) {
            row[i] = std::min(prev[i], prev[i + half]);
        }
    }
}

Row BlockIndex::lce_text(std::size_t a, std::size_t b) const
{
    if (a == b) {
        return static_cast<Row>(text_.size() - a);
    }
    auto ra = static_cast<std::size_t>(rank_[a]);
    auto rb = static_cast<std::size_t>(rank_[b]);
    if (ra > rb) {
        std::swap(ra, rb);
    }
    // min over lcp[ra+1 .. rb]
    const std::size_t lo = ra + 1;
    const std::size_t width = rb - lo + 1;
    const std::size_t lv = static_cast<std::size_t>(std::bit_width(width)) - 1;
    const auto& row = sparse_[lv];
    return std::min(row[lo], row[rb + 1 - (std::size_t{1} << lv)]);
}

Row BlockIndex::lce(Row p, Row q) const
{
    if (p < 0 || q < 0 || p >= x_size_ || q >= y_size_) {
        return 0;
    }
    return lce_text(static_cast<std::size_t>(p), static_cast<std::size_t>(x_size_ + 1 + q));
}

BlockIndex build_block_index(std::span<const Symbol> x_block, std::span<const Symbol> y_block)
{
    return BlockIndex(x_block, y_block);
}

BlockIndex build_block_index(std::string_view x_block, std::string_view y_block)
{
    return BlockIndex(x_block, y_block);
}

Row indexed_slide(const BlockIndex& index, int d_shifted, Row i)
{
    if (i < 0 || i + d_shifted < 0) {
        throw std::invalid_argument("indexed_slide: start cell outside the block matrix");
    }
    return i + index.lce(i, i + d_shifted);
}

} // namespace slidewave
