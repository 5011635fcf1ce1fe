#pragma once

#include "slidewave/types.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace slidewave {

/// Widened symbol domain: bytes are 0..255, the remaining values are
/// reserved and never equal to input bytes.
using Symbol = std::int32_t;

inline constexpr Symbol kSeparatorX = 256;
inline constexpr Symbol kSeparatorY = 257;
/// Fill for y positions before the start of y in the first block.
inline constexpr Symbol kPadSymbol = 258;

/// Furthest q >= i such that x[i..q) equals y[i+d..q+d), capped at
/// min(|x|, |y| - d). Character-by-character; `comparisons`, when given, is
/// increased by the number of byte comparisons made.
Row naive_slide(std::string_view x, std::string_view y, Diagonal d, Row i,
                std::uint64_t* comparisons = nullptr);

/// Longest-common-extension index over x' SEP1 y' SEP2.
///
/// Suffix array by prefix doubling with counting sorts (O(L log L)), LCP by
/// Kasai, and a sparse table for O(1) range minimum.
class BlockIndex {
public:
    BlockIndex() = default;

    /// Throws std::invalid_argument if a block contains a separator or a
    /// value outside the widened alphabet.
    BlockIndex(std::span<const Symbol> x_block, std::span<const Symbol> y_block);
    BlockIndex(std::string_view x_block, std::string_view y_block);

    Row x_size() const { return x_size_; }
    Row y_size() const { return y_size_; }
    std::size_t text_size() const { return text_.size(); }

    /// Length of the common prefix of x'[p..] and y'[q..]. Zero when either
    /// position is at or past its block end.
    Row lce(Row p, Row q) const;

private:
    void build();
    Row lce_text(std::size_t a, std::size_t b) const;

    Row x_size_ = 0;
    Row y_size_ = 0;
    std::vector<Symbol> text_;
    std::vector<std::int32_t> rank_;
    std::vector<std::vector<std::int32_t>> sparse_;
};

BlockIndex build_block_index(std::span<const Symbol> x_block, std::span<const Symbol> y_block);
BlockIndex build_block_index(std::string_view x_block, std::string_view y_block);

/// Slide on diagonal `d_shifted` of the block matrix from row i, by one LCE
/// query. Equals naive_slide over the blocks.
Row indexed_slide(const BlockIndex& index, int d_shifted, Row i);

} // namespace slidewave
