#pragma once

// Brute-force reference implementations. Everything here works directly on
// the dynamic programming matrix and shares no code with the wave algorithms.

#include "slidewave/alignment.hpp"
#include "slidewave/types.hpp"

#include <string_view>
#include <vector>

namespace slidewave::oracle {

/// Full Wagner-Fischer DP, two rows. O(nm) time.
int wf_distance(std::string_view x, std::string_view y);

/// Full DP table plus backtrace. O(nm) time and space.
EditScript wf_alignment(std::string_view x, std::string_view y);

/// DP restricted to cells with |j - i| <= k. O(nk) time, O(k) space.
BoundedDistance banded_distance(std::string_view x, std::string_view y, int k);

/// F^h(d) = max{i : D[i][i+d] = h} for |d| <= h <= k, read off the banded
/// cost matrix. Next-y bytes are filled in as well.
FrontierTable brute_frontier(std::string_view x, std::string_view y, int k);

/// Furthest row with cost at most h, per (d, h); -1 for cells that do not
/// exist (|d| > h or an empty diagonal).
struct ReachTable {
    int k = 0;
    std::vector<Row> values;

    Row at(Diagonal d, Level h) const
    {
        return values[static_cast<std::size_t>(h) * static_cast<std::size_t>(2 * k + 1)
                      + static_cast<std::size_t>(d + k)];
    }
};

ReachTable brute_reach(std::string_view x, std::string_view y, int k);

} // namespace slidewave::oracle
