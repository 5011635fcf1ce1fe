#include "slidewave/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace slidewave::oracle {

int wf_distance(std::string_view x, std::string_view y)
{
    const std::size_t m = y.size();
    std::vector<std::uint32_t> prev(m + 1);
    std::vector<std::uint32_t> cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        prev[j] = static_cast<std::uint32_t>(j);
    }
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = static_cast<std::uint32_t>(i);
        const char xi = x[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            const std::uint32_t sub = prev[j - 1] + (xi != y[j - 1] ? 1u : 0u);
            const std::uint32_t gap = std::min(prev[j], cur[j - 1]) + 1;
            cur[j] = std::min(sub, gap);
        }
        std::swap(prev, cur);
    }
    return static_cast<int>(prev[m]);
}

EditScript wf_alignment(std::string_view x, std::string_view y)
{
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    const std::size_t w = m + 1;
    std::vector<std::uint32_t> dp((n + 1) * w);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return dp[i * w + j]; };
    for (std::size_t j = 0; j <= m; ++j) {
        at(0, j) = static_cast<std::uint32_t>(j);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        at(i, 0) = static_cast<std::uint32_t>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const std::uint32_t sub = at(i - 1, j - 1) + (x[i - 1] != y[j - 1] ? 1u : 0u);
            const std::uint32_t gap = std::min(at(i - 1, j), at(i, j - 1)) + 1;
            at(i, j) = std::min(sub, gap);
        }
    }

    struct Step {
        EditOp op;
        char byte;
    };
    std::vector<Step> steps;
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0) {
            const bool same = x[i - 1] == y[j - 1];
            if (at(i, j) == at(i - 1, j - 1) + (same ? 0u : 1u)) {
                steps.push_back({same ? EditOp::Match : EditOp::Substitute, y[j - 1]});
                --i;
                --j;
                continue;
            }
        }
        if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
            steps.push_back({EditOp::Delete, 0});
            --i;
        } else {
            steps.push_back({EditOp::Insert, y[j - 1]});
            --j;
        }
    }

    EditScript script;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->op) {
        case EditOp::Match:
        case EditOp::Delete: script.push(it->op, 1); break;
        default: script.push(it->op, 1, std::string_view(&it->byte, 1)); break;
        }
    }
    return script;
}

namespace {

// Walks the band |j - i| <= k row by row and hands every cell whose cost is
// at most k to `visit(i, d, cost)`. Costs above k are capped at k + 1, which
// is exact for every cell that matters: a path of cost <= k never leaves the
// band.
template <class Visit>
void walk_band(std::string_view x, std::string_view y, int k, Visit&& visit)
{
    if (k < 0) {
        throw std::invalid_argument("k must be non-negative");
    }
    const Row n = static_cast<Row>(x.size());
    const Row m = static_cast<Row>(y.size());
    const std::uint32_t cap = static_cast<std::uint32_t>(k) + 1;
    const std::size_t width = static_cast<std::size_t>(2 * k + 1);
    std::vector<std::uint32_t> prev(width, cap);
    std::vector<std::uint32_t> cur(width, cap);

    for (int d = 0; d <= k; ++d) {
        if (d <= m) {
            prev[static_cast<std::size_t>(d + k)] = static_cast<std::uint32_t>(d);
            visit(Row{0}, d, d);
        }
    }
    for (Row i = 1; i <= n; ++i) {
        for (int d = -k; d <= k; ++d) {
            const std::size_t slot = static_cast<std::size_t>(d + k);
            const Row j = i + d;
            std::uint32_t v = cap;
            if (j < 0 || j > m) {
                cur[slot] = cap;
                continue;
            }
            if (j == 0) {
                v = static_cast<std::uint32_t>(std::min<Row>(i, cap));
            } else {
                v = prev[slot] + (x[static_cast<std::size_t>(i - 1)] != y[static_cast<std::size_t>(j - 1)] ? 1u : 0u);
                if (d + 1 <= k) {
                    v = std::min(v, prev[slot + 1] + 1);
                }
                if (d - 1 >= -k) {
                    v = std::min(v, cur[slot - 1] + 1);
                }
                v = std::min(v, cap);
            }
            cur[slot] = v;
            if (v <= static_cast<std::uint32_t>(k)) {
                visit(i, d, static_cast<int>(v));
            }
        }
        std::swap(prev, cur);
    }
}

} // namespace

BoundedDistance banded_distance(std::string_view x, std::string_view y, int k)
{
    const Row n = static_cast<Row>(x.size());
    const Row m = static_cast<Row>(y.size());
    if (k < 0) {
        throw std::invalid_argument("banded_distance: k must be non-negative");
    }
    if (m - n > k || n - m > k) {
        return kExceedsK;
    }
    BoundedDistance result = kExceedsK;
    const Row dstar = m - n;
    walk_band(x, y, k, [&](Row i, int d, int cost) {
        if (i == n && d == dstar) {
            result = cost;
        }
    });
    return result;
}

FrontierTable brute_frontier(std::string_view x, std::string_view y, int k)
{
    const Row n = static_cast<Row>(x.size());
    const Row m = static_cast<Row>(y.size());
    FrontierTable table(k, n, m);
    walk_band(x, y, k, [&](Row i, int d, int cost) {
        table.set(d, cost, i);
    });
    for (Level h = 0; h <= k; ++h) {
        for (Diagonal d = -h; d <= h; ++d) {
            if (auto row = table.at(d, h); row && *row + d < m) {
                table.set_next_y(d, h, static_cast<std::uint8_t>(y[static_cast<std::size_t>(*row + d)]));
            }
        }
    }
    return table;
}

ReachTable brute_reach(std::string_view x, std::string_view y, int k)
{
    const FrontierTable f = brute_frontier(x, y, k);
    ReachTable reach;
    reach.k = k;
    reach.values.assign(static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(2 * k + 1), -1);
    for (Diagonal d = -k; d <= k; ++d) {
        Row best = -1;
        for (Level h = 0; h <= k; ++h) {
            if (auto row = f.at(d, h)) {
                best = std::max(best, *row);
            }
            if (std::abs(d) <= h) {
                reach.values[static_cast<std::size_t>(h) * static_cast<std::size_t>(2 * k + 1)
                             + static_cast<std::size_t>(d + k)] = best;
            }
        }
    }
    return reach;
}

} // namespace slidewave::oracle
