#pragma once

#include "slidewave/driver.hpp"
#include "slidewave/oracle.hpp"

#include <random>
#include <string>

namespace testing {

struct Case {
    std::string x;
    std::string y;
    int k = 0;
};

/// Mixed-preset pair with up to k+2 planted edits, so some exceed k.
inline Case random_case(std::uint64_t seed, slidewave::Row max_n, int max_k)
{
    std::mt19937_64 rng(seed);
    Case c;
    const slidewave::Row n = 1 + static_cast<slidewave::Row>(rng() % static_cast<std::uint64_t>(max_n));
    c.k = static_cast<int>(rng() % static_cast<std::uint64_t>(max_k + 1));
    static const int sigmas[] = {1, 2, 3, 4, 26, 256};
    const int sigma = sigmas[rng() % 6];
    const auto preset = static_cast<slidewave::Preset>(rng() % 3);
    const int edits = static_cast<int>(std::min<slidewave::Row>(n, static_cast<slidewave::Row>(rng() % static_cast<std::uint64_t>(c.k + 3))));
    auto g = slidewave::gen_pair(n, edits, sigma, seed * 7919 + 1, preset);
    c.x = std::move(g.x);
    c.y = std::move(g.y);
    return c;
}

inline slidewave::BoundedDistance expected(const Case& c)
{
    const int d = slidewave::oracle::wf_distance(c.x, c.y);
    return d <= c.k ? slidewave::BoundedDistance(d) : slidewave::kExceedsK;
}

inline bool feasible(const Case& c)
{
    const auto diff = static_cast<long long>(c.y.size()) - static_cast<long long>(c.x.size());
    return diff >= -c.k && diff <= c.k;
}

} // namespace testing
