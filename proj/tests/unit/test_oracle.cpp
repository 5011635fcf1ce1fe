#include "helpers.hpp"

#include "slidewave/alignment.hpp"
#include "slidewave/lce.hpp"
#include "slidewave/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace slidewave;

TEST_CASE("wf_distance examples")
{
    CHECK(oracle::wf_distance("ABA", "AAB") == 2);
    CHECK(oracle::wf_distance("", "AAB") == 3);
    CHECK(oracle::wf_distance("AAB", "") == 3);
    CHECK(oracle::wf_distance("kitten", "sitting") == 3);
    CHECK(oracle::wf_distance("GATTACA", "GATTACA") == 0);
}

TEST_CASE("wf_alignment scripts replay")
{
    const EditScript s = oracle::wf_alignment("ABA", "AAB");
    CHECK(s.cost() == 2);
    CHECK(slidewave::apply("ABA", s) == "AAB");
    CHECK(oracle::wf_alignment("ACGT", "ACGT").cigar() == "4=");
    CHECK(oracle::wf_alignment("A", "").cigar() == "1D");
    CHECK(oracle::wf_alignment("", "AB").cigar() == "2I");
}

TEST_CASE("banded_distance examples")
{
    CHECK(oracle::banded_distance("ABA", "AAB", 2) == 2);
    CHECK(oracle::banded_distance("ACGT", "ACGT", 0) == 0);
    CHECK(oracle::banded_distance("AAAA", "TTTT", 2) == kExceedsK);
    CHECK(oracle::banded_distance("A", "AAAA", 2) == kExceedsK);
    CHECK_THROWS(oracle::banded_distance("A", "A", -1));
}

TEST_CASE("brute_frontier examples")
{
    CHECK(oracle::brute_frontier("AAB", "AAA", 1).at(0, 0) == 2);
    CHECK(oracle::brute_frontier("ACGTAC", "ACGTAC", 2).at(0, 0) == 6);
    const FrontierTable t = oracle::brute_frontier("BAAA", "AAAA", 1);
    CHECK(t.at(0, 1) == 4);
    CHECK(t.at(0, 0) == 0);
}

TEST_CASE("banded distance agrees with the full DP when it fits")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const testing::Case c = testing::random_case(seed, 120, 10);
        CHECK(oracle::banded_distance(c.x, c.y, c.k) == testing::expected(c));
        const EditScript s = oracle::wf_alignment(c.x, c.y);
        CHECK(slidewave::apply(c.x, s) == c.y);
        CHECK(s.cost() == oracle::wf_distance(c.x, c.y));
    }
}

TEST_CASE("brute frontier satisfies the slide recurrence")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const testing::Case c = testing::random_case(seed, 80, 8);
        const FrontierTable f = oracle::brute_frontier(c.x, c.y, c.k);
        const oracle::ReachTable r = oracle::brute_reach(c.x, c.y, c.k);
        const Band band = f.band();
        for (Level h = 1; h <= c.k; ++h) {
            for (Diagonal d = -h; d <= h; ++d) {
                if (!band.contains(d)) {
                    continue;
                }
                Row best = -1;
                if (std::abs(d) <= h - 1) {
                    best = std::max(best, r.at(d, h - 1) + 1);
                }
                if (d + 1 <= h - 1 && band.contains(d + 1)) {
                    best = std::max(best, r.at(d + 1, h - 1) + 1);
                }
                if (d - 1 >= -(h - 1) && band.contains(d - 1)) {
                    best = std::max(best, r.at(d - 1, h - 1));
                }
                const Row start = band.clamp(d, best);
                const Row reach = naive_slide(c.x, c.y, d, start);
                CHECK(reach == r.at(d, h));
                if (auto v = f.at(d, h)) {
                    CHECK(*v == reach);
                }
            }
        }
    }
}
