#include "slidewave/lce.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace slidewave;

TEST_CASE("naive_slide examples")
{
    CHECK(naive_slide("AAAA", "AAAA", 0, 0) == 4);
    CHECK(naive_slide("ABCD", "BBCD", 0, 0) == 0);
    CHECK(naive_slide("AAB", "AAA", 0, 0) == 2);
    CHECK(naive_slide("AAB", "AAA", 0, 3) == 3);
    // Capped at the shorter side of the diagonal.
    CHECK(naive_slide("AAAA", "AAA", 1, 0) == 2);
    CHECK(naive_slide("AA", "XAAAA", 1, 0) == 2);
    std::uint64_t cmp = 0;
    naive_slide("AAAB", "AAAA", 0, 0, &cmp);
    CHECK(cmp == 4);
    CHECK_THROWS_AS(naive_slide("AB", "AB", -1, 0), std::invalid_argument);
}

TEST_CASE("block index examples")
{
    const BlockIndex same = build_block_index(std::string_view("AA"), std::string_view("AA"));
    CHECK(same.lce(0, 0) == 2);
    const BlockIndex ab = build_block_index(std::string_view("AB"), std::string_view("BA"));
    CHECK(ab.lce(0, 0) == 0);
    CHECK(ab.lce(0, 1) == 1);
    CHECK(ab.lce(1, 0) == 2 - 1);
    CHECK(ab.lce(2, 0) == 0);
    CHECK(ab.lce(0, 2) == 0);
    CHECK(ab.text_size() == 6);
}

TEST_CASE("block index rejects reserved symbols")
{
    const std::vector<Symbol> fine{1, kPadSymbol, 255};
    const std::vector<Symbol> sep{1, kSeparatorX};
    const std::vector<Symbol> big{300};
    CHECK_NOTHROW(BlockIndex(fine, fine));
    CHECK_THROWS_AS(BlockIndex(sep, fine), std::invalid_argument);
    CHECK_THROWS_AS(BlockIndex(fine, big), std::invalid_argument);
    CHECK_THROWS_AS(BlockIndex(fine, std::vector<Symbol>{-1}), std::invalid_argument);
}

TEST_CASE("padding never matches input bytes")
{
    const std::vector<Symbol> x{0, 0, 0};
    const std::vector<Symbol> y{kPadSymbol, 0, 0, 0};
    const BlockIndex idx(x, y);
    CHECK(indexed_slide(idx, 0, 0) == 0);
    CHECK(indexed_slide(idx, 1, 0) == 3);
}

TEST_CASE("indexed slide equals naive slide on random blocks")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int sigma = 1 + static_cast<int>(rng() % 4);
        std::string x(rng() % 40, 'A');
        std::string y(rng() % 40, 'A');
        for (char& c : x) {
            c = static_cast<char>('A' + rng() % static_cast<unsigned>(sigma));
        }
        for (char& c : y) {
            c = static_cast<char>('A' + rng() % static_cast<unsigned>(sigma));
        }
        const BlockIndex idx(x, y);
        for (Row i = 0; i <= static_cast<Row>(x.size()); ++i) {
            for (Row j = 0; j <= static_cast<Row>(y.size()); ++j) {
                const auto d = static_cast<Diagonal>(j - i);
                CHECK(indexed_slide(idx, d, i) == naive_slide(x, y, d, i));
            }
        }
    }
}
