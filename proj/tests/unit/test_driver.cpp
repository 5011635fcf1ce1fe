#include "helpers.hpp"

#include "slidewave/driver.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace slidewave;

namespace {

// x = A^n, y = x with `edits` bytes substituted far apart, so the distance is exact.
std::pair<std::string, std::string> spaced_substitutions(int n, int edits)
{
    std::string x(static_cast<std::size_t>(n), 'A');
    std::string y = x;
    for (int e = 0; e < edits; ++e) {
        y[static_cast<std::size_t>(10 + 20 * e)] = 'C';
    }
    return {x, y};
}

} // namespace

TEST_CASE("algorithm names round trip")
{
    for (AlgorithmId id : {AlgorithmId::Dp, AlgorithmId::Band, AlgorithmId::RowWave, AlgorithmId::StreamLce,
                           AlgorithmId::StreamPeriodic, AlgorithmId::Auto}) {
        CHECK(parse_algorithm(algorithm_name(id)) == id);
    }
    CHECK_FALSE(parse_algorithm("bogus"));
    CHECK(is_streaming(AlgorithmId::StreamLce));
    CHECK_FALSE(is_streaming(AlgorithmId::RowWave));
    CHECK(parse_preset("periodic") == Preset::Periodic);
    CHECK_FALSE(parse_preset("x"));
}

TEST_CASE("every algorithm agrees through the driver")
{
    for (std::uint64_t seed = 100; seed < 220; ++seed) {
        const testing::Case c = testing::random_case(seed, 300, 12);
        for (AlgorithmId id : {AlgorithmId::Dp, AlgorithmId::Band, AlgorithmId::RowWave, AlgorithmId::StreamLce,
                               AlgorithmId::StreamPeriodic, AlgorithmId::Auto}) {
            MemorySource xs(c.x);
            MemorySource ys(c.y);
            const RunReport r = run_algorithm(id, xs, ys, c.k);
            CHECK(r.distance == testing::expected(c));
            CHECK(r.requested == id);
            CHECK(r.algorithm != AlgorithmId::Auto);
            // A length gap above k is settled without reading either stream.
            if (testing::feasible(c) || !is_streaming(r.algorithm)) {
                CHECK(r.x_reader.bytes_read == c.x.size());
            }
        }
    }
}

TEST_CASE("auto_k doubles until the distance fits")
{
    {
        MemorySource xs("GATTACA");
        MemorySource ys("GATTACA");
        const AutoKResult r = auto_k(AlgorithmId::StreamPeriodic, xs, ys, 64);
        CHECK(r.report.distance == 0);
        CHECK(r.k_found == 1);
        CHECK(r.passes == 1);
    }
    {
        auto [x, y] = spaced_substitutions(200, 4);
        MemorySource xs(x);
        MemorySource ys(y);
        const AutoKResult r = auto_k(AlgorithmId::StreamPeriodic, xs, ys, 64);
        CHECK(r.report.distance == 4);
        CHECK(r.k_found == 4);
        CHECK(r.passes == 3);
        CHECK(xs.stats().passes == 3);
    }
    {
        auto [x, y] = spaced_substitutions(200, 5);
        MemorySource xs(x);
        MemorySource ys(y);
        const AutoKResult r = auto_k(AlgorithmId::StreamLce, xs, ys, 64);
        CHECK(r.report.distance == 5);
        CHECK(r.k_found == 8);
        CHECK(r.passes == 4);
        CHECK_FALSE(r.ceiling_exceeded);
    }
    {
        auto [x, y] = spaced_substitutions(200, 5);
        MemorySource xs(x);
        MemorySource ys(y);
        const AutoKResult r = auto_k(AlgorithmId::RowWave, xs, ys, 3);
        CHECK(r.ceiling_exceeded);
        CHECK_FALSE(r.report.distance);
        CHECK(r.k_found == 3);
        CHECK(r.passes == 3);
    }
    {
        MemorySource xs("A");
        MemorySource ys("A");
        const AutoKResult r = auto_k(AlgorithmId::Band, xs, ys, 0);
        CHECK(r.report.distance == 0);
        CHECK(r.k_found == 0);
    }
}

TEST_CASE("dispatch picks by cost")
{
    CHECK(dispatch_combined(1'000'000, 2, 4) == AlgorithmId::StreamPeriodic);
    CHECK(dispatch_combined(1'000'000, 1000, 256) == AlgorithmId::StreamLce);
    const AlgorithmId zero = dispatch_combined(1000, 0, 4);
    CHECK((zero == AlgorithmId::StreamLce || zero == AlgorithmId::StreamPeriodic));
}

TEST_CASE("generated pairs are deterministic and within their budget")
{
    const GeneratedPair a = gen_pair(500, 7, 4, 42);
    const GeneratedPair b = gen_pair(500, 7, 4, 42);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.planted == 7);
    CHECK(a.x.size() == 500);
    CHECK(a.x.find_first_not_of("ACGT") == std::string::npos);

    const GeneratedPair same = gen_pair(300, 0, 26, 9);
    CHECK(same.x == same.y);
    CHECK_THROWS_AS(gen_pair(3, 4, 4, 1), std::invalid_argument);

    for (Preset p : {Preset::Random, Preset::Periodic, Preset::Boundary}) {
        for (int sigma : {1, 2, 4, 256}) {
            for (std::uint64_t seed = 0; seed < 15; ++seed) {
                const GeneratedPair g = gen_pair(120, 9, sigma, seed, p);
                CHECK(oracle::wf_distance(g.x, g.y) <= 9);
            }
        }
    }
    const GeneratedPair edge = gen_pair(100, 2, 4, 5, Preset::Boundary);
    CHECK((edge.x.front() != edge.y.front() || edge.x.size() != edge.y.size()));
    CHECK(symbol_byte(2, 4) == 'G');
    CHECK(symbol_byte(3, 26) == 'D');
    CHECK(symbol_byte(200, 256) == static_cast<char>(200));
}
