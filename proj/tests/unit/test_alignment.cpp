#include "helpers.hpp"

#include "slidewave/alignment.hpp"
#include "slidewave/wavefront.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace slidewave;

TEST_CASE("scripts merge runs and render as cigar")
{
    EditScript s;
    s.push(EditOp::Match, 2);
    s.push(EditOp::Match, 1);
    s.push(EditOp::Substitute, 1, "G");
    s.push(EditOp::Insert, 0);
    s.push(EditOp::Insert, 2, "TT");
    s.push(EditOp::Delete, 1);
    CHECK(s.runs().size() == 4);
    CHECK(s.cigar() == "3=1X2I1D");
    CHECK(s.cost() == 4);
    CHECK(EditScript{}.cigar().empty());
    CHECK_THROWS_AS(s.push(EditOp::Insert, 2, "T"), std::invalid_argument);
}

TEST_CASE("parse_cigar")
{
    const auto ops = parse_cigar("12=1X3I2D");
    REQUIRE(ops.size() == 4);
    CHECK(ops[0] == CigarOp{EditOp::Match, 12});
    CHECK(ops[3] == CigarOp{EditOp::Delete, 2});
    CHECK(parse_cigar("").empty());
    CHECK_THROWS_AS(parse_cigar("="), std::invalid_argument);
    CHECK_THROWS_AS(parse_cigar("3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cigar("3M"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cigar("0="), std::invalid_argument);
    CHECK_THROWS_AS(parse_cigar("99999999999999999999999="), std::invalid_argument);
}

TEST_CASE("apply replays scripts and rejects ones that do not fit")
{
    EditScript id;
    id.push(EditOp::Match, 4);
    CHECK(slidewave::apply("ACGT", id) == "ACGT");

    EditScript del;
    del.push(EditOp::Delete, 1);
    CHECK(slidewave::apply("A", del) == "");

    EditScript mixed;
    mixed.push(EditOp::Match, 1);
    mixed.push(EditOp::Substitute, 1, "A");
    mixed.push(EditOp::Insert, 1, "B");
    CHECK(slidewave::apply("AB", mixed) == "AAB");

    CHECK_THROWS_AS(slidewave::apply("ACG", id), std::invalid_argument);
    CHECK_THROWS_AS(slidewave::apply("ACGTA", id), std::invalid_argument);
}

TEST_CASE("format_ops writes one operation per line")
{
    EditScript s;
    s.push(EditOp::Match, 12);
    s.push(EditOp::Substitute, 1, "G");
    s.push(EditOp::Insert, 2, std::string("T\n", 2));
    s.push(EditOp::Delete, 1);
    CHECK(format_ops(s) == "= 12\nX 1 G\nI 2 T\\x0A\nD 1\n");
}

TEST_CASE("reconstruction from a retained frontier")
{
    const RowWaveResult id = row_wave_distance("ACGTAC", "ACGTAC", 0);
    CHECK(reconstruct_alignment(id.frontier, 0, 0).cigar() == "6=");

    const RowWaveResult r = row_wave_distance("ABA", "AAB", 2);
    const EditScript s = reconstruct_alignment(r.frontier, 2, 1 - 1);
    CHECK(s.cost() == 2);
    CHECK(slidewave::apply("ABA", s) == "AAB");

    CHECK_THROWS_AS(reconstruct_alignment(r.frontier, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_alignment(FrontierTable{}, 0, 0), std::invalid_argument);
}

TEST_CASE("reconstructed scripts are optimal and replay exactly")
{
    for (std::uint64_t seed = 9000; seed < 9400; ++seed) {
        const testing::Case c = testing::random_case(seed, 150, 12);
        const RowWaveResult r = row_wave_distance(c.x, c.y, c.k);
        if (!r.distance) {
            continue;
        }
        const auto dstar = static_cast<Diagonal>(static_cast<Row>(c.y.size()) - static_cast<Row>(c.x.size()));
        const EditScript s = reconstruct_alignment(r.frontier, *r.distance, dstar);
        CHECK(s.cost() == *r.distance);
        CHECK(slidewave::apply(c.x, s) == c.y);
    }
}
