#include <doctest.h>

#include "fcg/errors.hpp"
#include "fcg/fixtures.hpp"
#include "fcg/sequences.hpp"

#include <algorithm>

using namespace fcg;

TEST_CASE("canonical cycle") {
    CHECK(canonical_cycle({1, 0, 0}) == std::vector<int>{0, 0, 1});
    CHECK(canonical_cycle({0, 1, 2}) == canonical_cycle({2, 1, 0}));  // reversal
    auto c = canonical_cycle({1, 1, 1, 0, 2, 0});
    CHECK(canonical_cycle(c) == c);  // idempotent
}

TEST_CASE("rank-2 graphs have no structure sequences") {
    CHECK(structure_sequences(dihedral_graph(3)).empty());
}

TEST_CASE("all-m-3 graphs have all-ones hexagon sequences") {
    FullyColouredGraph ball = a2tilde_ball(5);
    auto seqs = structure_sequences(ball);
    REQUIRE(!seqs.empty());
    for (const auto& s : seqs) CHECK(s.entries == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("symmetric group graph sequences alternate") {
    auto seqs = structure_sequences(symmetric_group_graph(4));
    REQUIRE(!seqs.empty());
    for (const auto& s : seqs) {
        if (s.entries.size() == 6)
            CHECK(s.entries == std::vector<int>{0, 1, 0, 1, 0, 1});
        else
            CHECK(s.entries == std::vector<int>{1, 1, 1, 1});
    }
}

TEST_CASE("the mixed hexagon ball carries the pictured sequence") {
    FullyColouredGraph ball = mixed_hexagon_ball();
    REQUIRE(validate_graph(ball).empty());
    auto seqs = structure_sequences(ball);
    bool found = std::any_of(seqs.begin(), seqs.end(), [](const StructureSequence& s) {
        return s.entries == canonical_cycle({0, 0, 1, 0, 0, 1});
    });
    CHECK(found);
}

TEST_CASE("structure sequences reject out-of-range m") {
    CHECK_THROWS_AS(structure_sequences(remark62_fixture()), DomainError);
    CHECK_THROWS_AS(check_realisable_233(remark62_fixture()), DomainError);
}

TEST_CASE("realisability checker") {
    CHECK(check_realisable_233(symmetric_group_graph(4)).realisable);
    CHECK(check_realisable_233(a2tilde_ball(5)).realisable);

    // Doctor one 2-residue of hexagon x point to m = infinity: its hexagon
    // sequence becomes (2,0,0,0,0,0), which fails the difference condition.
    FullyColouredGraph b = rank1_graph();
    b.colours[0] = "r";
    FullyColouredGraph g = product(dihedral_graph(3), b);
    Colour s = g.colour_index("s"), r = g.colour_index("r");
    Residue res = residue(g, 0, {r, s});
    for (Vertex v : res.vertices) g.m_table[v][r][s] = g.m_table[v][s][r] = kInfiniteM;
    REQUIRE(validate_graph(g).empty());
    auto verdict = check_realisable_233(g);
    CHECK(!verdict.realisable);
    REQUIRE(!verdict.violations.empty());
    bool found = std::any_of(
        verdict.violations.begin(), verdict.violations.end(), [](const auto& v) {
            return v.first.entries == canonical_cycle({2, 0, 0, 0, 0, 0});
        });
    CHECK(found);
}

TEST_CASE("hexagon table") {
    auto hexagons = enumerate_valid_hexagons();
    CHECK(hexagons.size() == 15);
    CHECK(hexagons.count(canonical_cycle({0, 1, 2, 0, 1, 2})) == 1);
    CHECK(hexagons.count(canonical_cycle({1, 0, 0, 0, 0, 0})) == 0);
    // closed under canonicalisation
    for (const auto& h : hexagons) CHECK(canonical_cycle(h) == h);
}

TEST_CASE("checker verdict survives colour permutation") {
    FullyColouredGraph a3 = symmetric_group_graph(4);
    std::swap(a3.colours[0], a3.colours[2]);  // relabel only
    CHECK(check_realisable_233(a3).realisable);
}
