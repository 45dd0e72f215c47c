#include <doctest.h>

#include "fcg/errors.hpp"
#include "fcg/fixtures.hpp"
#include "fcg/graph.hpp"

#include <algorithm>

using namespace fcg;

namespace {

FullyColouredGraph disconnected_pair() {
    FullyColouredGraph g = FullyColouredGraph::blank({"s"}, 4);
    g.action[0][0] = 1;
    g.action[1][0] = 0;
    g.action[2][0] = 3;
    g.action[3][0] = 2;
    return g;
}

}  // namespace

TEST_CASE("validate accepts the smallest graph") {
    CHECK(validate_graph(rank1_graph()).empty());
}

TEST_CASE("validate accepts the divisibility fixture") {
    FullyColouredGraph g = remark62_fixture();
    CHECK(validate_graph(g).empty());
    Colour s = g.colour_index("s"), t = g.colour_index("t");
    Residue r = residue(g, 0, {s, t});
    CHECK(r.vertices.size() == 4);
    CHECK(g.m(0, s, t) == 4);  // #R = 4 divides 2m = 8
}

TEST_CASE("validate reports a broken alternating relation") {
    FullyColouredGraph g = remark62_fixture();
    for (int v = 0; v < 4; ++v) g.m_table[v][1][2] = g.m_table[v][2][1] = 3;
    auto report = validate_graph(g);
    REQUIRE(!report.empty());
    bool found = std::any_of(report.begin(), report.end(), [](const std::string& msg) {
        return msg.find("(st)^m") != std::string::npos;
    });
    CHECK(found);
}

TEST_CASE("validate throws on dimension mismatch") {
    FullyColouredGraph g = rank1_graph();
    g.action.pop_back();
    CHECK_THROWS_AS(validate_graph(g), MalformedInput);
}

TEST_CASE("residues are orbits") {
    FullyColouredGraph hex = dihedral_graph(3);
    CHECK(residue(hex, 2, {}).vertices == std::vector<Vertex>{2});
    CHECK(residue(hex, 2, {0}).vertices == std::vector<Vertex>{2, 3});
    CHECK(residue(hex, 0, {0, 1}).vertices.size() == 6);
    CHECK_THROWS_AS(residue(hex, 9, {0}), DomainError);
    CHECK_THROWS_AS(residue(hex, 0, {7}), DomainError);
}

TEST_CASE("distance and diameter") {
    FullyColouredGraph a3 = symmetric_group_graph(4);
    CHECK(distance(a3, 5, 5) == 0);
    CHECK(distance(a3, 0, a3.act(0, 1)) == 1);

    // Diameter equals the positive-root count of the rank-3 system.
    int rank = 3;
    int positive_roots = rank * (rank + 1) / 2;
    int diameter = 0;
    for (Vertex v = 0; v < a3.vertex_count; ++v) {
        auto depth = bfs_depths(a3, v);
        diameter = std::max(diameter, *std::max_element(depth.begin(), depth.end()));
    }
    CHECK(diameter == positive_roots);
}

TEST_CASE("distance throws across components") {
    CHECK_THROWS_AS(distance(disconnected_pair(), 0, 2), NoPathError);
}

TEST_CASE("products") {
    FullyColouredGraph a = rank1_graph();
    FullyColouredGraph b = rank1_graph();
    CHECK_THROWS_AS(product(a, b), DomainError);  // label collision

    b.colours[0] = "t";
    FullyColouredGraph square = product(a, b);
    CHECK(square.vertex_count == 4);
    CHECK(square.m(0, 0, 1) == 2);
    CHECK(validate_graph(square).empty());

    FullyColouredGraph big = product(symmetric_group_graph(4), b);
    CHECK(big.vertex_count == 48);
    CHECK(big.rank() == 4);
    CHECK(validate_graph(big).empty());
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(symmetric_group_graph(4)));
    FullyColouredGraph b = rank1_graph();
    b.colours[0] = "t";
    FullyColouredGraph square = product(rank1_graph(), b);
    CHECK(!is_irreducible(square));
    // any two positive-rank factors give a reducible product
    FullyColouredGraph prod = product(symmetric_group_graph(3), b);
    CHECK(!is_irreducible(prod));
}

TEST_CASE("isomorphism scan") {
    FullyColouredGraph a3 = symmetric_group_graph(4);
    auto self = isomorphic(a3, a3, false);
    REQUIRE(self.has_value());
    CHECK(self->vertex_map[0] == 0);

    FullyColouredGraph b = rank1_graph();
    b.colours[0] = "t";
    FullyColouredGraph square = product(rank1_graph(), b);
    FullyColouredGraph hex = dihedral_graph(3);
    CHECK(!isomorphic(square, hex, true));

    // symmetric on a corpus pair
    FullyColouredGraph d4 = d4_graph();
    CHECK(isomorphic(a3, d4, true).has_value() == isomorphic(d4, a3, true).has_value());
}

TEST_CASE("graph JSON round trip and DOT") {
    FullyColouredGraph g = remark62_fixture();
    FullyColouredGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.colours == g.colours);
    CHECK(back.action == g.action);
    CHECK(back.m_table == g.m_table);

    std::string dot = graph_to_dot(dihedral_graph(2));
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("label=\"s\"") != std::string::npos);
}

TEST_CASE("partial graphs serialise unexplored entries as null") {
    FullyColouredGraph ball = infinite_dihedral_ball(2);
    auto j = graph_to_json(ball);
    FullyColouredGraph back = graph_from_json(j);
    CHECK(back.action == ball.action);
    CHECK(!back.total());
}
