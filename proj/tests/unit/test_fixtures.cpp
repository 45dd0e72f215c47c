#include <doctest.h>

#include "fcg/errors.hpp"
#include "fcg/fixtures.hpp"

#include <fstream>
#include <sstream>

using namespace fcg;

TEST_CASE("symmetric group graphs") {
    FullyColouredGraph a3 = symmetric_group_graph(4);
    CHECK(a3.vertex_count == 24);
    CHECK(a3.rank() == 3);
    CHECK(validate_graph(a3).empty());
    CHECK(a3.m(0, 0, 1) == 3);
    CHECK(a3.m(0, 0, 2) == 2);
    CHECK(symmetric_group_graph(5).vertex_count == 120);
}

TEST_CASE("d4 graph") {
    FullyColouredGraph d4 = d4_graph();
    CHECK(d4.vertex_count == 192);
    CHECK(d4.rank() == 4);
    CHECK(validate_graph(d4).empty());
    // One central node braids with the three others.
    int braids = 0;
    for (int t = 0; t < 4; ++t)
        for (int s = 0; s < t; ++s)
            if (d4.m(0, s, t) == 3) ++braids;
    CHECK(braids == 3);
}

TEST_CASE("dihedral graphs") {
    CHECK(dihedral_graph(2).vertex_count == 4);
    CHECK(validate_graph(dihedral_graph(2)).empty());
    CHECK(validate_graph(dihedral_graph(3)).empty());
    CHECK_THROWS_AS(dihedral_graph(1), DomainError);
}

TEST_CASE("divisibility fixture edits break validation") {
    FullyColouredGraph g = remark62_fixture();
    REQUIRE(validate_graph(g).empty());
    g.m_table[0][1][2] = g.m_table[0][2][1] = 3;
    CHECK(!validate_graph(g).empty());
}

TEST_CASE("affine ball spheres match the golden file") {
    std::ifstream in(std::string(FCG_TEST_DATA_DIR) + "/a2tilde_spheres.txt");
    REQUIRE(in.good());
    std::vector<int> golden;
    int radius, count;
    while (in >> radius >> count) {
        REQUIRE(radius == static_cast<int>(golden.size()));
        golden.push_back(count);
    }
    REQUIRE(golden.size() == 11);

    auto spheres = a2tilde_sphere_sizes(10);
    CHECK(spheres == golden);
    CHECK(spheres == std::vector<int>{1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30});
}

TEST_CASE("affine ball is a partial graph with consistent axioms") {
    FullyColouredGraph ball = a2tilde_ball(4);
    CHECK(!ball.total());
    CHECK(validate_graph(ball).empty());
}

TEST_CASE("infinite dihedral ball") {
    FullyColouredGraph ball = infinite_dihedral_ball(3);
    CHECK(ball.vertex_count == 7);
    CHECK(validate_graph(ball).empty());
    CHECK(ball.m(0, 0, 1) == kInfiniteM);
    auto depth = bfs_depths(ball, ball.base);
    int boundary = 0;
    for (int d : depth) if (d == 3) ++boundary;
    CHECK(boundary == 2);
}
