#include <doctest.h>

#include "fcg/arrangement.hpp"
#include "fcg/errors.hpp"
#include "fcg/fixtures.hpp"
#include "fcg/gamma.hpp"
#include "fcg/realisation.hpp"
#include "fcg/sequences.hpp"

#include <sstream>

using namespace fcg;

namespace {

std::vector<Form> forms_from(const std::string& text) {
    std::istringstream in(text);
    return parse_forms(in);
}

std::vector<Form> a37() { return parse_forms_file(std::string(FCG_TEST_DATA_DIR) + "/a37.forms"); }

}  // namespace

TEST_CASE("forms parsing") {
    auto forms = forms_from("1 0\n0 1\n");
    CHECK(forms.size() == 2);
    CHECK_THROWS_AS(forms_from("1 0\n1\n"), MalformedInput);
    CHECK_THROWS_AS(forms_from("0 0\n"), MalformedInput);
    CHECK_THROWS_AS(forms_from(""), MalformedInput);
    CHECK_THROWS_AS(forms_from("1 x\n"), MalformedInput);
}

TEST_CASE("chambers of the coordinate cross") {
    auto chambers = arrangement_chambers(forms_from("1 0\n0 1\n"));
    CHECK(chambers.size() == 4);
}

TEST_CASE("chambers of the seven-line arrangement") {
    CHECK(arrangement_chambers(a37()).size() == 32);
}

TEST_CASE("dual graph of the coordinate cross is the square") {
    FullyColouredGraph g = dual_graph(forms_from("1 0\n0 1\n"));
    CHECK(g.vertex_count == 4);
    CHECK(g.rank() == 2);
    CHECK(validate_graph(g).empty());
    CHECK(g.m(0, 0, 1) == 2);
    CHECK(isomorphic(g, dihedral_graph(2), true).has_value());
}

TEST_CASE("dual graph of the seven-line arrangement") {
    FullyColouredGraph g = dual_graph(a37());
    CHECK(g.vertex_count == 32);
    CHECK(validate_graph(g).empty());
    CHECK(check_realisable_233(g).realisable);
    CHECK(is_irreducible(g));

    RelationSet q = RelationSet::build(7);
    Shape l4;
    l4.n = 7;
    l4.colours = {"r", "s", "t"};
    l4.assign = {{0, 3}, {1, 4}, {2, 5}};
    AdmissibleGraph gamma = build_gamma(q, l4, 64);
    CHECK(isomorphic(gamma.graph, g, true).has_value());
}

TEST_CASE("non-simplicial chambers are rejected") {
    // Four generic planes through the origin in R^3 leave non-simplicial
    // chambers.
    CHECK_THROWS_AS(dual_graph(forms_from("1 0 0\n0 1 0\n0 0 1\n1 2 3\n")),
                    UnsupportedArrangement);
    CHECK_THROWS_AS(dual_graph(forms_from("1 0 0\n0 1 0\n")), UnsupportedArrangement);
}

TEST_CASE("poincare polynomial of the boolean arrangement") {
    auto coeffs = intersection_poincare(forms_from("1 0 0\n0 1 0\n0 0 1\n"));
    CHECK(coeffs == bracket_product({1, 1, 1}));
    CHECK(coeffs == std::vector<Int>{1, 3, 3, 1});
}

TEST_CASE("poincare polynomial of the seven-line arrangement") {
    auto coeffs = intersection_poincare(a37());
    CHECK(coeffs == std::vector<Int>{1, 7, 15, 9});
    CHECK(coeffs == bracket_product({1, 3, 3}));
    CHECK(evaluate_poly(coeffs, 1) == 32);  // chamber count
}

TEST_CASE("moebius values satisfy the defining recursion") {
    IntersectionLattice lattice = build_intersection_lattice(a37());
    // For every element X above the bottom, the mu-sum over [bottom, X] is 0.
    auto contains = [&](const LatticeElement& x, const LatticeElement& y) {
        for (const auto& row : x.basis) {
            auto probe = y.basis;
            probe.push_back(row);
            if (form_rank(probe) != y.codim) return false;
        }
        return true;
    };
    for (size_t i = 0; i < lattice.elements.size(); ++i) {
        const LatticeElement& x = lattice.elements[i];
        if (x.codim == 0) continue;
        Int total = x.mu;
        for (size_t j = 0; j < lattice.elements.size(); ++j) {
            if (j == i) continue;
            const LatticeElement& y = lattice.elements[j];
            if (y.codim >= x.codim) continue;
            if (contains(y, x)) total += y.mu;
        }
        CHECK(total == 0);
    }
}

TEST_CASE("realisation pipeline runs on the dual graph") {
    FullyColouredGraph g = dual_graph(a37());
    Realisation r = realise(g);
    CHECK(verify_chamber_disjointness(r));
    CHECK(verify_residue_walls(r));
    CHECK(halfspace_check(r, 0));
}
