#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fcg/exact.hpp"
#include "fcg/graph.hpp"

namespace fcg {

/// Integer linear form on d variables (no constant term).
using Form = std::vector<Int>;

/// One form per line, space-separated integer coefficients; dimension is
/// inferred from the line width. Throws MalformedInput on ragged input or a
/// zero form.
std::vector<Form> parse_forms(std::istream& in);
std::vector<Form> parse_forms_file(const std::string& path);

/// Chamber sign vectors ('+'/'-' per form) of the central arrangement,
/// discovered by facet BFS from an integer seed point.
std::vector<std::string> arrangement_chambers(const std::vector<Form>& forms);

/// The fully coloured graph dual to a central essential simplicial
/// arrangement: chambers as vertices, wall-crossing action, m by face
/// counting, ray classes coloured by propagation. Throws
/// UnsupportedArrangement when a chamber is non-simplicial or the colouring
/// conflicts.
FullyColouredGraph dual_graph(const std::vector<Form>& forms);

struct LatticeElement {
    std::vector<std::vector<Int>> basis;  // canonical RREF rows of the vanishing forms
    int codim = 0;
    Int mu = 0;
};

struct IntersectionLattice {
    std::vector<LatticeElement> elements;  // ordered by codim, then basis
};

IntersectionLattice build_intersection_lattice(const std::vector<Form>& forms);

/// Rank of a set of forms (rows).
int form_rank(const std::vector<Form>& forms);

/// Poincaré polynomial sum |mu| t^codim, ascending dense coefficients.
std::vector<Int> intersection_poincare(const std::vector<Form>& forms);

/// Expansion of the product of bracket factors [n] = 1 + n t.
std::vector<Int> bracket_product(const std::vector<int>& ns);

Int evaluate_poly(const std::vector<Int>& coeffs, const Int& t);

}  // namespace fcg
