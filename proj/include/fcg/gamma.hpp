#pragma once

#include <string>
#include <vector>

#include "fcg/exact.hpp"
#include "fcg/graph.hpp"
#include "fcg/relations.hpp"
#include "fcg/shape.hpp"

namespace fcg {

/// BFS state of an admissible-graph vertex: the groupoid object together with
/// the chamber frame (columns q(v,s)) in the base frame. Frames stay
/// unimodular under the wall-crossing update.
struct GammaState {
    Shape object;
    IMat matrix;
};

struct AdmissibleGraph {
    FullyColouredGraph graph;
    Vertex base_vertex = 0;
    std::vector<GammaState> states;
    bool complete = false;
};

struct MValue {
    int m = 0;  // in {2,3}
    int p = 0;  // half-length of the relation word
    Word relation;
};

/// m along the {s,t}-alternating walk from u: the least k > 0 divisible by p
/// (half-length of the relation through u(s), u(t)*u(s)) whose 2k nabla moves
/// fix u. Theorem-level guarantee m in {2,3}; anything else (or a loop cap
/// overrun) is an integrity error.
MValue m_value(const RelationSet& q, const Shape& u, int s, int t);

/// BFS over (object, matrix) states from (u, identity). complete is false
/// when the radius cap truncated the search; truncated graphs are metric
/// balls with unexplored boundary edges.
AdmissibleGraph build_gamma(const RelationSet& q, const Shape& u, int radius_cap);

/// The bijective shape I -> T_n, colour i mapped to the i-th generator in
/// lexicographic order; colour labels are the generator tokens.
Shape full_shape(int n);

/// Follows the word letterwise from the base state of the full shape; each
/// letter g acts as the colour the current object maps to g. Word equality in
/// the presented group is state equality. Throws InconclusiveError when the
/// word is longer than the cap.
GammaState kn_apply(const RelationSet& q, const Word& word, int cap);

/// Full closure of the group action graph (build_gamma of the full shape).
AdmissibleGraph kn_closure(const RelationSet& q, int radius_cap);

struct CyclicProbeEntry {
    int shift = 0;
    bool completed = false;
    bool isomorphic = false;
};

/// For each cyclic permutation u' of u, builds Gamma(u') and tests coloured
/// isomorphism against Gamma(u). An experiment: verdicts are reported, not
/// asserted.
std::vector<CyclicProbeEntry> probe_cyclic_conjecture(const RelationSet& q, const Shape& u,
                                                      int radius_cap);

struct Rank4Entry {
    std::string name;
    bool complete = false;
    int vertices = 0;
    bool realisable = false;
    bool irreducible = false;
    bool m_in_23 = false;
    bool isomorphic_a4 = false;
    bool isomorphic_d4 = false;
};

struct Rank4Report {
    Rank4Entry u13;
    Rank4Entry u15;
    int a4_vertices = 0;
    int d4_vertices = 0;
};

/// Builds Gamma(u13) and Gamma(u15) from the known seeds and reports their
/// invariants and cross-isomorphism with the A4 and D4 Coxeter fixtures.
Rank4Report rank4_catalog(int radius_cap);

}  // namespace fcg
