#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fcg {

using Vertex = int;
using Colour = int;

/// Action entry for an edge a truncated ball has not explored.
inline constexpr Vertex kNoVertex = -1;
/// m-table sentinel for infinity, ordered above every natural.
inline constexpr int kInfiniteM = std::numeric_limits<int>::max();

/// The combinatorial model (V, S, m): a finite vertex set, one involution per
/// colour, and a residue-constant order table. Tables are dense; balls of
/// infinite graphs mark unexplored action entries with kNoVertex.
struct FullyColouredGraph {
    std::vector<std::string> colours;
    int vertex_count = 0;
    std::vector<std::vector<Vertex>> action;        // action[v][s]
    std::vector<std::vector<std::vector<int>>> m_table;  // m_table[v][s][t]
    Vertex base = 0;

    int rank() const { return static_cast<int>(colours.size()); }
    Vertex act(Vertex v, Colour s) const { return action[v][s]; }
    int m(Vertex v, Colour s, Colour t) const { return m_table[v][s][t]; }
    /// True when every action entry is explored.
    bool total() const;
    /// Index of a colour label; throws DomainError if absent.
    Colour colour_index(const std::string& label) const;
    /// End vertex of the walk v·w, or kNoVertex if the walk leaves the
    /// explored part.
    Vertex act_word(Vertex v, const std::vector<Colour>& w) const;

    /// Allocates identity-free tables of the right shape (m diagonal set to 1,
    /// off-diagonal 2, action unexplored).
    static FullyColouredGraph blank(std::vector<std::string> colours, int vertices);
};

struct Residue {
    std::vector<Colour> colour_subset;  // sorted
    std::vector<Vertex> vertices;       // sorted orbit
    Vertex through_vertex;
};

/// Throws MalformedInput when table shapes are inconsistent.
void check_graph_dimensions(const FullyColouredGraph& g);

/// Checks every axiom on the defined part of the tables and reports each
/// violation with its witness. Dimension mismatches throw MalformedInput.
std::vector<std::string> validate_graph(const FullyColouredGraph& g);

/// Orbit of v under words in I (breadth-first closure).
Residue residue(const FullyColouredGraph& g, Vertex v, std::vector<Colour> I);

/// True when every vertex of r has all its I-edges explored.
bool residue_closed(const FullyColouredGraph& g, const Residue& r);

/// All {s,t}-residues, one per orbit, through the least vertex of each.
std::vector<Residue> two_residues(const FullyColouredGraph& g, Colour s, Colour t);

/// Shortest word length over all colours; throws NoPathError when disconnected.
int distance(const FullyColouredGraph& g, Vertex v, Vertex w);

/// BFS depth of every vertex from `from`; -1 where unreachable.
std::vector<int> bfs_depths(const FullyColouredGraph& g, Vertex from);

bool is_connected(const FullyColouredGraph& g);

/// Cartesian product: cross-colour m-values all 2, within-factor data
/// inherited. Throws DomainError on a colour-label collision.
FullyColouredGraph product(const FullyColouredGraph& g1, const FullyColouredGraph& g2);

/// True iff no colour bipartition (A,B) with all cross m = 2 exhibits g as the
/// product of its A- and B-residues through the base vertex.
bool is_irreducible(const FullyColouredGraph& g);

struct Isomorphism {
    std::vector<Colour> colour_map;  // colour of g1 -> colour of g2
    std::vector<Vertex> vertex_map;  // vertex of g1 -> vertex of g2
};

/// Deterministic brute-force scan: candidate colour bijections (all of them
/// when allowed, the label-matching one otherwise) x images of vertex 0,
/// extended along colour actions. First success in lexicographic order.
std::optional<Isomorphism> isomorphic(const FullyColouredGraph& g1,
                                      const FullyColouredGraph& g2,
                                      bool allow_colour_permutation);

/// Same scan restricted to the identity colour map and base -> base.
std::optional<Isomorphism> isomorphic_pointed(const FullyColouredGraph& g1,
                                              const FullyColouredGraph& g2);

nlohmann::json graph_to_json(const FullyColouredGraph& g);
FullyColouredGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const FullyColouredGraph& g);

}  // namespace fcg
