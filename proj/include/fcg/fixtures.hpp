#pragma once

#include <string>
#include <vector>

#include "fcg/graph.hpp"

namespace fcg {

/// Cayley graph of the group generated by the given involutive permutations,
/// with m(v;s,t) = order of the permutation s∘t. An independent oracle for
/// Coxeter fixtures: no shape or matrix machinery involved.
FullyColouredGraph cayley_graph(const std::vector<std::vector<int>>& generator_perms,
                                std::vector<std::string> colour_names);

/// Coxeter graph of type A_{letters-1}: the symmetric group on `letters`
/// letters with adjacent transpositions.
FullyColouredGraph symmetric_group_graph(int letters);

/// Coxeter graph of type D4 (192 vertices): evenly-signed permutations of 4
/// letters, realised as permutations of the 8 signed symbols.
FullyColouredGraph d4_graph();

/// Rank-2 graph with 2m vertices (dihedral); m = kInfiniteM is rejected.
FullyColouredGraph dihedral_graph(int m);

/// Two vertices, one colour.
FullyColouredGraph rank1_graph();

/// The 8-vertex coloured graph on (Z/2)^3 whose {s,t}-residue has m = 4 and
/// size 4 (divisibility, not equality, of 2m and #R).
FullyColouredGraph remark62_fixture();

/// Radius-limited ball of the all-m=3 rank-3 Coxeter graph, built by walking
/// exact integer reflection matrices in the root basis. Action entries that
/// leave the ball stay unexplored.
FullyColouredGraph a2tilde_ball(int radius);

/// Sphere sizes |{v : d(base,v) = k}| for k = 0..radius from the same
/// reflection walk.
std::vector<int> a2tilde_sphere_sizes(int radius);

/// Ball of the infinite dihedral Coxeter graph (rank 2, m = inf).
FullyColouredGraph infinite_dihedral_ball(int radius);

/// A 16-vertex partial 3-residue: central {s,t}-hexagon surrounded by four
/// squares and two hexagons, so the central structure sequence reads
/// (0,0,1,0,0,1). Boundary edges stay unexplored.
FullyColouredGraph mixed_hexagon_ball();

}  // namespace fcg
