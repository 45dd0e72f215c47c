#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fcg/graph.hpp"

namespace fcg {

/// N(2)=0, N(3)=1, N(inf)=2; anything else is a domain error.
int n_value(int m);

/// Lexicographic minimum over all rotations of the sequence and of its
/// reversal. Idempotent; makes cyclic equality a plain comparison.
std::vector<int> canonical_cycle(std::vector<int> seq);

/// Cyclic {0,1,2}-sequence read around a 2-residue inside a 3-residue.
struct StructureSequence {
    Colour s = 0, t = 0, r = 0;
    Vertex through_vertex = 0;
    std::vector<int> entries;  // canonical form
};

/// One canonical sequence per (closed 2-residue with finite m, third colour).
/// Residues a truncated ball does not close are skipped. Throws DomainError
/// when an m-value lies outside {2,3,inf}.
std::vector<StructureSequence> structure_sequences(const FullyColouredGraph& g);

struct RealisabilityVerdict {
    bool realisable = false;
    std::vector<std::pair<StructureSequence, std::string>> violations;
};

/// Theorem-level criterion: every length-4 sequence has shape (n1,n2,n1,n2)
/// and every length-6 sequence has (-1)^i(n_i - n_{i+3}) constant in i.
RealisabilityVerdict check_realisable_233(const FullyColouredGraph& g);

/// Brute force over {0,1,2}^6 filtered by the length-6 condition; exactly the
/// 15 canonical classes.
std::set<std::vector<int>> enumerate_valid_hexagons();

std::string sequence_to_string(const std::vector<int>& seq);

}  // namespace fcg
