#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcg/relations.hpp"

namespace fcg {

/// Injective assignment of generators to an ordered colour list (u ∈ U_I).
struct Shape {
    int n = 0;
    std::vector<std::string> colours;
    std::vector<Generator> assign;  // assign[i] belongs to colours[i]

    int rank() const { return static_cast<int>(colours.size()); }
    Generator at(int colour) const { return assign[colour]; }
    /// Index of a colour label; throws DomainError if absent.
    int colour_of(const std::string& label) const;
    /// Sorted endpoint set of the assigned chords.
    std::vector<int> support() const;
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Parses "r=0,2;s=1,3;t=2,4"; validates injectivity and bounds.
Shape parse_shape(int n, std::string_view text);
std::string format_shape(const Shape& u);
/// Throws DomainError unless the assignment is injective and within bounds.
void validate_shape(const Shape& u);

/// Wall-crossing move: result(s) = u(s), result(t) = u(t)*u(s) for t != s.
/// Closed form of the recursive definition; an involution.
Shape nabla(const RelationSet& q, const Shape& u, int s);

/// Closure of {u} under nabla in every colour, in BFS order.
std::vector<Shape> orbit_closure(const RelationSet& q, const Shape& u);

enum class ShapeQuotient { Sim, SimS };

/// Canonical encoding after order-isomorphic support relabelling to
/// {0..k-1}: the lexicographic minimum over the increasing and decreasing
/// relabellings. Sim keeps the colour positions; SimS forgets them (sorted
/// chord list).
std::vector<std::pair<int, int>> canonical_shape(const Shape& u, ShapeQuotient quotient);

/// True iff some colour bipartition (A,B) carries a length-4 relation word
/// on every cross pair.
bool is_reducible_shape(const RelationSet& q, const Shape& u);

/// Applies the j-th power of the successor-with-wraparound permutation of
/// supp(u) to both endpoints of every chord.
Shape cyclic_permute(const Shape& u, int j);

struct ShapeClass {
    std::string label;
    std::vector<std::vector<std::pair<int, int>>> members;  // canonical SimS keys
    std::vector<std::pair<int, int>> representative;
};

struct Rank3Classification {
    std::vector<ShapeClass> sim_s_classes;            // expected: L1..L6
    std::vector<std::vector<std::string>> merged;     // labels grouped by ~=_s
};

/// Enumerates irreducible 3-chord shapes with support relabelled into at most
/// six points (requires n >= 6), quotients by ~_s, then merges classes linked
/// by nabla orbits and ~.
Rank3Classification classify_shapes_rank3(int n);

}  // namespace fcg
