#pragma once

#include <vector>

#include <json.hpp>

#include "fcg/exact.hpp"
#include "fcg/graph.hpp"

namespace fcg {

/// Standard realisation data: one integer frame per vertex, columns are the
/// chamber generators q(v,s) expressed in the base frame.
struct Realisation {
    FullyColouredGraph graph;
    Vertex base = 0;
    std::vector<IMat> frames;
};

/// Spanning-tree transport of frames from the base; every non-tree edge is
/// checked for closure. Throws NotRealisableError (with the witness cycle)
/// when a loop fails to close, DomainError on m-values outside {2,3,inf}.
Realisation realise(const FullyColouredGraph& g);

/// Frame transport across the edge (v, s): column s becomes
/// -q(v,s) + sum_t n(v;s,t) q(v,t); other columns are unchanged.
IMat transport_frame(const FullyColouredGraph& g, const IMat& frame, Vertex v, Colour s);

/// For every vertex pair, the strict common-interior-point system is
/// infeasible. Corollary-level chamber disjointness.
bool verify_chamber_disjointness(const Realisation& r);

/// For each 2-residue: with finite m, #R = 2m and the 2k projected chambers
/// alternate around k wall lines; truncated or infinite residues must fit in
/// a closed half-space whose boundary contains the common face.
bool verify_residue_walls(const Realisation& r);

/// Theorem-level check: for (v's, v', w) a semi-geodesic, every q(w,t) has
/// non-negative s-coordinate in the frame of v'. samples = 0 runs every
/// triple; otherwise a deterministic stride selects about `samples` of them.
bool halfspace_check(const Realisation& r, int samples);

enum class ConvexityOutcome { Passed, Skipped };

/// Segments between sampled chamber points stay inside the union of chambers.
/// Runs only on complete graphs (where the chambers tile the space); balls
/// report Skipped.
ConvexityOutcome convexity_spot_check(const Realisation& r, int samples);

nlohmann::json realisation_to_json(const Realisation& r);
Realisation realisation_from_json(const nlohmann::json& j);

}  // namespace fcg
