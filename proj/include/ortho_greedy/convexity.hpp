#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ortho_greedy/repgraph.hpp"

namespace ortho_greedy {

// Two reflex corners of the outer polygon joined by one straight boundary
// side; the polygon is then not orthoconvex. A non-simple outer boundary
// (repeated vertex, dangling edge) is reported with first == second.
struct BoundaryWitness {
    VertexId first = kNone;
    VertexId second = kNone;
    std::string reason;
};

struct ConvexityReport {
    bool is_convex = true;
    std::vector<FaceId> offending_internal_faces;
    std::optional<BoundaryWitness> orthoconvexity_witness;
};

ConvexityReport check_convex(const RectilinearRepresentation& h);

// Corners of the outer boundary walk, each with the angle seen from the
// outer face (90 = reflex for the polygon, 270 = convex polygon corner).
std::vector<Corner> outer_corners(const RectilinearRepresentation& h);

// Orthoconvexity of a cyclic outer-angle sequence: after merging 180-degree
// corners, no side has outer angle 90 at both ends. Returns the index pair of
// the first offending side.
std::optional<std::pair<int, int>> find_reflex_side(const std::vector<int>& outer_angles);

}  // namespace ortho_greedy
