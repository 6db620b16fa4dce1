#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ortho_greedy/drawing.hpp"
#include "ortho_greedy/shapedags.hpp"

namespace ortho_greedy {

// Method A: distance-decreasing reachability for every ordered pair.
// Method B: no vertex inside another vertex's cell. A pair (v, z) is stuck
// when no neighbor of v is strictly closer to z, which is exactly z lying in
// the closed cell of v.
struct GreedyReport {
    bool is_greedy = true;
    bool method_a = true;
    bool method_b = true;
    std::vector<std::pair<VertexId, VertexId>> stuck_pairs;      // (v, destination)
    std::vector<std::pair<VertexId, VertexId>> cell_violations;  // (v, intruder)
};

GreedyReport is_greedy(const Drawing& drawing);

// True per conflict when neither responsible vertex lies in the other's cell.
std::vector<bool> conflicts_satisfied(const Drawing& drawing,
                                      const std::vector<Conflict>& conflicts);

// a*x + b*y <= c.
struct HalfPlane {
    Wide a = 0;
    Wide b = 0;
    Wide c = 0;
};

// Closed cell of a vertex: points no farther from v than from any neighbor.
// For rectilinear drawings the cell is an axis-parallel box whose sides are
// the bisectors with the neighbors; bounds are stored doubled so that they
// stay integral, and absent bounds are unbounded.
struct CellGeometry {
    VertexId vertex = kNone;
    std::vector<HalfPlane> half_planes;
    std::optional<Wide> west2, east2, south2, north2;

    bool bounded() const { return west2 && east2 && south2 && north2; }
    // Membership of the rational point (x / den, y / den), den > 0.
    bool contains(Wide x, Wide y, Wide den = 1) const;
};

CellGeometry cell_geometry(const Drawing& drawing, VertexId v);

struct DilationReport {
    // Ratio of the shortest distance-decreasing path length to the Euclidean
    // distance, maximized over ordered pairs; stored exactly as path and d^2.
    VertexId source = kNone;
    VertexId target = kNone;
    Wide path_length = 0;
    Wide squared_distance = 1;
    double ratio = 1.0;
    // path^2 <= 18 d^2 for the maximizing pair, hence for all pairs.
    bool within_bound = true;
};

// Throws PreconditionError for non-greedy drawings.
DilationReport dilation(const Drawing& drawing);

// No vertex strictly inside the box spanned by the two arms of any
// 90-degree face corner.
bool right_corner_boxes_empty(const Drawing& drawing);

}  // namespace ortho_greedy
