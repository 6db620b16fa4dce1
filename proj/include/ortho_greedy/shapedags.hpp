#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ortho_greedy/repgraph.hpp"

namespace ortho_greedy {

using NodeId = int;
using ArcId = int;

struct Arc {
    NodeId tail = kNone;
    NodeId head = kNone;
};

enum class Comparison { Before, After, Incomparable };

// Directed acyclic multigraph with eagerly computed reachability.
class Digraph {
public:
    // Throws PreconditionError on cycles or out-of-range endpoints.
    Digraph(int node_count, std::vector<Arc> arcs);

    int node_count() const { return node_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(ArcId a) const { return arcs_[a]; }
    const std::vector<ArcId>& out_arcs(NodeId n) const { return out_[n]; }
    const std::vector<ArcId>& in_arcs(NodeId n) const { return in_[n]; }

    std::vector<NodeId> sources() const;
    std::vector<NodeId> sinks() const;
    // Kahn's algorithm, smallest ready node first.
    const std::vector<NodeId>& topological_order() const { return topo_; }

    // Directed path of length >= 1 from a to b.
    bool reaches(NodeId a, NodeId b) const {
        return (closure_[a][b >> 6] >> (b & 63)) & 1U;
    }
    // Requires a != b.
    Comparison compare(NodeId a, NodeId b) const;

private:
    int node_count_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_, in_;
    std::vector<NodeId> topo_;
    std::vector<std::vector<std::uint64_t>> closure_;
};

enum class Axis { X, Y };

constexpr Axis other_axis(Axis a) { return a == Axis::X ? Axis::Y : Axis::X; }
inline const char* axis_name(Axis a) { return a == Axis::X ? "x" : "y"; }

// D_x (axis X): nodes are maximal vertical paths listed bottom to top, arcs are
// horizontal edges oriented left to right. D_y symmetric with horizontal paths
// listed left to right and vertical edges oriented upward.
class ShapeDag {
public:
    // Throws InternalError unless the result has exactly one source and sink.
    static ShapeDag build(const RectilinearRepresentation& h, Axis axis);

    Axis axis() const { return axis_; }
    const Digraph& graph() const { return graph_; }
    int node_count() const { return graph_.node_count(); }
    const std::vector<VertexId>& path(NodeId n) const { return paths_[n]; }
    NodeId node_of(VertexId v) const { return node_of_[v]; }
    EdgeId arc_edge(ArcId a) const { return arc_edge_[a]; }
    NodeId source() const { return source_; }
    NodeId sink() const { return sink_; }
    Comparison compare(NodeId a, NodeId b) const;

private:
    ShapeDag(Axis axis, Digraph graph) : axis_(axis), graph_(std::move(graph)) {}

    Axis axis_;
    Digraph graph_;
    std::vector<std::vector<VertexId>> paths_;
    std::vector<NodeId> node_of_;
    std::vector<EdgeId> arc_edge_;
    NodeId source_ = kNone;
    NodeId sink_ = kNone;
};

// Incomparable node pair of one shape DAG. "Lower" refers to the other axis:
// for an x-conflict the lower path lies below the upper one, for a y-conflict
// it lies to the left. The responsible vertices are the topmost (rightmost)
// vertex of the lower path and the bottommost (leftmost) vertex of the upper.
struct Conflict {
    Axis axis = Axis::X;
    NodeId lower_node = kNone;
    NodeId upper_node = kNone;
    VertexId lower_vertex = kNone;
    VertexId upper_vertex = kNone;
    Direction lower_opening = Direction::North;
    Direction upper_opening = Direction::South;
    // Unset until evaluated against an ordering.
    std::optional<bool> is_minimal;
};

// Conflict for incomparable nodes a, b of d; `other` is the shape DAG of the
// other axis. Throws InternalError if a and b are not separated in `other`.
Conflict conflict_between(const RectilinearRepresentation& h, const ShapeDag& d,
                          const ShapeDag& other, NodeId a, NodeId b);

// Conflicts of d's axis; `other` is the shape DAG of the other axis.
std::vector<Conflict> axis_conflicts(const RectilinearRepresentation& h, const ShapeDag& d,
                                     const ShapeDag& other);
std::vector<Conflict> enumerate_conflicts(const RectilinearRepresentation& h,
                                          const ShapeDag& dx, const ShapeDag& dy);
std::vector<Conflict> enumerate_conflicts(const RectilinearRepresentation& h);

// position[n] = index of node n in an ordering of the axis DAG.
std::vector<int> positions_of(const std::vector<NodeId>& ordering);

// Conflict {v_i, v_j} dominates {v_k, v_l} iff k <= i < j <= l.
bool dominates(const Conflict& a, const Conflict& b, const std::vector<int>& position);

// Sets is_minimal on every conflict of `axis`, relative to `ordering`.
void mark_minimal(std::vector<Conflict>& conflicts, Axis axis,
                  const std::vector<NodeId>& ordering);

}  // namespace ortho_greedy
