#include "ortho_greedy/shapedags.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <string>

#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

Digraph::Digraph(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)), out_(node_count), in_(node_count) {
    for (ArcId a = 0; a < arc_count(); ++a) {
        const Arc& arc = arcs_[a];
        if (arc.tail < 0 || arc.tail >= node_count || arc.head < 0 || arc.head >= node_count)
            throw PreconditionError("arc endpoint out of range");
        out_[arc.tail].push_back(a);
        in_[arc.head].push_back(a);
    }

    std::vector<int> indegree(node_count);
    for (NodeId n = 0; n < node_count; ++n) indegree[n] = static_cast<int>(in_[n].size());
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId n = 0; n < node_count; ++n)
        if (indegree[n] == 0) ready.push(n);
    while (!ready.empty()) {
        const NodeId n = ready.top();
        ready.pop();
        topo_.push_back(n);
        for (ArcId a : out_[n])
            if (--indegree[arcs_[a].head] == 0) ready.push(arcs_[a].head);
    }
    if (static_cast<int>(topo_.size()) != node_count)
        throw PreconditionError("digraph has a directed cycle");

    const std::size_t words = (static_cast<std::size_t>(node_count) + 63) / 64;
    closure_.assign(node_count, std::vector<std::uint64_t>(words, 0));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        auto& bits = closure_[*it];
        for (ArcId a : out_[*it]) {
            const NodeId h = arcs_[a].head;
            const auto& below = closure_[h];
            for (std::size_t w = 0; w < words; ++w) bits[w] |= below[w];
            bits[h >> 6] |= std::uint64_t{1} << (h & 63);
        }
    }
}

std::vector<NodeId> Digraph::sources() const {
    std::vector<NodeId> out;
    for (NodeId n = 0; n < node_count_; ++n)
        if (in_[n].empty()) out.push_back(n);
    return out;
}

std::vector<NodeId> Digraph::sinks() const {
    std::vector<NodeId> out;
    for (NodeId n = 0; n < node_count_; ++n)
        if (out_[n].empty()) out.push_back(n);
    return out;
}

Comparison Digraph::compare(NodeId a, NodeId b) const {
    if (a == b) throw PreconditionError("comparing a node with itself");
    if (reaches(a, b)) return Comparison::Before;
    if (reaches(b, a)) return Comparison::After;
    return Comparison::Incomparable;
}

ShapeDag ShapeDag::build(const RectilinearRepresentation& h, Axis axis) {
    // Contracted edges run along `along`; arcs come from the perpendicular edges.
    const Direction along = axis == Axis::X ? Direction::North : Direction::East;
    const EdgeDir arc_dir = axis == Axis::X ? EdgeDir::East : EdgeDir::North;
    const int n = h.vertex_count();

    std::vector<NodeId> node_of(n, kNone);
    std::vector<std::vector<VertexId>> paths;
    for (VertexId v = 0; v < n; ++v) {
        if (node_of[v] != kNone) continue;
        VertexId start = v;
        while (h.neighbor(start, opposite(along)) != kNone)
            start = h.neighbor(start, opposite(along));
        std::vector<VertexId> path;
        for (VertexId w = start; w != kNone; w = h.neighbor(w, along)) {
            node_of[w] = static_cast<NodeId>(paths.size());
            path.push_back(w);
        }
        paths.push_back(std::move(path));
    }

    std::vector<Arc> arcs;
    std::vector<EdgeId> arc_edge;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const Edge& ed = h.edge(e);
        if (ed.dir != arc_dir) continue;
        arcs.push_back({node_of[ed.u], node_of[ed.v]});
        arc_edge.push_back(e);
    }

    const int nodes = static_cast<int>(paths.size());
    std::optional<Digraph> graph;
    try {
        graph.emplace(nodes, std::move(arcs));
    } catch (const PreconditionError&) {
        throw InternalError(std::string("shape DAG D_") + axis_name(axis) + " has a cycle");
    }
    ShapeDag dag(axis, std::move(*graph));
    dag.paths_ = std::move(paths);
    dag.node_of_ = std::move(node_of);
    dag.arc_edge_ = std::move(arc_edge);

    const auto sources = dag.graph_.sources();
    const auto sinks = dag.graph_.sinks();
    if (sources.size() != 1 || sinks.size() != 1)
        throw InternalError(std::string("shape DAG D_") + axis_name(axis) + " has " +
                            std::to_string(sources.size()) + " sources and " +
                            std::to_string(sinks.size()) +
                            " sinks; the representation is not convex");
    dag.source_ = sources.front();
    dag.sink_ = sinks.front();
    return dag;
}

Comparison ShapeDag::compare(NodeId a, NodeId b) const { return graph_.compare(a, b); }

namespace {

bool has_flat_opening(const RectilinearRepresentation& h, VertexId v, Direction opening) {
    return h.neighbor(v, opening) == kNone && h.neighbor(v, rotate_cw(opening)) != kNone &&
           h.neighbor(v, rotate_ccw(opening)) != kNone;
}

}  // namespace

Conflict conflict_between(const RectilinearRepresentation& h, const ShapeDag& d,
                          const ShapeDag& other, NodeId a, NodeId b) {
    // The lower path's responsible vertex opens toward the upper path.
    const Direction up = d.axis() == Axis::X ? Direction::North : Direction::East;
    NodeId lower = kNone, upper = kNone;
    const NodeId top_a = other.node_of(d.path(a).back());
    const NodeId bottom_b = other.node_of(d.path(b).front());
    const NodeId top_b = other.node_of(d.path(b).back());
    const NodeId bottom_a = other.node_of(d.path(a).front());
    if (top_a != bottom_b && other.compare(top_a, bottom_b) == Comparison::Before) {
        lower = a;
        upper = b;
    } else if (top_b != bottom_a && other.compare(top_b, bottom_a) == Comparison::Before) {
        lower = b;
        upper = a;
    } else {
        throw InternalError("nodes " + std::to_string(a) + " and " + std::to_string(b) +
                            " are incomparable in both shape DAGs");
    }
    Conflict c;
    c.axis = d.axis();
    c.lower_node = lower;
    c.upper_node = upper;
    c.lower_vertex = d.path(lower).back();
    c.upper_vertex = d.path(upper).front();
    c.lower_opening = up;
    c.upper_opening = opposite(up);
    if (!has_flat_opening(h, c.lower_vertex, c.lower_opening) ||
        !has_flat_opening(h, c.upper_vertex, c.upper_opening))
        throw InternalError("responsible vertex of a conflict is not flat");
    return c;
}

std::vector<Conflict> axis_conflicts(const RectilinearRepresentation& h, const ShapeDag& d,
                                     const ShapeDag& other) {
    std::vector<Conflict> out;
    for (NodeId a = 0; a < d.node_count(); ++a)
        for (NodeId b = a + 1; b < d.node_count(); ++b)
            if (d.compare(a, b) == Comparison::Incomparable)
                out.push_back(conflict_between(h, d, other, a, b));
    return out;
}

std::vector<Conflict> enumerate_conflicts(const RectilinearRepresentation& h,
                                          const ShapeDag& dx, const ShapeDag& dy) {
    auto out = axis_conflicts(h, dx, dy);
    auto ys = axis_conflicts(h, dy, dx);
    out.insert(out.end(), ys.begin(), ys.end());
    return out;
}

std::vector<Conflict> enumerate_conflicts(const RectilinearRepresentation& h) {
    return enumerate_conflicts(h, ShapeDag::build(h, Axis::X), ShapeDag::build(h, Axis::Y));
}

std::vector<int> positions_of(const std::vector<NodeId>& ordering) {
    std::vector<int> position(ordering.size(), kNone);
    for (int i = 0; i < static_cast<int>(ordering.size()); ++i) position[ordering[i]] = i;
    return position;
}

bool dominates(const Conflict& a, const Conflict& b, const std::vector<int>& position) {
    const auto [i, j] = std::minmax(position[a.lower_node], position[a.upper_node]);
    const auto [k, l] = std::minmax(position[b.lower_node], position[b.upper_node]);
    return k <= i && i < j && j <= l;
}

void mark_minimal(std::vector<Conflict>& conflicts, Axis axis,
                  const std::vector<NodeId>& ordering) {
    const auto position = positions_of(ordering);
    const int m = static_cast<int>(ordering.size());
    std::vector<int> min_right(m + 1, INT_MAX);
    for (const Conflict& c : conflicts) {
        if (c.axis != axis) continue;
        const auto [i, j] = std::minmax(position[c.lower_node], position[c.upper_node]);
        min_right[i] = std::min(min_right[i], j);
    }
    // suffix[k]: smallest right end among conflicts whose left end is >= k.
    std::vector<int> suffix(m + 2, INT_MAX);
    for (int k = m; k >= 0; --k) suffix[k] = std::min(suffix[k + 1], min_right[k]);
    for (Conflict& c : conflicts) {
        if (c.axis != axis) continue;
        const auto [i, j] = std::minmax(position[c.lower_node], position[c.upper_node]);
        c.is_minimal = min_right[i] == j && suffix[i + 1] > j;
    }
}

}  // namespace ortho_greedy
