#include "ortho_greedy/repgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

char direction_char(Direction d) {
    static constexpr char kChars[] = {'N', 'E', 'S', 'W'};
    return kChars[static_cast<int>(d)];
}

std::string_view direction_name(Direction d) {
    static constexpr std::string_view kNames[] = {"north", "east", "south", "west"};
    return kNames[static_cast<int>(d)];
}

VertexId RectilinearRepresentation::tail(HalfEdgeId h) const {
    const Edge& e = edges_[edge_of(h)];
    return (h & 1) ? e.v : e.u;
}

Direction RectilinearRepresentation::direction(HalfEdgeId h) const {
    const Direction forward =
        edges_[edge_of(h)].dir == EdgeDir::East ? Direction::East : Direction::North;
    return (h & 1) ? opposite(forward) : forward;
}

VertexId RectilinearRepresentation::neighbor(VertexId v, Direction d) const {
    const HalfEdgeId h = slot(v, d);
    return h == kNone ? kNone : head(h);
}

int RectilinearRepresentation::degree(VertexId v) const {
    return static_cast<int>(std::count_if(slots_[v].begin(), slots_[v].end(),
                                          [](HalfEdgeId h) { return h != kNone; }));
}

std::vector<HalfEdgeId> RectilinearRepresentation::outgoing(VertexId v) const {
    std::vector<HalfEdgeId> out;
    for (HalfEdgeId h : slots_[v])
        if (h != kNone) out.push_back(h);
    return out;
}

RectilinearRepresentation RectilinearRepresentation::build(int vertex_count,
                                                           std::vector<Edge> edges) {
    std::vector<std::string> issues;
    if (vertex_count < 1) throw ValidationError({"vertex count must be positive"});

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
            issues.push_back("edge " + std::to_string(i) + ": vertex out of range");
        } else if (e.u == e.v) {
            issues.push_back("edge " + std::to_string(i) + ": self-loop at vertex " +
                             std::to_string(e.u));
        }
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    std::sort(edges.begin(), edges.end());

    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : edges) {
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            issues.push_back("duplicate edge {" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + "}");
    }

    std::vector<int> degree(vertex_count, 0);
    for (const Edge& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (VertexId v = 0; v < vertex_count; ++v)
        if (degree[v] > 4)
            issues.push_back("degree >4 at vertex " + std::to_string(v));

    RectilinearRepresentation rep;
    rep.edges_ = std::move(edges);
    rep.slots_.assign(vertex_count, {kNone, kNone, kNone, kNone});
    for (HalfEdgeId h = 0; h < 2 * rep.edge_count(); ++h) {
        const VertexId v = rep.tail(h);
        const Direction d = rep.direction(h);
        HalfEdgeId& slot = rep.slots_[v][static_cast<int>(d)];
        if (slot != kNone) {
            issues.push_back("duplicated compass slot " + std::string(1, direction_char(d)) +
                             " at vertex " + std::to_string(v));
        } else {
            slot = h;
        }
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    if (!is_connected(rep)) throw ValidationError({"graph is disconnected"});

    if (rep.edges_.empty()) {
        Face outer;
        outer.external = true;
        outer.turn_sum = -360;
        rep.faces_.push_back(outer);
        rep.external_face_ = 0;
        return rep;
    }

    const int half_edges = 2 * rep.edge_count();
    rep.face_of_half_edge_.assign(half_edges, kNone);
    for (HalfEdgeId start = 0; start < half_edges; ++start) {
        if (rep.face_of_half_edge_[start] != kNone) continue;
        const FaceId f = static_cast<FaceId>(rep.faces_.size());
        Face face;
        HalfEdgeId h = start;
        do {
            rep.face_of_half_edge_[h] = f;
            face.walk.push_back(h);
            const VertexId b = rep.head(h);
            const Direction back = opposite(rep.direction(h));
            // Next half-edge: first occupied slot clockwise after the reverse of h.
            int k = 1;
            while (rep.slot(b, rotate_cw(back, k)) == kNone) ++k;
            const HalfEdgeId next = rep.slot(b, rotate_cw(back, k));
            face.corners.push_back({b, h, next, 90 * k});
            face.turn_sum += 180 - 90 * k;
            h = next;
        } while (h != start);
        rep.faces_.push_back(std::move(face));
    }

    const int faces = static_cast<int>(rep.faces_.size());
    if (vertex_count - rep.edge_count() + faces != 2)
        throw ValidationError({"non-planar rotation system (V - E + F = " +
                               std::to_string(vertex_count - rep.edge_count() + faces) +
                               ")"});

    int external = 0;
    for (FaceId f = 0; f < faces; ++f) {
        const int sum = rep.faces_[f].turn_sum;
        if (sum == -360) {
            ++external;
            rep.faces_[f].external = true;
            rep.external_face_ = f;
        } else if (sum != 360) {
            issues.push_back("face " + std::to_string(f) + " has turn sum " +
                             std::to_string(sum) + ", expected +360 or -360");
        }
    }
    if (issues.empty() && external != 1)
        issues.push_back("expected exactly one face with turn sum -360, found " +
                         std::to_string(external));
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return rep;
}

std::vector<FlatAngle> classify_flat_vertices(const RectilinearRepresentation& h) {
    std::vector<FlatAngle> flats;
    for (FaceId f = 0; f < static_cast<FaceId>(h.faces().size()); ++f) {
        for (const Corner& c : h.faces()[f].corners) {
            if (c.angle != 180) continue;
            // The face lies to the left of the travel direction.
            flats.push_back({c.vertex, rotate_ccw(h.direction(c.in)), f});
        }
    }
    std::sort(flats.begin(), flats.end(), [](const FlatAngle& a, const FlatAngle& b) {
        return std::pair(a.vertex, a.opening) < std::pair(b.vertex, b.opening);
    });
    return flats;
}

bool is_connected(const RectilinearRepresentation& h) {
    const int n = h.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (Direction d : kDirections) {
            const VertexId w = h.neighbor(v, d);
            if (w != kNone && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_biconnected(const RectilinearRepresentation& h) {
    const int n = h.vertex_count();
    if (n < 3 || !is_connected(h)) return false;
    // Articulation points by DFS low-link.
    std::vector<int> order(n, -1), low(n, 0);
    int counter = 0;
    bool articulation = false;
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        order[v] = low[v] = counter++;
        int children = 0;
        for (Direction d : kDirections) {
            const VertexId w = h.neighbor(v, d);
            if (w == kNone || w == parent) continue;
            if (order[w] >= 0) {
                low[v] = std::min(low[v], order[w]);
                continue;
            }
            ++children;
            dfs(w, v);
            low[v] = std::min(low[v], low[w]);
            if (parent != kNone && low[w] >= order[v]) articulation = true;
        }
        if (parent == kNone && children > 1) articulation = true;
    };
    dfs(0, kNone);
    return !articulation;
}

bool is_tree(const RectilinearRepresentation& h) {
    return h.edge_count() == h.vertex_count() - 1;
}

int count_leaves(const RectilinearRepresentation& h) {
    int leaves = 0;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 1) ++leaves;
    return leaves;
}

RectilinearRepresentation rotate_quarter(const RectilinearRepresentation& h) {
    std::vector<Edge> rotated;
    rotated.reserve(h.edges().size());
    for (const Edge& e : h.edges()) {
        if (e.dir == EdgeDir::East)
            rotated.push_back({e.u, e.v, EdgeDir::North});
        else
            rotated.push_back({e.v, e.u, EdgeDir::East});
    }
    return RectilinearRepresentation::build(h.vertex_count(), std::move(rotated));
}

std::vector<int> angle_multiset(const RectilinearRepresentation& h) {
    std::vector<int> angles;
    for (const Face& f : h.faces())
        for (const Corner& c : f.corners) angles.push_back(c.angle);
    if (h.edge_count() == 0) angles.push_back(360);
    std::sort(angles.begin(), angles.end());
    return angles;
}

}  // namespace ortho_greedy
