#include "ortho_greedy/universal.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

namespace {

Edge oriented_edge(VertexId a, VertexId b, Direction d) {
    switch (d) {
        case Direction::East: return {a, b, EdgeDir::East};
        case Direction::North: return {a, b, EdgeDir::North};
        case Direction::West: return {b, a, EdgeDir::East};
        case Direction::South: return {b, a, EdgeDir::North};
    }
    return {a, b, EdgeDir::East};
}

bool on_outer_face(const RectilinearRepresentation& h, VertexId v) {
    for (const Corner& c : h.faces()[h.external_face()].corners)
        if (c.vertex == v) return true;
    return false;
}

UniversalityVerdict require_universal(const RectilinearRepresentation& h,
                                      const char* operation) {
    auto verdict = test_universal(h);
    if (!verdict.is_universal)
        throw PreconditionError(std::string(operation) +
                                " needs a universal greedy representation");
    return verdict;
}

void check_generated(const RectilinearRepresentation& h, const char* operation) {
    if (!is_biconnected(h) || !test_universal(h).is_universal)
        throw InternalError(std::string(operation) +
                            " produced a representation that is not universal greedy");
}

// Number of steps from i to the nearest non-flat outer corner, going
// backward (step = -1) or forward (step = +1).
std::vector<int> distance_to_break(const std::vector<int>& theta, int step) {
    const int n = static_cast<int>(theta.size());
    std::vector<int> dist(n, n);
    for (int i = 0; i < n; ++i) {
        for (int s = 1; s < n; ++s) {
            if (theta[((i + step * s) % n + n) % n] != 180) {
                dist[i] = s;
                break;
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<std::vector<NodeId>> hamiltonian_path(const Digraph& d) {
    const auto& order = d.topological_order();
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const auto& out = d.out_arcs(order[i]);
        const bool joined = std::any_of(out.begin(), out.end(), [&](ArcId a) {
            return d.arc(a).head == order[i + 1];
        });
        if (!joined) return std::nullopt;
    }
    return order;
}

UniversalityVerdict test_universal(const RectilinearRepresentation& h) {
    if (!is_biconnected(h)) throw NotBiconnectedError("representation is not biconnected");
    UniversalityVerdict verdict;
    auto convexity = check_convex(h);
    if (!convexity.is_convex) {
        verdict.convexity_failure = std::move(convexity);
        return verdict;
    }
    const auto dx = ShapeDag::build(h, Axis::X);
    const auto dy = ShapeDag::build(h, Axis::Y);
    verdict.hamiltonian_x = hamiltonian_path(dx.graph());
    verdict.hamiltonian_y = hamiltonian_path(dy.graph());
    verdict.is_universal = verdict.hamiltonian_x && verdict.hamiltonian_y;
    if (verdict.is_universal) return verdict;

    const ShapeDag& d = verdict.hamiltonian_x ? dy : dx;
    const ShapeDag& other = verdict.hamiltonian_x ? dx : dy;
    const auto& order = d.graph().topological_order();
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (d.compare(order[i], order[i + 1]) == Comparison::Incomparable) {
            verdict.counterexample = conflict_between(h, d, other, order[i], order[i + 1]);
            break;
        }
    }
    if (!verdict.counterexample)
        throw InternalError("non-Hamiltonian shape DAG without an incomparable pair");
    return verdict;
}

bool staircase_oracle(const RectilinearRepresentation& h) {
    const int n = h.vertex_count();
    static constexpr std::array<std::array<Direction, 2>, 4> kQuadrants = {{
        {Direction::North, Direction::East},
        {Direction::North, Direction::West},
        {Direction::South, Direction::East},
        {Direction::South, Direction::West},
    }};
    std::vector<char> reached(n);
    std::vector<int> seen(n, -1);
    std::vector<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(reached.begin(), reached.end(), 0);
        for (int q = 0; q < 4; ++q) {
            const int stamp = s * 4 + q;
            queue.assign(1, s);
            seen[s] = stamp;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const VertexId v = queue[head];
                reached[v] = 1;
                for (Direction d : kQuadrants[q]) {
                    const VertexId w = h.neighbor(v, d);
                    if (w != kNone && seen[w] != stamp) {
                        seen[w] = stamp;
                        queue.push_back(w);
                    }
                }
            }
        }
        if (std::find(reached.begin(), reached.end(), 0) != reached.end()) return false;
    }
    return true;
}

Drawing draw_universal_min_area(std::shared_ptr<const RectilinearRepresentation> h) {
    const auto verdict = require_universal(*h, "minimum-area drawing");
    const auto dx = ShapeDag::build(*h, Axis::X);
    const auto dy = ShapeDag::build(*h, Axis::Y);
    const auto px = positions_of(*verdict.hamiltonian_x);
    const auto py = positions_of(*verdict.hamiltonian_y);
    std::vector<Point> points(h->vertex_count());
    for (VertexId v = 0; v < h->vertex_count(); ++v)
        points[v] = {px[dx.node_of(v)], py[dy.node_of(v)]};
    return Drawing::create(std::move(h), std::move(points));
}

Drawing draw_universal_min_area(const RectilinearRepresentation& h) {
    return draw_universal_min_area(std::make_shared<const RectilinearRepresentation>(h));
}

RectilinearRepresentation unit_rectangle() {
    return RectilinearRepresentation::build(4, {{0, 1, EdgeDir::East},
                                                {3, 2, EdgeDir::East},
                                                {0, 3, EdgeDir::North},
                                                {1, 2, EdgeDir::North}});
}

RectilinearRepresentation add_flat_vertex(const RectilinearRepresentation& h, EdgeId e) {
    const auto verdict = require_universal(h, "flat vertex addition");
    if (e < 0 || e >= h.edge_count()) throw IllegalOperationError("edge id out of range");
    const FaceId outer = h.external_face();
    if (h.face_of(2 * e) != outer && h.face_of(2 * e + 1) != outer)
        throw IllegalOperationError("edge " + std::to_string(e) + " is not on the outer face");

    const Edge target = h.edge(e);
    const Axis across = target.dir == EdgeDir::East ? Axis::X : Axis::Y;
    const auto dag = ShapeDag::build(h, across);
    const auto position =
        positions_of(across == Axis::X ? *verdict.hamiltonian_x : *verdict.hamiltonian_y);
    if (position[dag.node_of(target.v)] - position[dag.node_of(target.u)] != 1)
        throw IllegalOperationError("the open strip beside edge " + std::to_string(e) +
                                    " contains a vertex");

    const VertexId w = h.vertex_count();
    std::vector<Edge> edges;
    for (EdgeId f = 0; f < h.edge_count(); ++f)
        if (f != e) edges.push_back(h.edge(f));
    edges.push_back({target.u, w, target.dir});
    edges.push_back({w, target.v, target.dir});
    auto result = RectilinearRepresentation::build(w + 1, std::move(edges));
    check_generated(result, "flat vertex addition");
    return result;
}

RectilinearRepresentation add_k_reflex(const RectilinearRepresentation& h, VertexId u,
                                       VertexId v, int k, Direction first, Side side) {
    if (k < 1 || k > 4) throw IllegalOperationError("k must lie in 1..4");
    const int n = h.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw IllegalOperationError("attachment needs two distinct existing vertices");
    require_universal(h, "k-reflex vertex addition");
    if (!on_outer_face(h, u) || !on_outer_face(h, v))
        throw IllegalOperationError("attachment vertices must lie on the outer face");

    // Walk the path so that it always turns left.
    VertexId start = u, end = v;
    Direction dir = first;
    if (side == Side::Right) {
        start = v;
        end = u;
        dir = opposite(rotate_cw(first, k));
    }
    std::vector<VertexId> path{start};
    for (int i = 0; i < k; ++i) path.push_back(n + i);
    path.push_back(end);

    std::vector<Edge> edges = h.edges();
    for (int i = 0; i <= k; ++i)
        edges.push_back(oriented_edge(path[i], path[i + 1], rotate_ccw(dir, i)));

    std::optional<RectilinearRepresentation> result;
    try {
        result.emplace(RectilinearRepresentation::build(n + k, std::move(edges)));
    } catch (const ValidationError& e) {
        throw IllegalOperationError(std::string("attachment is not a valid representation: ") +
                                    e.what());
    }
    if (result->internal_face_count() != h.internal_face_count() + 1 ||
        result->face_of(result->slot(start, dir)) == result->external_face())
        throw IllegalOperationError("attachment does not create a new internal face");
    if (!check_convex(*result).is_convex)
        throw IllegalOperationError("attachment leaves a non-convex representation");
    check_generated(*result, "k-reflex vertex addition");
    return std::move(*result);
}

int primitive_kind(const Primitive& p) {
    if (const auto* r = std::get_if<ReflexAddition>(&p)) return r->k;
    return 0;
}

std::vector<Primitive> legal_primitives(const RectilinearRepresentation& h) {
    const auto verdict = require_universal(h, "primitive enumeration");
    const auto dx = ShapeDag::build(h, Axis::X);
    const auto dy = ShapeDag::build(h, Axis::Y);
    const auto px = positions_of(*verdict.hamiltonian_x);
    const auto py = positions_of(*verdict.hamiltonian_y);
    std::vector<Primitive> out;

    const FaceId outer = h.external_face();
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (h.face_of(2 * e) != outer && h.face_of(2 * e + 1) != outer) continue;
        const Edge& ed = h.edge(e);
        const bool empty_strip = ed.dir == EdgeDir::East
                                     ? px[dx.node_of(ed.v)] - px[dx.node_of(ed.u)] == 1
                                     : py[dy.node_of(ed.v)] - py[dy.node_of(ed.u)] == 1;
        if (empty_strip) out.push_back(FlatAddition{e});
    }

    // Outer walk: vertex i is the tail of walk[i]; theta[i] is its outer angle.
    const Face& face = h.faces()[outer];
    const int len = static_cast<int>(face.walk.size());
    std::vector<VertexId> vert(len);
    std::vector<Direction> dirs(len);
    std::vector<int> theta(len);
    for (int i = 0; i < len; ++i) {
        vert[i] = h.tail(face.walk[i]);
        dirs[i] = h.direction(face.walk[i]);
        theta[i] = face.corners[(i - 1 + len) % len].angle;
    }
    const auto back = distance_to_break(theta, -1);
    const auto ahead = distance_to_break(theta, +1);

    // A new path runs from vertex q back to vertex p, closing a rectangle with
    // the boundary chain p -> q. Corners of that rectangle: the chain's inner
    // corners with outer angle 90, plus turns at q and p, plus the k new ones.
    for (int p = 0; p < len; ++p) {
        int right_angles = 0;
        for (int chain = 1; chain < len; ++chain) {
            const int q = (p + chain) % len;
            if (chain >= 2) {
                const int inner = (p + chain - 1) % len;
                if (theta[inner] == 270) break;
                if (theta[inner] == 90) ++right_angles;
            }
            if (right_angles > 3) break;
            const int rest = len - chain;  // steps from q forward to p
            for (int turn_q : {0, 90}) {
                if (theta[q] < 270 - turn_q) continue;
                const Direction arrive_q = dirs[(q - 1 + len) % len];
                const Direction d1 = turn_q ? rotate_ccw(arrive_q) : arrive_q;
                for (int turn_p : {0, 90}) {
                    const int k = 4 - right_angles - turn_p / 90 - turn_q / 90;
                    if (k < 1) continue;
                    if (theta[p] < 270 - turn_p) continue;
                    const Direction arrive_p = rotate_ccw(d1, k);
                    if (dirs[p] != (turn_p ? rotate_ccw(arrive_p) : arrive_p)) continue;
                    const int new_p = theta[p] - (180 - turn_p);
                    const int new_q = theta[q] - (180 - turn_q);
                    bool reflex_side = false;
                    if (new_p == 90) {
                        reflex_side = back[p] < rest ? theta[(p - back[p] + len) % len] == 90
                                                     : new_q == 90;
                    }
                    if (new_q == 90 && !reflex_side) {
                        reflex_side = ahead[q] < rest ? theta[(q + ahead[q]) % len] == 90
                                                      : new_p == 90;
                    }
                    if (reflex_side) continue;
                    out.push_back(ReflexAddition{vert[q], vert[p], k, d1, Side::Left});
                }
            }
        }
    }
    return out;
}

RectilinearRepresentation apply_primitive(const RectilinearRepresentation& h,
                                          const Primitive& p) {
    if (const auto* f = std::get_if<FlatAddition>(&p)) return add_flat_vertex(h, f->edge);
    const auto& r = std::get<ReflexAddition>(p);
    return add_k_reflex(h, r.u, r.v, r.k, r.first, r.side);
}

RectilinearRepresentation generate_universal(std::uint64_t seed, int steps) {
    std::mt19937_64 rng(seed);
    auto h = unit_rectangle();
    for (int step = 0; step < steps; ++step) {
        const auto moves = legal_primitives(h);
        if (moves.empty()) continue;
        h = apply_primitive(h, moves[rng() % moves.size()]);
    }
    return h;
}

namespace {

std::optional<RectilinearRepresentation> extend_sequence(const RectilinearRepresentation& h,
                                                         const std::vector<int>& kinds,
                                                         std::size_t next) {
    if (next == kinds.size()) return h;
    for (const Primitive& p : legal_primitives(h)) {
        if (primitive_kind(p) != kinds[next]) continue;
        if (auto done = extend_sequence(apply_primitive(h, p), kinds, next + 1)) return done;
    }
    return std::nullopt;
}

}  // namespace

RectilinearRepresentation generate_sequence(const std::vector<int>& kinds) {
    auto h = extend_sequence(unit_rectangle(), kinds, 0);
    if (!h) throw IllegalOperationError("no legal primitive sequence of the requested kinds");
    return *h;
}

}  // namespace ortho_greedy
