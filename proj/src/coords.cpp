#include "ortho_greedy/coords.hpp"

#include <algorithm>
#include <future>
#include <queue>
#include <string>

#include "ortho_greedy/errors.hpp"
#include "ortho_greedy/ordering.hpp"

namespace ortho_greedy {

int InequalitySystem::coefficient(int i, int j) const {
    if (i == j) return 1;
    const IntervalConstraint& c = intervals[i];
    if (c.trivial) return 0;
    if ((c.left_start <= j && j < i) || (i < j && j < c.right_end)) return -1;
    return 0;
}

Matrix matrix_a(const InequalitySystem& sys) {
    const int k = sys.size();
    Matrix a(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        a[i][i] = 1;
        const auto& c = sys.intervals[i];
        if (!c.trivial)
            for (int j = c.left_start; j < i; ++j) a[i][j] = -1;
    }
    return a;
}

Matrix matrix_b(const InequalitySystem& sys) {
    const int k = sys.size();
    Matrix b(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        b[i][i] = 1;
        const auto& c = sys.intervals[i];
        if (!c.trivial)
            for (int j = i + 1; j < c.right_end; ++j) b[i][j] = -1;
    }
    return b;
}

Matrix matrix_c(const InequalitySystem& sys) {
    const int k = sys.size();
    Matrix c(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) c[i][j] = sys.coefficient(i, j);
    return c;
}

InequalitySystem build_system(const RectilinearRepresentation& h, const ShapeDag& d,
                              const ShapeDag& other, const std::vector<NodeId>& ordering) {
    const int m = d.node_count();
    if (static_cast<int>(ordering.size()) != m)
        throw PreconditionError("ordering length differs from node count");
    InequalitySystem sys;
    sys.axis = d.axis();
    sys.ordering = ordering;
    sys.intervals.assign(std::max(m - 1, 0), IntervalConstraint{});

    const auto position = positions_of(ordering);
    auto conflicts = axis_conflicts(h, d, other);
    mark_minimal(conflicts, d.axis(), ordering);

    const Direction forward = d.axis() == Axis::X ? Direction::East : Direction::North;
    for (const Conflict& c : conflicts) {
        if (!c.is_minimal.value_or(false)) continue;
        const int i = std::min(position[c.lower_node], position[c.upper_node]);
        const int j = std::max(position[c.lower_node], position[c.upper_node]);
        if (j != i + 1)
            throw InternalError("minimal " + std::string(axis_name(d.axis())) +
                                "-conflict joins non-consecutive positions " +
                                std::to_string(i) + " and " + std::to_string(j));
        const bool lower_first = ordering[i] == c.lower_node;
        const VertexId u = lower_first ? c.lower_vertex : c.upper_vertex;
        const VertexId w = lower_first ? c.upper_vertex : c.lower_vertex;
        const VertexId u_next = h.neighbor(u, forward);
        const VertexId w_prev = h.neighbor(w, opposite(forward));
        if (u_next == kNone || w_prev == kNone)
            throw InternalError("responsible vertex lacks the edge defining its inequality");
        const int left = position[d.node_of(w_prev)];
        const int right = position[d.node_of(u_next)];
        if (left > i - 1 || right < i + 2)
            throw InternalError("degenerate inequality for interval " + std::to_string(i));
        sys.intervals[i] = {false, left, right};
    }
    return sys;
}

std::vector<int> relation_order(const InequalitySystem& sys) {
    const int k = sys.size();
    std::vector<int> indegree(k, 0);
    std::vector<std::vector<int>> dependents(k);
    for (int i = 0; i < k; ++i) {
        const auto& c = sys.intervals[i];
        if (c.trivial) continue;
        for (int j = 0; j < k; ++j) {
            if (j == i || sys.coefficient(i, j) != -1) continue;
            dependents[j].push_back(i);
            ++indegree[i];
        }
    }
    std::queue<int> ready;
    for (int i = 0; i < k; ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        const int j = ready.front();
        ready.pop();
        order.push_back(j);
        for (int i : dependents[j])
            if (--indegree[i] == 0) ready.push(i);
    }
    if (static_cast<int>(order.size()) != k)
        throw InvalidOrderingError("relation graph of the " + std::string(axis_name(sys.axis)) +
                                   "-system has a cycle; the ordering is not good");
    return order;
}

namespace {

BigInt range_sum(const std::vector<BigInt>& x, int from, int to) {
    BigInt s = 0;
    for (int j = from; j < to; ++j) s += x[j];
    return s;
}

}  // namespace

std::vector<BigInt> solve_min(const InequalitySystem& sys) {
    std::vector<BigInt> x(sys.size(), 0);
    for (int i : relation_order(sys)) {
        const auto& c = sys.intervals[i];
        if (c.trivial) {
            x[i] = 1;
        } else {
            const BigInt left = range_sum(x, c.left_start, i);
            const BigInt right = range_sum(x, i + 1, c.right_end);
            x[i] = (left > right ? left : right) + 1;
        }
    }
    return x;
}

std::vector<BigInt> solve_unit(const InequalitySystem& sys) {
    std::vector<BigInt> x(sys.size(), 0);
    for (int i : relation_order(sys)) {
        const auto& c = sys.intervals[i];
        x[i] = 1;
        if (!c.trivial) x[i] += range_sum(x, c.left_start, i) + range_sum(x, i + 1, c.right_end);
    }
    return x;
}

bool satisfies(const InequalitySystem& sys, const std::vector<BigInt>& x) {
    if (static_cast<int>(x.size()) != sys.size()) return false;
    for (int i = 0; i < sys.size(); ++i) {
        if (x[i] < 1) return false;
        const auto& c = sys.intervals[i];
        if (c.trivial) continue;
        if (x[i] <= range_sum(x, c.left_start, i)) return false;
        if (x[i] <= range_sum(x, i + 1, c.right_end)) return false;
    }
    return true;
}

std::vector<BigInt> node_coordinates(const InequalitySystem& sys, const std::vector<BigInt>& x) {
    std::vector<BigInt> coordinate(sys.ordering.size(), 0);
    BigInt running = 0;
    for (std::size_t p = 0; p < sys.ordering.size(); ++p) {
        coordinate[sys.ordering[p]] = running;
        if (p < x.size()) running += x[p];
    }
    return coordinate;
}

AxisSolution solve_axis(const RectilinearRepresentation& h, const ShapeDag& d,
                        const ShapeDag& other, const std::vector<NodeId>& ordering) {
    AxisSolution s;
    s.system = build_system(h, d, other, ordering);
    s.intervals = solve_min(s.system);
    s.coordinate = node_coordinates(s.system, s.intervals);
    return s;
}

Drawing assemble_drawing(std::shared_ptr<const RectilinearRepresentation> h, const ShapeDag& dx,
                         const AxisSolution& x, const ShapeDag& dy, const AxisSolution& y) {
    const BigInt limit = kMaxCoordinate;
    std::vector<Point> points(h->vertex_count());
    for (VertexId v = 0; v < h->vertex_count(); ++v) {
        const BigInt& px = x.coordinate[dx.node_of(v)];
        const BigInt& py = y.coordinate[dy.node_of(v)];
        if (px > limit || py > limit)
            throw CoordinateOverflowError("drawing coordinates exceed 2^40");
        points[v] = {static_cast<Coord>(px), static_cast<Coord>(py)};
    }
    return Drawing::create(std::move(h), std::move(points));
}

Drawing draw_general(std::shared_ptr<const RectilinearRepresentation> h,
                     const std::vector<NodeId>& order_x, const std::vector<NodeId>& order_y) {
    const auto dx = ShapeDag::build(*h, Axis::X);
    const auto dy = ShapeDag::build(*h, Axis::Y);
    for (const auto* pair : {&order_x, &order_y}) {
        const ShapeDag& d = pair == &order_x ? dx : dy;
        if (!check_good(d.graph(), *pair).is_good())
            throw InvalidOrderingError(std::string("ordering of D_") + axis_name(d.axis()) +
                                       " is not good");
    }
    auto fx = std::async(std::launch::async, [&] { return solve_axis(*h, dx, dy, order_x); });
    auto sy = solve_axis(*h, dy, dx, order_y);
    auto sx = fx.get();
    return assemble_drawing(std::move(h), dx, sx, dy, sy);
}

namespace {

std::vector<VertexId> tree_path(const std::vector<std::vector<VertexId>>& adj, VertexId from,
                                VertexId to) {
    std::vector<VertexId> parent(adj.size(), kNone);
    std::vector<VertexId> queue{from};
    parent[from] = from;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (VertexId w : adj[queue[i]])
            if (parent[w] == kNone) {
                parent[w] = queue[i];
                queue.push_back(w);
            }
    std::vector<VertexId> path;
    for (VertexId v = to; v != from; v = parent[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

Drawing draw_tree(const RectilinearRepresentation& tree) {
    if (!is_tree(tree)) throw PreconditionError("draw_tree needs a tree");
    const int n = tree.vertex_count();
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v)
        if (tree.degree(v) == 1) leaves.push_back(v);
    if (leaves.size() > 4)
        throw NotRealizableError("a tree with more than four leaves has no greedy "
                                 "rectilinear drawing");

    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : tree.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    std::vector<Point> points(n);
    if (n > 1) {
        bool placed = false;
        for (std::size_t a = 0; a < leaves.size() && !placed; ++a) {
            for (std::size_t b = a + 1; b < leaves.size() && !placed; ++b) {
                const auto spine = tree_path(adj, leaves[a], leaves[b]);
                std::vector<int> owner(n, -1);  // 0 spine, 1 north, 2 south
                for (std::size_t i = 0; i < spine.size(); ++i) {
                    owner[spine[i]] = 0;
                    points[spine[i]] = {static_cast<Coord>(i), 0};
                }
                bool ok = true;
                int branch = 0;
                for (std::size_t c = 0; c < leaves.size() && ok; ++c) {
                    if (c == a || c == b) continue;
                    ++branch;
                    // Climb from the leaf until the spine is reached.
                    const auto full = tree_path(adj, leaves[c], spine.front());
                    std::vector<VertexId> hanging;
                    VertexId anchor = kNone;
                    for (VertexId v : full) {
                        if (owner[v] == 0) {
                            anchor = v;
                            break;
                        }
                        if (owner[v] != -1) ok = false;
                        hanging.push_back(v);
                    }
                    if (!ok) break;
                    const Coord sign = branch == 1 ? 1 : -1;
                    for (std::size_t i = 0; i < hanging.size(); ++i) {
                        const VertexId v = hanging[hanging.size() - 1 - i];
                        owner[v] = branch;
                        points[v] = {points[anchor].x, sign * static_cast<Coord>(i + 1)};
                    }
                }
                placed = ok;
            }
        }
        if (!placed) throw InternalError("no spine decomposition found for the tree");
    }

    std::vector<Edge> edges;
    for (const Edge& e : tree.edges()) {
        const Point& p = points[e.u];
        const Point& q = points[e.v];
        if (p.y == q.y)
            edges.push_back(p.x < q.x ? Edge{e.u, e.v, EdgeDir::East} : Edge{e.v, e.u, EdgeDir::East});
        else
            edges.push_back(p.y < q.y ? Edge{e.u, e.v, EdgeDir::North}
                                      : Edge{e.v, e.u, EdgeDir::North});
    }
    auto rep = std::make_shared<const RectilinearRepresentation>(
        RectilinearRepresentation::build(n, std::move(edges)));
    return Drawing::create(std::move(rep), std::move(points));
}

ExponentialFixture build_exponential_fixture(int q) {
    if (q < 2) throw PreconditionError("exponential fixture needs q >= 2");
    ExponentialFixture f{RectilinearRepresentation::build(1, {}),
                         std::vector<VertexId>(q + 1, kNone), std::vector<VertexId>(q + 1, kNone),
                         std::vector<VertexId>(q + 1, kNone), std::vector<VertexId>(q + 1, kNone)};
    int next = 0;
    for (int i = 1; i <= q; ++i) {
        if (i >= 2) f.u[i] = next++;
        if (i <= q - 1) f.w[i] = next++;
        f.z[i] = next++;
        f.v[i] = next++;
    }
    std::vector<Edge> edges;
    for (int i = 1; i < q; ++i) edges.push_back({f.v[i], f.v[i + 1], EdgeDir::North});
    for (int i = 1; i <= q; ++i) {
        if (i >= 2) edges.push_back({f.u[i], i <= q - 1 ? f.w[i] : f.z[i], EdgeDir::East});
        if (i <= q - 1) edges.push_back({f.w[i], f.z[i], EdgeDir::East});
        edges.push_back({f.z[i], f.v[i], EdgeDir::East});
    }
    for (int i = 1; i < q; ++i) edges.push_back({f.w[i], f.u[i + 1], EdgeDir::North});
    f.representation = RectilinearRepresentation::build(next, std::move(edges));
    return f;
}

}  // namespace ortho_greedy
