#include "support.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "ortho_greedy/verify.hpp"

namespace support {

std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

RectilinearRepresentation fixture(const std::string& name) {
    return load_representation(fixture_path(name));
}

Drawing drawing_fixture(const std::string& name) { return load_drawing(fixture_path(name)); }

Digraph random_series_parallel(std::mt19937_64& rng, int operations) {
    std::vector<Arc> arcs{{0, 1}};
    int nodes = 2;
    for (int i = 0; i < operations; ++i) {
        const std::size_t a = rng() % arcs.size();
        if (rng() % 2 == 0) {
            const NodeId mid = nodes++;
            const Arc old = arcs[a];
            arcs[a] = {old.tail, mid};
            arcs.push_back({mid, old.head});
        } else {
            arcs.push_back(arcs[a]);
        }
    }
    return Digraph(nodes, std::move(arcs));
}

std::optional<Polyomino> random_polyomino(std::mt19937_64& rng, int cells, int box) {
    std::set<std::pair<int, int>> in{{0, 0}};
    const int dx[] = {1, -1, 0, 0};
    const int dy[] = {0, 0, 1, -1};
    for (int attempts = 0; static_cast<int>(in.size()) < cells && attempts < 50 * cells; ++attempts) {
        auto it = in.begin();
        std::advance(it, rng() % in.size());
        const int k = static_cast<int>(rng() % 4);
        const std::pair<int, int> c{it->first + dx[k], it->second + dy[k]};
        if (c.first < 0 || c.second < 0 || c.first >= box || c.second >= box) continue;
        in.insert(c);
    }
    auto filled = [&](int x, int y) { return in.count({x, y}) > 0; };

    // Holes: empty cells of the padded box not reachable from outside.
    std::set<std::pair<int, int>> outside;
    std::vector<std::pair<int, int>> stack{{-1, -1}};
    outside.insert({-1, -1});
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
            const int nx = x + dx[k], ny = y + dy[k];
            if (nx < -1 || ny < -1 || nx > box || ny > box || filled(nx, ny)) continue;
            if (outside.insert({nx, ny}).second) stack.push_back({nx, ny});
        }
    }
    if (static_cast<int>(outside.size() + in.size()) != (box + 2) * (box + 2)) return std::nullopt;
    for (int x = -1; x < box; ++x)
        for (int y = -1; y < box; ++y) {
            const bool a = filled(x, y), b = filled(x + 1, y + 1);
            const bool c = filled(x + 1, y), d = filled(x, y + 1);
            if ((a && b && !c && !d) || (c && d && !a && !b)) return std::nullopt;
        }

    std::vector<Point> points;
    std::map<std::pair<int, int>, VertexId> id;
    auto vertex = [&](int x, int y) {
        auto [it, fresh] = id.try_emplace({x, y}, static_cast<VertexId>(id.size()));
        if (fresh) points.push_back({x, y});
        return it->second;
    };
    std::set<Edge> edges;
    for (auto [x, y] : in) {
        const VertexId a = vertex(x, y), b = vertex(x + 1, y);
        const VertexId c = vertex(x + 1, y + 1), d = vertex(x, y + 1);
        edges.insert({a, b, EdgeDir::East});
        edges.insert({d, c, EdgeDir::East});
        edges.insert({a, d, EdgeDir::North});
        edges.insert({b, c, EdgeDir::North});
    }
    auto rep = RectilinearRepresentation::build(static_cast<int>(points.size()),
                                                std::vector<Edge>(edges.begin(), edges.end()));

    std::map<int, std::vector<int>> rows, columns;
    for (auto [x, y] : in) {
        rows[y].push_back(x);
        columns[x].push_back(y);
    }
    auto contiguous = [](const std::map<int, std::vector<int>>& lines) {
        for (const auto& [k, v] : lines)
            if (v.back() - v.front() + 1 != static_cast<int>(v.size())) return false;
        return true;
    };
    return Polyomino{{in.begin(), in.end()}, std::move(rep), std::move(points),
                     contiguous(rows) && contiguous(columns)};
}

Dissection random_dissection(std::mt19937_64& rng, int width, int height, int splits) {
    struct Box {
        int x0, y0, x1, y1;
    };
    std::vector<Box> boxes{{0, 0, width, height}};
    for (int s = 0, attempts = 0; s < splits && attempts < 20 * splits; ++attempts) {
        Box& b = boxes[rng() % boxes.size()];
        const bool vertical = rng() % 2 == 0;
        const int lo = vertical ? b.x0 : b.y0, hi = vertical ? b.x1 : b.y1;
        if (hi - lo < 2) continue;
        const int at = lo + 1 + static_cast<int>(rng() % (hi - lo - 1));
        Box other = b;
        if (vertical) {
            other.x0 = at;
            b.x1 = at;
        } else {
            other.y0 = at;
            b.y1 = at;
        }
        boxes.push_back(other);
        ++s;
    }

    std::map<std::pair<int, int>, VertexId> id;
    std::vector<Point> points;
    for (const Box& b : boxes)
        for (auto corner : {std::pair{b.x0, b.y0}, {b.x1, b.y0}, {b.x0, b.y1}, {b.x1, b.y1}})
            if (id.try_emplace(corner, static_cast<VertexId>(id.size())).second)
                points.push_back({corner.first, corner.second});

    std::set<Edge> edges;
    auto side = [&](int x0, int y0, int x1, int y1) {
        std::vector<std::pair<int, int>> on;
        for (const auto& [p, v] : id)
            if (p.first >= x0 && p.first <= x1 && p.second >= y0 && p.second <= y1) on.push_back(p);
        std::sort(on.begin(), on.end());
        for (std::size_t i = 0; i + 1 < on.size(); ++i)
            edges.insert({id[on[i]], id[on[i + 1]], y0 == y1 ? EdgeDir::East : EdgeDir::North});
    };
    for (const Box& b : boxes) {
        side(b.x0, b.y0, b.x1, b.y0);
        side(b.x0, b.y1, b.x1, b.y1);
        side(b.x0, b.y0, b.x0, b.y1);
        side(b.x1, b.y0, b.x1, b.y1);
    }
    auto rep = RectilinearRepresentation::build(static_cast<int>(points.size()),
                                                std::vector<Edge>(edges.begin(), edges.end()));
    return Dissection{std::move(rep), std::move(points)};
}

std::vector<Point> points_from_node_coordinates(const RectilinearRepresentation& h,
                                                const ShapeDag& dx,
                                                const std::vector<Coord>& x,
                                                const ShapeDag& dy,
                                                const std::vector<Coord>& y) {
    std::vector<Point> points(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        points[v] = {x[dx.node_of(v)], y[dy.node_of(v)]};
    return points;
}

std::optional<std::vector<Coord>> search_greedy_x(const RectilinearRepresentation& h,
                                                  const ShapeDag& dx, const ShapeDag& dy,
                                                  const std::vector<Coord>& y, Coord width) {
    const int m = dx.node_count();
    auto rep = std::make_shared<const RectilinearRepresentation>(h);
    std::vector<Coord> x(m, 0);
    while (true) {
        auto points = points_from_node_coordinates(h, dx, x, dy, y);
        if (drawing_issues(h, points).empty()) {
            auto d = Drawing::create(rep, std::move(points));
            if (is_greedy(d).is_greedy) return x;
        }
        int i = 0;
        while (i < m && x[i] == width) x[i++] = 0;
        if (i == m) return std::nullopt;
        ++x[i];
    }
}

std::vector<std::vector<BigInt>> brute_force_solutions(const InequalitySystem& sys, int bound) {
    const int k = sys.size();
    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> x(k, 1);
    while (true) {
        if (satisfies(sys, x)) out.push_back(x);
        int i = 0;
        while (i < k && x[i] == bound) x[i++] = 1;
        if (i == k) return out;
        ++x[i];
    }
}

Drawing perturb(const Drawing& d, std::mt19937_64& rng, Coord max_gap) {
    std::map<Coord, Coord> xs, ys;
    for (const Point& p : d.points()) {
        xs[p.x];
        ys[p.y];
    }
    std::uniform_int_distribution<Coord> gap(1, max_gap);
    Coord at = 0;
    for (auto& [k, v] : xs) v = (at += gap(rng));
    at = 0;
    for (auto& [k, v] : ys) v = (at += gap(rng));
    std::vector<Point> points;
    for (const Point& p : d.points()) points.push_back({xs[p.x], ys[p.y]});
    return Drawing::create(d.shared_representation(), std::move(points));
}

RectilinearRepresentation random_tree(std::mt19937_64& rng, int vertices, int max_leaves) {
    std::vector<std::array<bool, 4>> used(1, {false, false, false, false});
    std::vector<Edge> edges;
    std::vector<int> degree(1, 0);
    while (static_cast<int>(used.size()) < vertices) {
        const VertexId at = static_cast<VertexId>(rng() % used.size());
        const int d = static_cast<int>(rng() % 4);
        if (used[at][d]) continue;
        int leaves = 0;
        for (int deg : degree) leaves += deg <= 1;
        if (used.size() > 2 && degree[at] != 1 && leaves + 1 > max_leaves) continue;
        const VertexId fresh = static_cast<VertexId>(used.size());
        used.push_back({false, false, false, false});
        degree.push_back(1);
        ++degree[at];
        used[at][d] = true;
        used[fresh][(d + 2) % 4] = true;
        const Direction dir = static_cast<Direction>(d);
        if (dir == Direction::East) edges.push_back({at, fresh, EdgeDir::East});
        if (dir == Direction::West) edges.push_back({fresh, at, EdgeDir::East});
        if (dir == Direction::North) edges.push_back({at, fresh, EdgeDir::North});
        if (dir == Direction::South) edges.push_back({fresh, at, EdgeDir::North});
    }
    return RectilinearRepresentation::build(vertices, edges);
}


}  // namespace support
