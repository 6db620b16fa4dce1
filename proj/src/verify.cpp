#include "ortho_greedy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

namespace {

using boost::multiprecision::cpp_int;

std::vector<VertexId> neighbors(const RectilinearRepresentation& h, VertexId v) {
    std::vector<VertexId> out;
    for (Direction d : kDirections)
        if (const VertexId w = h.neighbor(v, d); w != kNone) out.push_back(w);
    return out;
}

cpp_int to_big(Wide value) {
    const bool negative = value < 0;
    unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value)
                                           : static_cast<unsigned __int128>(value);
    cpp_int out = static_cast<std::uint64_t>(magnitude >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(magnitude);
    return negative ? cpp_int(-out) : out;
}

// Vertices sorted by squared distance to t, nearest first.
std::vector<VertexId> by_distance(const std::vector<Wide>& dist) {
    std::vector<VertexId> order(dist.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return dist[a] < dist[b]; });
    return order;
}

}  // namespace

GreedyReport is_greedy(const Drawing& drawing) {
    const auto& h = drawing.representation();
    const int n = h.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (VertexId v = 0; v < n; ++v) adj[v] = neighbors(h, v);

    GreedyReport report;
    std::vector<Wide> dist(n);
    std::vector<char> reaches(n);
    for (VertexId t = 0; t < n; ++t) {
        for (VertexId v = 0; v < n; ++v) dist[v] = squared_distance(drawing.at(v), drawing.at(t));
        for (VertexId v : by_distance(dist)) {
            if (v == t) {
                reaches[v] = 1;
                continue;
            }
            bool closer = false;
            reaches[v] = 0;
            for (VertexId u : adj[v]) {
                if (dist[u] < dist[v]) {
                    closer = true;
                    if (reaches[u]) reaches[v] = 1;
                }
            }
            if (!closer) report.stuck_pairs.emplace_back(v, t);
            if (!reaches[v]) report.method_a = false;
        }
    }
    std::sort(report.stuck_pairs.begin(), report.stuck_pairs.end());

    for (VertexId v = 0; v < n; ++v) {
        const auto cell = cell_geometry(drawing, v);
        for (VertexId z = 0; z < n; ++z)
            if (z != v && cell.contains(drawing.at(z).x, drawing.at(z).y))
                report.cell_violations.emplace_back(v, z);
    }
    report.method_b = report.cell_violations.empty();
    report.is_greedy = report.method_a && report.method_b;
    return report;
}

std::vector<bool> conflicts_satisfied(const Drawing& drawing,
                                      const std::vector<Conflict>& conflicts) {
    std::vector<bool> out;
    for (const Conflict& c : conflicts) {
        const Point& a = drawing.at(c.lower_vertex);
        const Point& b = drawing.at(c.upper_vertex);
        const bool a_in_b = cell_geometry(drawing, c.upper_vertex).contains(a.x, a.y);
        const bool b_in_a = cell_geometry(drawing, c.lower_vertex).contains(b.x, b.y);
        out.push_back(!a_in_b && !b_in_a);
    }
    return out;
}

bool CellGeometry::contains(Wide x, Wide y, Wide den) const {
    for (const HalfPlane& p : half_planes)
        if (p.a * x + p.b * y > p.c * den) return false;
    return true;
}

CellGeometry cell_geometry(const Drawing& drawing, VertexId v) {
    const auto& h = drawing.representation();
    const Point& pv = drawing.at(v);
    CellGeometry cell;
    cell.vertex = v;
    for (Direction d : kDirections) {
        const VertexId u = h.neighbor(v, d);
        if (u == kNone) continue;
        const Point& pu = drawing.at(u);
        const Wide a = 2 * (Wide{pu.x} - pv.x);
        const Wide b = 2 * (Wide{pu.y} - pv.y);
        const Wide c = Wide{pu.x} * pu.x + Wide{pu.y} * pu.y - Wide{pv.x} * pv.x -
                       Wide{pv.y} * pv.y;
        cell.half_planes.push_back({a, b, c});
        switch (d) {
            case Direction::East: cell.east2 = Wide{pv.x} + pu.x; break;
            case Direction::West: cell.west2 = Wide{pv.x} + pu.x; break;
            case Direction::North: cell.north2 = Wide{pv.y} + pu.y; break;
            case Direction::South: cell.south2 = Wide{pv.y} + pu.y; break;
        }
    }
    return cell;
}

DilationReport dilation(const Drawing& drawing) {
    if (!is_greedy(drawing).is_greedy)
        throw PreconditionError("dilation is defined for greedy drawings only");
    const auto& h = drawing.representation();
    const int n = h.vertex_count();
    DilationReport report;
    report.path_length = 0;
    report.squared_distance = 1;
    cpp_int best_path = 0, best_d2 = 1;
    bool have = false;

    std::vector<Wide> dist(n);
    std::vector<Wide> shortest(n);
    for (VertexId t = 0; t < n; ++t) {
        for (VertexId v = 0; v < n; ++v) dist[v] = squared_distance(drawing.at(v), drawing.at(t));
        for (VertexId v : by_distance(dist)) {
            if (v == t) {
                shortest[v] = 0;
                continue;
            }
            Wide best = -1;
            for (Direction d : kDirections) {
                const VertexId u = h.neighbor(v, d);
                if (u == kNone || dist[u] >= dist[v]) continue;
                const Point& a = drawing.at(u);
                const Point& b = drawing.at(v);
                const Wide length = (a.x > b.x ? a.x - b.x : b.x - a.x) +
                                    (a.y > b.y ? a.y - b.y : b.y - a.y);
                if (best < 0 || length + shortest[u] < best) best = length + shortest[u];
            }
            shortest[v] = best;
            // Compare best / sqrt(dist) against the current maximum exactly.
            const cpp_int p = to_big(best);
            const cpp_int d2 = to_big(dist[v]);
            if (!have || p * p * best_d2 > best_path * best_path * d2) {
                have = true;
                best_path = p;
                best_d2 = d2;
                report.source = v;
                report.target = t;
                report.path_length = best;
                report.squared_distance = dist[v];
            }
        }
    }
    if (have) {
        report.ratio = static_cast<double>(report.path_length) /
                       std::sqrt(static_cast<double>(report.squared_distance));
        report.within_bound = best_path * best_path <= 18 * best_d2;
    }
    return report;
}

bool right_corner_boxes_empty(const Drawing& drawing) {
    const auto& h = drawing.representation();
    for (const Face& f : h.faces()) {
        for (const Corner& c : f.corners) {
            if (c.angle != 90) continue;
            const Point& a = drawing.at(h.tail(c.in));
            const Point& b = drawing.at(h.head(c.out));
            const Coord x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
            const Coord y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
            for (const Point& p : drawing.points())
                if (x0 < p.x && p.x < x1 && y0 < p.y && p.y < y1) return false;
        }
    }
    return true;
}

}  // namespace ortho_greedy
