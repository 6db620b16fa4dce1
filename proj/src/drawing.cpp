#include "ortho_greedy/drawing.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

namespace {

std::string point_text(const Point& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

Drawing Drawing::create(std::shared_ptr<const RectilinearRepresentation> rep,
                        std::vector<Point> points) {
    auto issues = drawing_issues(*rep, points);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return Drawing(std::move(rep), std::move(points));
}

Coord Drawing::width() const {
    auto [lo, hi] = std::minmax_element(points_.begin(), points_.end(),
                                        [](const Point& a, const Point& b) { return a.x < b.x; });
    return hi->x - lo->x;
}

Coord Drawing::height() const {
    auto [lo, hi] = std::minmax_element(points_.begin(), points_.end(),
                                        [](const Point& a, const Point& b) { return a.y < b.y; });
    return hi->y - lo->y;
}

std::vector<std::string> drawing_issues(const RectilinearRepresentation& rep,
                                        const std::vector<Point>& points) {
    std::vector<std::string> issues;
    if (static_cast<int>(points.size()) != rep.vertex_count()) {
        issues.push_back("expected " + std::to_string(rep.vertex_count()) +
                         " coordinates, got " + std::to_string(points.size()));
        return issues;
    }
    for (VertexId v = 0; v < rep.vertex_count(); ++v) {
        const Point& p = points[v];
        if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
            p.y < -kMaxCoordinate)
            issues.push_back("vertex " + std::to_string(v) + " coordinate out of range");
    }
    if (!issues.empty()) return issues;

    for (EdgeId e = 0; e < rep.edge_count(); ++e) {
        const Edge& ed = rep.edge(e);
        const Point& a = points[ed.u];
        const Point& b = points[ed.v];
        const bool ok = ed.dir == EdgeDir::East ? (a.y == b.y && a.x < b.x)
                                                : (a.x == b.x && a.y < b.y);
        if (!ok)
            issues.push_back("edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) +
                             " is not drawn " +
                             (ed.dir == EdgeDir::East ? "eastward" : "northward"));
    }

    std::map<Point, VertexId> occupied;
    for (VertexId v = 0; v < rep.vertex_count(); ++v) {
        auto [it, inserted] = occupied.emplace(points[v], v);
        if (!inserted)
            issues.push_back("vertices " + std::to_string(it->second) + " and " +
                             std::to_string(v) + " share position " + point_text(points[v]));
    }
    if (!issues.empty()) return issues;

    // Axis-aligned closed segments intersect exactly when their bounding boxes do.
    for (EdgeId e = 0; e < rep.edge_count(); ++e) {
        const Edge& a = rep.edge(e);
        for (EdgeId f = e + 1; f < rep.edge_count(); ++f) {
            const Edge& b = rep.edge(f);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            const Point &p1 = points[a.u], &p2 = points[a.v];
            const Point &q1 = points[b.u], &q2 = points[b.v];
            const bool x_overlap = std::max(p1.x, q1.x) <= std::min(p2.x, q2.x);
            const bool y_overlap = std::max(p1.y, q1.y) <= std::min(p2.y, q2.y);
            if (x_overlap && y_overlap)
                issues.push_back("edges " + std::to_string(a.u) + "-" + std::to_string(a.v) +
                                 " and " + std::to_string(b.u) + "-" + std::to_string(b.v) +
                                 " intersect");
        }
    }
    return issues;
}

RectilinearRepresentation representation_from_geometry(const RectilinearRepresentation& rep,
                                                       const std::vector<Point>& points) {
    std::vector<Edge> edges;
    for (const Edge& e : rep.edges()) {
        const Point& a = points[e.u];
        const Point& b = points[e.v];
        if (a.y == b.y && a.x != b.x) {
            edges.push_back(a.x < b.x ? Edge{e.u, e.v, EdgeDir::East}
                                      : Edge{e.v, e.u, EdgeDir::East});
        } else if (a.x == b.x && a.y != b.y) {
            edges.push_back(a.y < b.y ? Edge{e.u, e.v, EdgeDir::North}
                                      : Edge{e.v, e.u, EdgeDir::North});
        } else {
            throw ValidationError({"edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                   " is not axis-parallel"});
        }
    }
    return RectilinearRepresentation::build(rep.vertex_count(), std::move(edges));
}

Drawing parse_drawing(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError({std::string("malformed document: ") + e.what()});
    }
    if (!doc.is_object() || !doc.contains("coords") || !doc["coords"].is_array())
        throw ValidationError({"malformed document: drawing needs a \"coords\" array"});
    std::vector<Point> points;
    for (const auto& c : doc["coords"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw ValidationError({"malformed document: each coordinate must be [x, y]"});
        points.push_back({c[0].get<Coord>(), c[1].get<Coord>()});
    }
    nlohmann::json graph = doc;
    graph.erase("coords");
    auto rep = std::make_shared<const RectilinearRepresentation>(
        parse_representation(graph.dump()));
    return Drawing::create(std::move(rep), std::move(points));
}

std::string serialize_drawing(const Drawing& drawing) {
    std::string text = serialize_representation(drawing.representation());
    // Reopen the object emitted by the representation serializer.
    text.erase(text.rfind('}'));
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
    std::ostringstream out;
    out << text << ",\n  \"coords\": [";
    const auto& pts = drawing.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << (i == 0 ? "\n" : ",\n") << "    [" << pts[i].x << ", " << pts[i].y << "]";
    out << "\n  ]\n}\n";
    return out.str();
}

Drawing load_drawing(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open " + path});
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_drawing(buffer.str());
}

}  // namespace ortho_greedy
