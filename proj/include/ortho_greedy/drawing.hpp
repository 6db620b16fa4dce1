#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ortho_greedy/repgraph.hpp"

namespace ortho_greedy {

using Coord = std::int64_t;
using Wide = __int128;

// Coordinates are kept within this bound so that squared distances and
// squared path lengths fit in 128-bit arithmetic.
inline constexpr Coord kMaxCoordinate = Coord{1} << 40;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Wide squared_distance(const Point& a, const Point& b) {
    const Wide dx = Wide{a.x} - b.x;
    const Wide dy = Wide{a.y} - b.y;
    return dx * dx + dy * dy;
}

// Integer grid drawing of a representation. Creation checks edge directions,
// distinct vertex positions and planarity.
class Drawing {
public:
    static Drawing create(std::shared_ptr<const RectilinearRepresentation> rep,
                          std::vector<Point> points);

    const RectilinearRepresentation& representation() const { return *rep_; }
    const std::shared_ptr<const RectilinearRepresentation>& shared_representation() const {
        return rep_;
    }
    const std::vector<Point>& points() const { return points_; }
    const Point& at(VertexId v) const { return points_[v]; }

    Coord width() const;
    Coord height() const;

private:
    Drawing(std::shared_ptr<const RectilinearRepresentation> rep, std::vector<Point> points)
        : rep_(std::move(rep)), points_(std::move(points)) {}

    std::shared_ptr<const RectilinearRepresentation> rep_;
    std::vector<Point> points_;
};

// Empty when the coordinates form a valid planar drawing of `rep`.
std::vector<std::string> drawing_issues(const RectilinearRepresentation& rep,
                                        const std::vector<Point>& points);

// Representation whose edge labels are read off the coordinates. For a valid
// drawing this equals the drawn representation.
RectilinearRepresentation representation_from_geometry(const RectilinearRepresentation& rep,
                                                       const std::vector<Point>& points);

// JSON document {"vertices", "edges", "coords": [[x, y], ...]}.
Drawing parse_drawing(std::string_view text);
std::string serialize_drawing(const Drawing& drawing);
Drawing load_drawing(const std::string& path);

}  // namespace ortho_greedy
