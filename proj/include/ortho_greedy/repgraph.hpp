#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ortho_greedy {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;
using FaceId = int;

inline constexpr int kNone = -1;

// Compass directions in clockwise order.
enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::North, Direction::East, Direction::South, Direction::West};

constexpr Direction rotate_cw(Direction d, int quarter_turns = 1) {
    return static_cast<Direction>((static_cast<int>(d) + quarter_turns % 4 + 4) % 4);
}
constexpr Direction rotate_ccw(Direction d, int quarter_turns = 1) {
    return rotate_cw(d, -quarter_turns);
}
constexpr Direction opposite(Direction d) { return rotate_cw(d, 2); }
constexpr bool is_horizontal(Direction d) {
    return d == Direction::East || d == Direction::West;
}
char direction_char(Direction d);
std::string_view direction_name(Direction d);

// Orientation label of an edge: the second endpoint lies strictly east of or
// strictly north of the first.
enum class EdgeDir : std::uint8_t { East = 0, North = 1 };

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    EdgeDir dir = EdgeDir::East;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Angle of a face at one of its boundary vertices, measured inside the face.
// The corner sits at the head of `in` and the tail of `out`.
struct Corner {
    VertexId vertex = kNone;
    HalfEdgeId in = kNone;
    HalfEdgeId out = kNone;
    int angle = 0;  // 90, 180, 270 or 360 degrees
};

// Boundary walk with the face on the left: internal faces run
// counterclockwise, the external face clockwise. corners[i] lies between
// walk[i] and walk[i + 1].
struct Face {
    std::vector<HalfEdgeId> walk;
    std::vector<Corner> corners;
    int turn_sum = 0;  // +360 internal, -360 external
    bool external = false;
};

// Plane graph whose edges carry compass orientations. The rotation system and
// all angles are derived from the compass slots. Immutable once built.
//
// Half-edge 2e runs u -> v of edge e, half-edge 2e + 1 runs v -> u.
class RectilinearRepresentation {
public:
    // Throws ValidationError listing every violated invariant.
    static RectilinearRepresentation build(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(slots_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    static constexpr EdgeId edge_of(HalfEdgeId h) { return h >> 1; }
    static constexpr HalfEdgeId twin(HalfEdgeId h) { return h ^ 1; }
    VertexId tail(HalfEdgeId h) const;
    VertexId head(HalfEdgeId h) const { return tail(twin(h)); }
    Direction direction(HalfEdgeId h) const;

    // Half-edge leaving v in direction d, or kNone.
    HalfEdgeId slot(VertexId v, Direction d) const {
        return slots_[v][static_cast<int>(d)];
    }
    VertexId neighbor(VertexId v, Direction d) const;
    int degree(VertexId v) const;
    // Half-edges leaving v in clockwise order starting from north.
    std::vector<HalfEdgeId> outgoing(VertexId v) const;

    const std::vector<Face>& faces() const { return faces_; }
    FaceId external_face() const { return external_face_; }
    int internal_face_count() const { return static_cast<int>(faces_.size()) - 1; }
    // Face lying to the left of h.
    FaceId face_of(HalfEdgeId h) const { return face_of_half_edge_[h]; }

    bool operator==(const RectilinearRepresentation& other) const {
        return edges_ == other.edges_ && vertex_count() == other.vertex_count();
    }

private:
    RectilinearRepresentation() = default;

    std::vector<Edge> edges_;
    std::vector<std::array<HalfEdgeId, 4>> slots_;
    std::vector<Face> faces_;
    std::vector<FaceId> face_of_half_edge_;
    FaceId external_face_ = 0;
};

struct FlatAngle {
    VertexId vertex = kNone;
    Direction opening = Direction::North;  // side the 180-degree angle opens to
    FaceId face = kNone;
};

// Every 180-degree angle, sorted by (vertex, opening). A degree-2 vertex on a
// straight line carries two flat angles and is listed twice.
std::vector<FlatAngle> classify_flat_vertices(const RectilinearRepresentation& h);

bool is_connected(const RectilinearRepresentation& h);
bool is_biconnected(const RectilinearRepresentation& h);
bool is_tree(const RectilinearRepresentation& h);
int count_leaves(const RectilinearRepresentation& h);

// Rotates every edge a quarter turn counterclockwise (E -> N, N -> W).
RectilinearRepresentation rotate_quarter(const RectilinearRepresentation& h);

// Sorted multiset of all corner angles over all faces.
std::vector<int> angle_multiset(const RectilinearRepresentation& h);

// JSON document {"vertices": n, "edges": [{"u", "v", "dir"}]}.
RectilinearRepresentation parse_representation(std::string_view text);
std::string serialize_representation(const RectilinearRepresentation& h);
RectilinearRepresentation load_representation(const std::string& path);

}  // namespace ortho_greedy
