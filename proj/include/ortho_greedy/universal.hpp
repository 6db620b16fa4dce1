#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ortho_greedy/convexity.hpp"
#include "ortho_greedy/drawing.hpp"
#include "ortho_greedy/repgraph.hpp"
#include "ortho_greedy/shapedags.hpp"

namespace ortho_greedy {

// is_universal holds exactly when both Hamiltonian paths are present; a
// non-universal verdict carries either a convexity failure or a conflict.
struct UniversalityVerdict {
    bool is_universal = false;
    std::optional<std::vector<NodeId>> hamiltonian_x;
    std::optional<std::vector<NodeId>> hamiltonian_y;
    std::optional<Conflict> counterexample;
    std::optional<ConvexityReport> convexity_failure;
};

// The unique topological order when it is a directed Hamiltonian path.
std::optional<std::vector<NodeId>> hamiltonian_path(const Digraph& d);

// Throws NotBiconnectedError for inputs that are not biconnected.
UniversalityVerdict test_universal(const RectilinearRepresentation& h);

// True iff every ordered vertex pair is joined by a path using at most one
// horizontal and one vertical direction.
bool staircase_oracle(const RectilinearRepresentation& h);

// Coordinates are Hamiltonian indices of the vertex's nodes. Throws
// PreconditionError unless h is universal.
Drawing draw_universal_min_area(std::shared_ptr<const RectilinearRepresentation> h);
Drawing draw_universal_min_area(const RectilinearRepresentation& h);

RectilinearRepresentation unit_rectangle();

// Subdivides an outer edge whose orthogonal open strip holds no vertex.
RectilinearRepresentation add_flat_vertex(const RectilinearRepresentation& h, EdgeId e);

enum class Side { Left, Right };

// Attaches a path u -> w_1 -> ... -> w_k -> v of k new vertices. The path
// leaves u in direction `first` and turns to `side` at every new vertex.
RectilinearRepresentation add_k_reflex(const RectilinearRepresentation& h, VertexId u,
                                       VertexId v, int k, Direction first, Side side);

struct FlatAddition {
    EdgeId edge = kNone;
};

struct ReflexAddition {
    VertexId u = kNone;
    VertexId v = kNone;
    int k = 0;
    Direction first = Direction::North;
    Side side = Side::Left;
};

using Primitive = std::variant<FlatAddition, ReflexAddition>;

// 0 for a flat addition, k for a k-reflex addition.
int primitive_kind(const Primitive& p);

// Every legal primitive application on universal h, in a deterministic order.
std::vector<Primitive> legal_primitives(const RectilinearRepresentation& h);

RectilinearRepresentation apply_primitive(const RectilinearRepresentation& h,
                                          const Primitive& p);

// Rectangle followed by `steps` uniformly chosen legal primitives.
RectilinearRepresentation generate_universal(std::uint64_t seed, int steps);

// Rectangle followed by one legal primitive of each listed kind: the first
// choice, in legal_primitives order, that lets the rest of the list succeed.
RectilinearRepresentation generate_sequence(const std::vector<int>& kinds);

}  // namespace ortho_greedy
