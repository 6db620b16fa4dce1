#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ortho_greedy/shapedags.hpp"

namespace ortho_greedy {

// Window v_first..v_last (0-based positions) that induces more than two
// undirected components, or two components that interleave.
struct WindowViolation {
    int first = 0;
    int last = 0;
    std::vector<std::vector<NodeId>> components;
};

struct StOrdering {
    std::vector<NodeId> sequence;
    std::optional<WindowViolation> violation;

    bool is_good() const { return !violation.has_value(); }
};

// Definitional window check. Throws PreconditionError if `order` is not a
// permutation and InvalidOrderingError if it is not topological.
StOrdering check_good(const Digraph& d, std::vector<NodeId> order);

struct SpNode {
    enum class Kind { Leaf, Series, Parallel };
    Kind kind = Kind::Leaf;
    NodeId source = kNone;
    NodeId sink = kNone;
    ArcId arc = kNone;          // leaves only
    std::vector<int> children;  // series children run source to sink
};

// Tree of maximal compositions: no series node has a series child and no
// parallel node has a parallel child.
struct SpDecomposition {
    std::vector<SpNode> nodes;
    int root = kNone;
};

struct NotSeriesParallel {
    std::vector<NodeId> remaining_nodes;
    int remaining_arcs = 0;
};

using SpRecognition = std::variant<SpDecomposition, NotSeriesParallel>;

// Reduction by merging parallel arcs and contracting interior nodes with one
// in-arc and one out-arc. Throws PreconditionError unless d has a single
// source and a single sink.
SpRecognition recognize_series_parallel(const Digraph& d);

struct ExpandedSp {
    std::vector<NodeId> nodes;  // sorted
    std::vector<ArcId> arcs;    // sorted
};

ExpandedSp expand(const SpDecomposition& decomposition);

struct Infeasible {
    int sp_node = kNone;
    std::string reason;
};

std::variant<StOrdering, Infeasible> construct_good_sp(const Digraph& d,
                                                       const SpDecomposition& decomposition);

// Visits every topological order until `visit` returns false.
void for_each_topological_order(const Digraph& d,
                                const std::function<bool(const std::vector<NodeId>&)>& visit);

// All good orderings, by exhaustive enumeration.
std::vector<std::vector<NodeId>> enumerate_good_orderings(const Digraph& d);

std::optional<std::vector<NodeId>> find_good_ordering_exhaustive(const Digraph& d);

}  // namespace ortho_greedy
