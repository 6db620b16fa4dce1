#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ortho_greedy/drawing.hpp"
#include "ortho_greedy/repgraph.hpp"
#include "ortho_greedy/shapedags.hpp"

namespace ortho_greedy {

using BigInt = boost::multiprecision::cpp_int;

// Interval i is the gap x_i between ordering positions i and i + 1. A
// constrained interval carries a left inequality
//   x_i > x_left_start + ... + x_{i-1}
// and a right inequality
//   x_i > x_{i+1} + ... + x_{right_end - 1}.
struct IntervalConstraint {
    bool trivial = true;
    int left_start = kNone;
    int right_end = kNone;
};

struct InequalitySystem {
    Axis axis = Axis::X;
    std::vector<NodeId> ordering;
    std::vector<IntervalConstraint> intervals;  // ordering.size() - 1 entries

    int size() const { return static_cast<int>(intervals.size()); }
    // Entry (i, j) of C = A + B - I.
    int coefficient(int i, int j) const;
};

using Matrix = std::vector<std::vector<int>>;
Matrix matrix_a(const InequalitySystem& sys);  // left and trivial rows
Matrix matrix_b(const InequalitySystem& sys);  // right and trivial rows
Matrix matrix_c(const InequalitySystem& sys);

// Inequalities for the conflicts of d's axis that are minimal under
// `ordering`. Throws InternalError if a minimal conflict joins
// non-consecutive nodes or its responsible vertices lack the defining edges.
InequalitySystem build_system(const RectilinearRepresentation& h, const ShapeDag& d,
                              const ShapeDag& other, const std::vector<NodeId>& ordering);

// Intervals in an order where every interval follows the ones its
// inequalities sum over. Throws InvalidOrderingError on a cycle.
std::vector<int> relation_order(const InequalitySystem& sys);

// Smallest solution: trivial intervals get 1, constrained ones one more than
// the larger of their two sums.
std::vector<BigInt> solve_min(const InequalitySystem& sys);

// Solution of C x = 1 by substitution along the relation order.
std::vector<BigInt> solve_unit(const InequalitySystem& sys);

bool satisfies(const InequalitySystem& sys, const std::vector<BigInt>& x);

// Node coordinates, indexed by node id, as prefix sums of the interval values.
std::vector<BigInt> node_coordinates(const InequalitySystem& sys, const std::vector<BigInt>& x);

struct AxisSolution {
    InequalitySystem system;
    std::vector<BigInt> intervals;
    std::vector<BigInt> coordinate;  // indexed by node id
};

AxisSolution solve_axis(const RectilinearRepresentation& h, const ShapeDag& d,
                        const ShapeDag& other, const std::vector<NodeId>& ordering);

// Throws CoordinateOverflowError when coordinates exceed kMaxCoordinate.
Drawing assemble_drawing(std::shared_ptr<const RectilinearRepresentation> h, const ShapeDag& dx,
                         const AxisSolution& x, const ShapeDag& dy, const AxisSolution& y);

// Both axes solved concurrently from the given good orderings.
Drawing draw_general(std::shared_ptr<const RectilinearRepresentation> h,
                     const std::vector<NodeId>& order_x, const std::vector<NodeId>& order_y);

// Greedy drawing of a tree with at most four leaves: a horizontal spine
// between two leaves, the remaining leaves hanging north and south. The
// returned drawing carries its own representation. Throws NotRealizableError
// for more than four leaves.
Drawing draw_tree(const RectilinearRepresentation& tree);

// Vertices are indexed as in the construction; unused slots hold kNone.
struct ExponentialFixture {
    RectilinearRepresentation representation;
    std::vector<VertexId> v;  // v[1..q]
    std::vector<VertexId> w;  // w[1..q-1]
    std::vector<VertexId> z;  // z[1..q]
    std::vector<VertexId> u;  // u[2..q]
};

ExponentialFixture build_exponential_fixture(int q);

}  // namespace ortho_greedy
