#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ortho_greedy/coords.hpp"
#include "ortho_greedy/drawing.hpp"
#include "ortho_greedy/repgraph.hpp"
#include "ortho_greedy/shapedags.hpp"

namespace support {

using namespace ortho_greedy;

std::string fixture_path(const std::string& name);
RectilinearRepresentation fixture(const std::string& name);
Drawing drawing_fixture(const std::string& name);

// Two-terminal series-parallel multigraph grown from one arc 0 -> 1 by random
// series subdivisions and parallel duplications.
Digraph random_series_parallel(std::mt19937_64& rng, int operations);

// Union of unit grid cells drawn with every cell side as an edge.
struct Polyomino {
    std::vector<std::pair<int, int>> cells;
    RectilinearRepresentation representation;
    std::vector<Point> points;
    bool row_column_convex = false;
};

// Random 4-connected polyomino of up to `cells` cells in a box of the given
// side. Returns nothing for shapes with holes or with cells meeting only at
// a corner.
std::optional<Polyomino> random_polyomino(std::mt19937_64& rng, int cells, int box);

// Rectangle [0, width] x [0, height] cut by `splits` random axis-parallel
// segments, each spanning one current face. All faces are rectangles.
struct Dissection {
    RectilinearRepresentation representation;
    std::vector<Point> points;
};

Dissection random_dissection(std::mt19937_64& rng, int width, int height, int splits);

// Vertex positions from per-node coordinates of the two shape DAGs.
std::vector<Point> points_from_node_coordinates(const RectilinearRepresentation& h,
                                                const ShapeDag& dx,
                                                const std::vector<Coord>& x,
                                                const ShapeDag& dy,
                                                const std::vector<Coord>& y);

// Searches x coordinates in [0, width] for the D_x nodes with the y coordinates
// fixed, returning the first assignment giving a valid greedy drawing.
std::optional<std::vector<Coord>> search_greedy_x(const RectilinearRepresentation& h,
                                                  const ShapeDag& dx, const ShapeDag& dy,
                                                  const std::vector<Coord>& y, Coord width);

// Every integer vector in [1, bound]^k satisfying the system.
std::vector<std::vector<BigInt>> brute_force_solutions(const InequalitySystem& sys, int bound);

// Same representation with the distinct x and y values re-spaced by random
// positive gaps in [1, max_gap].
Drawing perturb(const Drawing& d, std::mt19937_64& rng, Coord max_gap);

// Random tree with at most `max_leaves` leaves, grown by attaching new
// vertices in free compass slots.
RectilinearRepresentation random_tree(std::mt19937_64& rng, int vertices, int max_leaves);

}  // namespace support
