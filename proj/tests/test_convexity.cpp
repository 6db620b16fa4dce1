#include <doctest.h>

#include <algorithm>
#include <random>

#include "ortho_greedy/convexity.hpp"
#include "ortho_greedy/universal.hpp"
#include "support.hpp"

using namespace ortho_greedy;
using support::fixture;

TEST_CASE("rectangle is convex") {
    const auto r = check_convex(unit_rectangle());
    CHECK(r.is_convex);
    CHECK(r.offending_internal_faces.empty());
    CHECK_FALSE(r.orthoconvexity_witness);
}

TEST_CASE("internal face with a reflex corner") {
    const auto h = fixture("nonrect_face.json");
    const auto r = check_convex(h);
    CHECK_FALSE(r.is_convex);
    REQUIRE(r.offending_internal_faces.size() == 1);
    const Face& f = h.faces()[r.offending_internal_faces[0]];
    // The L-shaped face has its reflex corner at vertex 6.
    CHECK(std::any_of(f.corners.begin(), f.corners.end(),
                      [](const Corner& c) { return c.vertex == 6 && c.angle == 270; }));
    CHECK_FALSE(r.orthoconvexity_witness);
}

TEST_CASE("U-shaped outer boundary") {
    const auto r = check_convex(fixture("u_shape.json"));
    CHECK_FALSE(r.is_convex);
    CHECK(r.offending_internal_faces.empty());
    REQUIRE(r.orthoconvexity_witness);
    // The bottom of the notch runs from vertex 7 to vertex 6.
    const auto w = *r.orthoconvexity_witness;
    CHECK(std::min(w.first, w.second) == 6);
    CHECK(std::max(w.first, w.second) == 7);
}

TEST_CASE("dangling edge makes the outer boundary non-simple") {
    const auto h = RectilinearRepresentation::build(
        5, {{0, 1, EdgeDir::East}, {3, 2, EdgeDir::East}, {0, 3, EdgeDir::North}, {1, 2, EdgeDir::North},
            {1, 4, EdgeDir::East}});
    const auto r = check_convex(h);
    CHECK_FALSE(r.is_convex);
    REQUIRE(r.orthoconvexity_witness);
    CHECK(r.orthoconvexity_witness->first == r.orthoconvexity_witness->second);
}

TEST_CASE("reflex side detection on outer angle sequences") {
    CHECK_FALSE(find_reflex_side({270, 270, 270, 270}));
    // L-shape: one reflex corner between two convex ones.
    CHECK_FALSE(find_reflex_side({270, 270, 90, 270, 270, 270}));
    // Two reflex corners on one side, separated by a flat.
    const auto side = find_reflex_side({270, 270, 90, 180, 90, 270, 270, 270});
    REQUIRE(side);
    CHECK(*side == std::pair<int, int>{2, 4});
    // Staircase: reflex corners never share a side.
    CHECK_FALSE(find_reflex_side({270, 270, 90, 270, 90, 270, 270, 270}));
}

TEST_CASE("convex exactly when all cells of rows and columns are contiguous") {
    std::mt19937_64 rng(7);
    int convex = 0, tested = 0;
    while (tested < 400) {
        auto p = support::random_polyomino(rng, 3 + static_cast<int>(rng() % 12), 5);
        if (!p) continue;
        ++tested;
        const auto r = check_convex(p->representation);
        CHECK(r.offending_internal_faces.empty());
        CHECK(r.is_convex == p->row_column_convex);
        convex += r.is_convex;
        CHECK(check_convex(rotate_quarter(p->representation)).is_convex == r.is_convex);
    }
    // Both outcomes are exercised.
    CHECK(convex > 50);
    CHECK(convex < 350);
}

TEST_CASE("convexity is invariant under quarter rotation") {
    for (const char* name : {"rectangle.json", "nonrect_face.json", "u_shape.json", "one_conflict.json",
                             "staircase.json", "three_stubs.json", "exponential_q3.json"}) {
        const auto h = fixture(name);
        auto r = h;
        for (int i = 0; i < 4; ++i) {
            r = rotate_quarter(r);
            const auto a = check_convex(h), b = check_convex(r);
            CHECK(a.is_convex == b.is_convex);
            CHECK(a.offending_internal_faces.size() == b.offending_internal_faces.size());
            CHECK(a.orthoconvexity_witness.has_value() == b.orthoconvexity_witness.has_value());
        }
    }
}

TEST_CASE("outer corners of the rectangle are all convex") {
    const auto cs = outer_corners(unit_rectangle());
    REQUIRE(cs.size() == 4);
    for (const Corner& c : cs) CHECK(c.angle == 270);
}
