#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "ortho_greedy/errors.hpp"
#include "ortho_greedy/pipeline.hpp"
#include "ortho_greedy/universal.hpp"
#include "ortho_greedy/verify.hpp"
#include "support.hpp"

using namespace ortho_greedy;
using support::drawing_fixture;
using support::fixture;

namespace {

using boost::multiprecision::cpp_int;

Drawing with_points(const RectilinearRepresentation& h, std::vector<Point> points) {
    return Drawing::create(std::make_shared<const RectilinearRepresentation>(h), std::move(points));
}

// Greedy iff from every vertex some neighbor is strictly closer to every
// other vertex.
bool naive_greedy(const Drawing& d) {
    const auto& h = d.representation();
    for (VertexId s = 0; s < h.vertex_count(); ++s)
        for (VertexId t = 0; t < h.vertex_count(); ++t) {
            if (s == t) continue;
            bool closer = false;
            for (Direction dir : kDirections) {
                const VertexId u = h.neighbor(s, dir);
                if (u != kNone && squared_distance(d.at(u), d.at(t)) < squared_distance(d.at(s), d.at(t)))
                    closer = true;
            }
            if (!closer) return false;
        }
    return true;
}

cpp_int big(Wide w) { return cpp_int(static_cast<long long>(w)); }

// Largest ratio of the shortest distance-decreasing path length to the
// distance, by enumerating every decreasing path; returned as (length, d^2).
std::pair<cpp_int, cpp_int> brute_dilation(const Drawing& d) {
    const auto& h = d.representation();
    cpp_int best_len = 0, best_d2 = 1;
    for (VertexId s = 0; s < h.vertex_count(); ++s)
        for (VertexId t = 0; t < h.vertex_count(); ++t) {
            if (s == t) continue;
            Wide shortest = -1;
            std::function<void(VertexId, Wide)> walk = [&](VertexId v, Wide length) {
                if (v == t) {
                    if (shortest < 0 || length < shortest) shortest = length;
                    return;
                }
                for (Direction dir : kDirections) {
                    const VertexId u = h.neighbor(v, dir);
                    if (u == kNone ||
                        squared_distance(d.at(u), d.at(t)) >= squared_distance(d.at(v), d.at(t)))
                        continue;
                    const Wide step = std::abs(d.at(u).x - d.at(v).x) + std::abs(d.at(u).y - d.at(v).y);
                    walk(u, length + step);
                }
            };
            walk(s, 0);
            REQUIRE(shortest > 0);
            const cpp_int len = big(shortest), d2 = big(squared_distance(d.at(s), d.at(t)));
            if (len * len * best_d2 > best_len * best_len * d2) {
                best_len = len;
                best_d2 = d2;
            }
        }
    return {best_len, best_d2};
}

const std::vector<Point> kNonrectPoints = {{0, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {1, 1}};

}  // namespace

TEST_CASE("unit square") {
    const auto d = draw_universal_min_area(unit_rectangle());
    const auto r = is_greedy(d);
    CHECK(r.is_greedy);
    CHECK(r.stuck_pairs.empty());
    CHECK(r.cell_violations.empty());
    const auto dil = dilation(d);
    // Diagonal pairs: path 2 over distance sqrt 2.
    CHECK(dil.path_length == 2);
    CHECK(dil.squared_distance == 2);
    CHECK(dil.ratio == doctest::Approx(std::sqrt(2.0)));
    CHECK(dil.within_bound);
}

TEST_CASE("two drawings of the one-conflict representation") {
    const auto aligned = drawing_fixture("one_conflict_drawing_aligned.json");
    const auto greedy = drawing_fixture("one_conflict_drawing_greedy.json");
    CHECK(aligned.representation() == greedy.representation());

    const auto bad = is_greedy(aligned);
    CHECK_FALSE(bad.is_greedy);
    CHECK_FALSE(bad.method_a);
    CHECK_FALSE(bad.method_b);
    // The responsible vertices 4 and 7 lie in each other's cells.
    const std::pair<VertexId, VertexId> p47{4, 7}, p74{7, 4};
    CHECK(std::find(bad.cell_violations.begin(), bad.cell_violations.end(), p47) != bad.cell_violations.end());
    CHECK(std::find(bad.cell_violations.begin(), bad.cell_violations.end(), p74) != bad.cell_violations.end());
    CHECK_THROWS_AS(dilation(aligned), PreconditionError);

    CHECK(is_greedy(greedy).is_greedy);

    const auto conflicts = enumerate_conflicts(greedy.representation());
    REQUIRE(conflicts.size() == 1);
    CHECK(conflicts_satisfied(greedy, conflicts) == std::vector<bool>{true});
    CHECK(conflicts_satisfied(aligned, conflicts) == std::vector<bool>{false});

    // Conflict-free: nothing to satisfy.
    const auto square = draw_universal_min_area(unit_rectangle());
    CHECK(conflicts_satisfied(square, enumerate_conflicts(square.representation())).empty());
}

TEST_CASE("both greedy criteria agree with the pairwise definition") {
    std::mt19937_64 rng(31);
    int greedy = 0, not_greedy = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto dis = support::random_dissection(rng, 7, 7, 1 + static_cast<int>(rng() % 7));
        auto d = with_points(dis.representation, dis.points);
        if (trial % 2) d = support::perturb(d, rng, 4);
        const auto r = is_greedy(d);
        const bool expect = naive_greedy(d);
        CHECK(r.is_greedy == expect);
        CHECK(r.method_a == expect);
        CHECK(r.method_b == expect);
        // Stuck pairs and cell intrusions are the same relation.
        CHECK(r.stuck_pairs == r.cell_violations);
        (expect ? greedy : not_greedy)++;
    }
    CHECK(greedy > 40);
    CHECK(not_greedy > 20);
}

TEST_CASE("cells") {
    // Cross: centre 0 with four arms.
    const auto cross = RectilinearRepresentation::build(
        5, {{0, 1, EdgeDir::East}, {2, 0, EdgeDir::East}, {0, 3, EdgeDir::North}, {4, 0, EdgeDir::North}});
    const auto d = with_points(cross, {{0, 0}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}});
    const auto centre = cell_geometry(d, 0);
    CHECK(centre.bounded());
    CHECK(*centre.east2 == 2);
    CHECK(*centre.west2 == -2);
    CHECK(*centre.north2 == 2);
    CHECK(*centre.south2 == -2);
    CHECK(centre.contains(1, 1));
    CHECK_FALSE(centre.contains(3, 0, 2));  // (1.5, 0)

    // Leaf: one half-plane.
    const auto leaf = cell_geometry(d, 1);
    CHECK_FALSE(leaf.bounded());
    CHECK(leaf.half_planes.size() == 1);
    CHECK(leaf.west2);
    CHECK(leaf.contains(100, -100));
    CHECK_FALSE(leaf.contains(0, 0));
}

TEST_CASE("cell membership agrees with distances on random probes") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coord(-20, 60);
    int probes = 0;
    while (probes < 10000) {
        const auto dis = support::random_dissection(rng, 6, 6, 1 + static_cast<int>(rng() % 6));
        const auto d = support::perturb(with_points(dis.representation, dis.points), rng, 5);
        const auto& h = d.representation();
        for (int k = 0; k < 200; ++k, ++probes) {
            const VertexId v = static_cast<VertexId>(rng() % h.vertex_count());
            // Probe (x / 2, y / 2) to include points on bisectors.
            const Wide x = coord(rng), y = coord(rng);
            auto dist2 = [&](const Point& p) {
                const Wide dx = x - 2 * Wide{p.x}, dy = y - 2 * Wide{p.y};
                return dx * dx + dy * dy;
            };
            bool inside = true;
            for (Direction dir : kDirections) {
                const VertexId u = h.neighbor(v, dir);
                if (u != kNone && dist2(d.at(u)) < dist2(d.at(v))) inside = false;
            }
            CHECK(cell_geometry(d, v).contains(x, y, 2) == inside);
        }
    }
}

TEST_CASE("dilation against enumeration of all decreasing paths") {
    std::mt19937_64 rng(5);
    int tested = 0;
    for (int trial = 0; trial < 300 && tested < 60; ++trial) {
        const auto dis = support::random_dissection(rng, 5, 5, 1 + static_cast<int>(rng() % 4));
        const auto d = support::perturb(with_points(dis.representation, dis.points), rng, 4);
        if (!is_greedy(d).is_greedy) continue;
        ++tested;
        const auto r = dilation(d);
        const auto [len, d2] = brute_dilation(d);
        CHECK(big(r.path_length) * big(r.path_length) * d2 == len * len * big(r.squared_distance));
        CHECK(r.within_bound == (len * len <= 18 * d2));
        CHECK(r.within_bound);
    }
    CHECK(tested >= 30);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto d = draw_universal_min_area(generate_universal(seed, 10));
        const auto r = dilation(d);
        CHECK(r.within_bound);
        CHECK(r.ratio <= 3 * std::sqrt(2.0) + 1e-9);
    }

    const auto h4 = run_pipeline(fixture("exponential_q4.json"));
    REQUIRE(h4.drawing);
    const auto r4 = dilation(*h4.drawing);
    CHECK(r4.within_bound);
    CHECK(r4.ratio <= 3 * std::sqrt(2.0));
}

TEST_CASE("right-angle corner boxes") {
    const auto nonrect = with_points(fixture("nonrect_face.json"), kNonrectPoints);
    // The L-shaped face's corner at the origin spans a box containing (1, 1).
    CHECK_FALSE(right_corner_boxes_empty(nonrect));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const auto dis = support::random_dissection(rng, 8, 8, 1 + static_cast<int>(rng() % 9));
        const auto d = support::perturb(with_points(dis.representation, dis.points), rng, 6);
        CHECK(right_corner_boxes_empty(d));
    }
}
