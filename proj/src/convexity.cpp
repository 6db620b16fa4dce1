#include "ortho_greedy/convexity.hpp"

#include <algorithm>

namespace ortho_greedy {

std::vector<Corner> outer_corners(const RectilinearRepresentation& h) {
    return h.faces()[h.external_face()].corners;
}

std::optional<std::pair<int, int>> find_reflex_side(const std::vector<int>& outer_angles) {
    std::vector<int> breaks;
    for (int i = 0; i < static_cast<int>(outer_angles.size()); ++i)
        if (outer_angles[i] != 180) breaks.push_back(i);
    const int b = static_cast<int>(breaks.size());
    for (int k = 0; k < b; ++k) {
        const int i = breaks[k];
        const int j = breaks[(k + 1) % b];
        if (b > 1 && outer_angles[i] == 90 && outer_angles[j] == 90) return std::pair(i, j);
    }
    return std::nullopt;
}

ConvexityReport check_convex(const RectilinearRepresentation& h) {
    ConvexityReport report;
    for (FaceId f = 0; f < static_cast<FaceId>(h.faces().size()); ++f) {
        const Face& face = h.faces()[f];
        if (face.external) continue;
        int right = 0;
        bool other = false;
        for (const Corner& c : face.corners) {
            if (c.angle == 90)
                ++right;
            else if (c.angle != 180)
                other = true;
        }
        if (right != 4 || other) report.offending_internal_faces.push_back(f);
    }

    const auto corners = outer_corners(h);
    std::vector<int> seen(h.vertex_count(), 0);
    for (const Corner& c : corners) {
        if (c.angle == 360) {
            report.orthoconvexity_witness =
                BoundaryWitness{c.vertex, c.vertex, "outer boundary has a degree-1 vertex"};
            break;
        }
        if (++seen[c.vertex] > 1) {
            report.orthoconvexity_witness =
                BoundaryWitness{c.vertex, c.vertex, "outer boundary visits a vertex twice"};
            break;
        }
    }
    if (h.edge_count() == 0)
        report.orthoconvexity_witness = BoundaryWitness{0, 0, "graph has no edges"};

    if (!report.orthoconvexity_witness) {
        std::vector<int> angles;
        angles.reserve(corners.size());
        for (const Corner& c : corners) angles.push_back(c.angle);
        if (auto side = find_reflex_side(angles)) {
            report.orthoconvexity_witness =
                BoundaryWitness{corners[side->first].vertex, corners[side->second].vertex,
                                "boundary side between two reflex corners"};
        }
    }
    report.is_convex =
        report.offending_internal_faces.empty() && !report.orthoconvexity_witness;
    return report;
}

}  // namespace ortho_greedy
