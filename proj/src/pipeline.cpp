#include "ortho_greedy/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "ortho_greedy/coords.hpp"
#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Universal: return "universal";
        case Verdict::Realizable: return "realizable";
        case Verdict::NotRealizable: return "not-realizable";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

OrderingSearch find_good_ordering(const ShapeDag& d, int exhaustive_limit) {
    OrderingSearch search;
    if (auto path = hamiltonian_path(d.graph())) {
        search.outcome = OrderingSearch::Outcome::Found;
        search.ordering = std::move(path);
        search.series_parallel =
            std::holds_alternative<SpDecomposition>(recognize_series_parallel(d.graph()));
        search.reason = "Hamiltonian path";
        return search;
    }
    auto recognition = recognize_series_parallel(d.graph());
    if (const auto* decomposition = std::get_if<SpDecomposition>(&recognition)) {
        search.series_parallel = true;
        auto built = construct_good_sp(d.graph(), *decomposition);
        if (auto* order = std::get_if<StOrdering>(&built)) {
            search.outcome = OrderingSearch::Outcome::Found;
            search.ordering = std::move(order->sequence);
            search.reason = "series-parallel construction";
        } else {
            search.outcome = OrderingSearch::Outcome::Infeasible;
            search.reason = std::get<Infeasible>(built).reason;
        }
        return search;
    }
    if (d.node_count() <= exhaustive_limit) {
        if (auto order = find_good_ordering_exhaustive(d.graph())) {
            search.outcome = OrderingSearch::Outcome::Found;
            search.ordering = std::move(order);
            search.reason = "exhaustive search over topological orders";
        } else {
            search.outcome = OrderingSearch::Outcome::Infeasible;
            search.reason = "exhaustive search found no good st-ordering";
        }
        return search;
    }
    search.outcome = OrderingSearch::Outcome::Unknown;
    search.reason = "shape DAG is not series-parallel and too large for exhaustive search";
    return search;
}

GreedyTest test_greedy(const RectilinearRepresentation& h) {
    if (!is_biconnected(h)) throw NotBiconnectedError("representation is not biconnected");
    GreedyTest result;
    result.stage = "convexity";
    auto convexity = check_convex(h);
    if (!convexity.is_convex) {
        result.verdict = Verdict::NotRealizable;
        result.reason = !convexity.offending_internal_faces.empty()
                            ? "an internal face is not a rectangle"
                            : "the external face is not orthoconvex";
        result.convexity = std::move(convexity);
        return result;
    }
    result.convexity = std::move(convexity);
    const auto dx = ShapeDag::build(h, Axis::X);
    const auto dy = ShapeDag::build(h, Axis::Y);
    result.stage = "ordering";
    result.x = find_good_ordering(dx);
    result.y = find_good_ordering(dy);
    using Outcome = OrderingSearch::Outcome;
    if (result.x->outcome == Outcome::Infeasible || result.y->outcome == Outcome::Infeasible) {
        result.verdict = Verdict::NotRealizable;
        const auto& bad = result.x->outcome == Outcome::Infeasible ? *result.x : *result.y;
        result.reason = std::string("D_") +
                        (result.x->outcome == Outcome::Infeasible ? "x" : "y") +
                        " has no good st-ordering: " + bad.reason;
    } else if (result.x->outcome == Outcome::Unknown || result.y->outcome == Outcome::Unknown) {
        result.verdict = Verdict::Unknown;
        result.reason = "good st-ordering existence undecided for a non-series-parallel DAG";
    } else {
        const bool universal = result.x->reason == "Hamiltonian path" &&
                               result.y->reason == "Hamiltonian path";
        result.verdict = universal ? Verdict::Universal : Verdict::Realizable;
        result.reason = universal ? "both shape DAGs are Hamiltonian paths"
                                  : "both shape DAGs admit good st-orderings";
    }
    return result;
}

namespace {

class StageClock {
public:
    explicit StageClock(PipelineResult& r) : result_(r) {}
    void mark(const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        result_.timings_ms.emplace_back(
            stage, std::chrono::duration<double, std::milli>(now - last_).count());
        last_ = now;
        result_.stage = stage;
    }

private:
    PipelineResult& result_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void verify_into(PipelineResult& result, StageClock& clock) {
    result.greedy = is_greedy(*result.drawing);
    clock.mark("verify");
    if (result.greedy->is_greedy) {
        result.dilation = dilation(*result.drawing);
        clock.mark("dilation");
    }
}

}  // namespace

PipelineResult run_pipeline(const RectilinearRepresentation& h) {
    PipelineResult result;
    StageClock clock(result);
    auto shared = std::make_shared<const RectilinearRepresentation>(h);

    if (is_tree(h) && h.vertex_count() > 1) {
        if (count_leaves(h) > 4) {
            result.verdict = Verdict::NotRealizable;
            result.reason = "tree has more than four leaves";
            clock.mark("tree");
            return result;
        }
        result.drawing = draw_tree(h);
        result.verdict = Verdict::Realizable;
        result.reason = "tree with at most four leaves, drawn with its own representation";
        clock.mark("tree");
        verify_into(result, clock);
        return result;
    }
    if (!is_biconnected(h))
        throw NotBiconnectedError("representation is neither a tree nor biconnected");

    result.convexity = check_convex(h);
    clock.mark("convexity");
    if (!result.convexity->is_convex) {
        result.verdict = Verdict::NotRealizable;
        result.reason = !result.convexity->offending_internal_faces.empty()
                            ? "an internal face is not a rectangle"
                            : "the external face is not orthoconvex";
        return result;
    }

    const auto dx = ShapeDag::build(h, Axis::X);
    const auto dy = ShapeDag::build(h, Axis::Y);
    result.conflicts = enumerate_conflicts(h, dx, dy);
    const auto universal = test_universal(h);
    clock.mark("universality");
    if (universal.is_universal) {
        result.verdict = Verdict::Universal;
        result.reason = "conflict-free";
        result.drawing = draw_universal_min_area(shared);
        clock.mark("drawing");
        verify_into(result, clock);
        return result;
    }

    const auto sx = find_good_ordering(dx);
    const auto sy = find_good_ordering(dy);
    clock.mark("ordering");
    using Outcome = OrderingSearch::Outcome;
    for (const auto* s : {&sx, &sy}) {
        if (s->outcome == Outcome::Infeasible) {
            result.verdict = Verdict::NotRealizable;
            result.reason = std::string("D_") + (s == &sx ? "x" : "y") +
                            " has no good st-ordering: " + s->reason;
            return result;
        }
    }
    if (sx.outcome == Outcome::Unknown || sy.outcome == Outcome::Unknown) {
        result.verdict = Verdict::Unknown;
        result.reason = "good st-ordering existence undecided for a non-series-parallel DAG";
        return result;
    }
    mark_minimal(result.conflicts, Axis::X, *sx.ordering);
    mark_minimal(result.conflicts, Axis::Y, *sy.ordering);
    result.verdict = Verdict::Realizable;
    result.reason = "both shape DAGs admit good st-orderings";
    try {
        result.drawing = draw_general(shared, *sx.ordering, *sy.ordering);
    } catch (const CoordinateOverflowError& e) {
        clock.mark("coordinates");
        result.reason += "; drawing omitted: " + std::string(e.what());
        return result;
    }
    clock.mark("coordinates");
    verify_into(result, clock);
    return result;
}

std::vector<std::string> audit_universal(const RectilinearRepresentation& h,
                                         DilationReport* dilation_out) {
    std::vector<std::string> failures;
    const auto verdict = test_universal(h);
    const bool staircase = staircase_oracle(h);
    const bool conflict_free = enumerate_conflicts(h).empty();
    if (!verdict.is_universal) failures.push_back("test_universal rejected the instance");
    if (staircase != verdict.is_universal)
        failures.push_back("staircase oracle disagrees with test_universal");
    if (conflict_free != verdict.is_universal)
        failures.push_back("conflict set disagrees with test_universal");
    if (!is_biconnected(h)) failures.push_back("instance is not biconnected");

    const std::string text = serialize_representation(h);
    const auto reparsed = parse_representation(text);
    if (!(reparsed == h) || serialize_representation(reparsed) != text)
        failures.push_back("representation serialization does not round-trip");
    if (!verdict.is_universal) return failures;

    const auto drawing = draw_universal_min_area(h);
    if (!(representation_from_geometry(h, drawing.points()) == h))
        failures.push_back("drawing does not reproduce the representation");
    const auto greedy = is_greedy(drawing);
    if (greedy.method_a != greedy.method_b)
        failures.push_back("greedy methods A and B disagree");
    if (!greedy.is_greedy) failures.push_back("minimum-area drawing is not greedy");
    if (!right_corner_boxes_empty(drawing))
        failures.push_back("a vertex lies inside a right-corner box");
    const auto redrawn = parse_drawing(serialize_drawing(drawing));
    if (redrawn.points() != drawing.points() || !(redrawn.representation() == h))
        failures.push_back("drawing serialization does not round-trip");
    if (greedy.is_greedy) {
        const auto d = dilation(drawing);
        if (!d.within_bound) failures.push_back("dilation exceeds 3*sqrt(2)");
        if (dilation_out) *dilation_out = d;
    }
    return failures;
}

CorpusSummary run_corpus(std::uint64_t first_seed, std::uint64_t last_seed, int steps,
                         int threads) {
    CorpusSummary summary;
    summary.steps = steps;
    if (last_seed < first_seed) return summary;
    const std::size_t count = last_seed - first_seed + 1;
    summary.instances.resize(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            CorpusInstance& inst = summary.instances[i];
            inst.seed = first_seed + i;
            try {
                const auto h = generate_universal(inst.seed, steps);
                inst.vertices = h.vertex_count();
                inst.edges = h.edge_count();
                inst.failures = audit_universal(h, &inst.dilation);
            } catch (const std::exception& e) {
                inst.failures.push_back(std::string("exception: ") + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(threads, 1); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& inst : summary.instances) {
        if (inst.failures.empty()) ++summary.passed;
        if (inst.dilation.source == kNone) continue;
        const auto& w = summary.worst_dilation;
        if (!w || inst.dilation.ratio > w->dilation.ratio) summary.worst_dilation = inst;
    }
    return summary;
}

std::string render_svg(const Drawing& drawing) {
    constexpr Coord kUnit = 32, kMargin = 16;
    Coord min_x = 0, max_y = 0;
    if (!drawing.points().empty()) {
        min_x = drawing.points().front().x;
        max_y = drawing.points().front().y;
        for (const Point& p : drawing.points()) {
            min_x = std::min(min_x, p.x);
            max_y = std::max(max_y, p.y);
        }
    }
    auto sx = [&](Coord x) { return kMargin + (x - min_x) * kUnit; };
    auto sy = [&](Coord y) { return kMargin + (max_y - y) * kUnit; };
    const Coord width = 2 * kMargin + drawing.width() * kUnit;
    const Coord height = 2 * kMargin + drawing.height() * kUnit;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<g stroke=\"black\" stroke-width=\"2\">\n";
    for (const Edge& e : drawing.representation().edges()) {
        const Point& a = drawing.at(e.u);
        const Point& b = drawing.at(e.v);
        out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
            << "\" y2=\"" << sy(b.y) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"black\">\n";
    for (VertexId v = 0; v < drawing.representation().vertex_count(); ++v) {
        const Point& p = drawing.at(v);
        out << "<rect x=\"" << sx(p.x) - 2 << "\" y=\"" << sy(p.y) - 2
            << "\" width=\"4\" height=\"4\"><title>" << v << "</title></rect>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

namespace {

std::string wide_string(Wide value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    unsigned __int128 m = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
    std::string digits;
    while (m > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

nlohmann::ordered_json pairs_json(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const ConvexityReport& r) {
    nlohmann::ordered_json j;
    j["is_convex"] = r.is_convex;
    j["offending_internal_faces"] = r.offending_internal_faces;
    if (r.orthoconvexity_witness) {
        j["orthoconvexity_witness"] = {{"first", r.orthoconvexity_witness->first},
                                       {"second", r.orthoconvexity_witness->second},
                                       {"reason", r.orthoconvexity_witness->reason}};
    } else {
        j["orthoconvexity_witness"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json to_json(const Conflict& c) {
    nlohmann::ordered_json j;
    j["axis"] = axis_name(c.axis);
    j["nodes"] = {c.lower_node, c.upper_node};
    j["responsible"] = {
        {{"vertex", c.lower_vertex}, {"opening", direction_name(c.lower_opening)}},
        {{"vertex", c.upper_vertex}, {"opening", direction_name(c.upper_opening)}}};
    if (c.is_minimal)
        j["is_minimal"] = *c.is_minimal;
    else
        j["is_minimal"] = nullptr;
    return j;
}

nlohmann::ordered_json to_json(const std::vector<Conflict>& cs) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : cs) out.push_back(to_json(c));
    return out;
}

nlohmann::ordered_json to_json(const UniversalityVerdict& v) {
    nlohmann::ordered_json j;
    j["is_universal"] = v.is_universal;
    j["hamiltonian_x"] = v.hamiltonian_x ? nlohmann::ordered_json(*v.hamiltonian_x) : nullptr;
    j["hamiltonian_y"] = v.hamiltonian_y ? nlohmann::ordered_json(*v.hamiltonian_y) : nullptr;
    j["counterexample"] = v.counterexample ? to_json(*v.counterexample) : nullptr;
    j["convexity_failure"] = v.convexity_failure ? to_json(*v.convexity_failure) : nullptr;
    return j;
}

nlohmann::ordered_json to_json(const GreedyReport& r) {
    nlohmann::ordered_json j;
    j["is_greedy"] = r.is_greedy;
    j["method_a"] = r.method_a;
    j["method_b"] = r.method_b;
    j["stuck_pairs"] = pairs_json(r.stuck_pairs);
    j["cell_violations"] = pairs_json(r.cell_violations);
    return j;
}

nlohmann::ordered_json to_json(const DilationReport& r) {
    nlohmann::ordered_json j;
    j["source"] = r.source;
    j["target"] = r.target;
    j["path_length"] = wide_string(r.path_length);
    j["squared_distance"] = wide_string(r.squared_distance);
    j["ratio"] = r.ratio;
    j["within_bound"] = r.within_bound;
    return j;
}

nlohmann::ordered_json to_json(const OrderingSearch& s) {
    static constexpr const char* kOutcomes[] = {"found", "infeasible", "unknown"};
    nlohmann::ordered_json j;
    j["outcome"] = kOutcomes[static_cast<int>(s.outcome)];
    j["series_parallel"] = s.series_parallel;
    j["ordering"] = s.ordering ? nlohmann::ordered_json(*s.ordering) : nullptr;
    j["reason"] = s.reason;
    return j;
}

nlohmann::ordered_json to_json(const GreedyTest& t) {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_name(t.verdict);
    j["stage"] = t.stage;
    j["reason"] = t.reason;
    j["convexity"] = t.convexity ? to_json(*t.convexity) : nullptr;
    j["ordering_x"] = t.x ? to_json(*t.x) : nullptr;
    j["ordering_y"] = t.y ? to_json(*t.y) : nullptr;
    return j;
}

nlohmann::ordered_json to_json(const PipelineResult& r) {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_name(r.verdict);
    j["stage"] = r.stage;
    j["reason"] = r.reason;
    j["convexity"] = r.convexity ? to_json(*r.convexity) : nullptr;
    j["conflicts"] = to_json(r.conflicts);
    j["greedy"] = r.greedy ? to_json(*r.greedy) : nullptr;
    j["dilation"] = r.dilation ? to_json(*r.dilation) : nullptr;
    if (r.drawing) {
        j["width"] = r.drawing->width();
        j["height"] = r.drawing->height();
    }
    nlohmann::ordered_json timings;
    for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
    j["timings_ms"] = timings;
    return j;
}

nlohmann::ordered_json to_json(const CorpusSummary& s) {
    nlohmann::ordered_json j;
    j["instances"] = s.instances.size();
    j["passed"] = s.passed;
    j["steps"] = s.steps;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& inst : s.instances)
        if (!inst.failures.empty())
            failures.push_back({{"seed", inst.seed}, {"failures", inst.failures}});
    j["failures"] = failures;
    if (s.worst_dilation) {
        j["max_dilation"] = {{"seed", s.worst_dilation->seed},
                             {"report", to_json(s.worst_dilation->dilation)}};
    }
    return j;
}

std::string to_dot(const ShapeDag& d) {
    std::ostringstream out;
    out << "digraph D_" << axis_name(d.axis()) << " {\n  rankdir=LR;\n";
    for (NodeId n = 0; n < d.node_count(); ++n) {
        out << "  n" << n << " [label=\"" << n << ": ";
        for (std::size_t i = 0; i < d.path(n).size(); ++i)
            out << (i ? "," : "") << d.path(n)[i];
        out << "\"];\n";
    }
    for (ArcId a = 0; a < d.graph().arc_count(); ++a)
        out << "  n" << d.graph().arc(a).tail << " -> n" << d.graph().arc(a).head
            << " [label=\"e" << d.arc_edge(a) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace ortho_greedy
