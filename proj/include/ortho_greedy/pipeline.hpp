#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ortho_greedy/convexity.hpp"
#include "ortho_greedy/drawing.hpp"
#include "ortho_greedy/ordering.hpp"
#include "ortho_greedy/shapedags.hpp"
#include "ortho_greedy/universal.hpp"
#include "ortho_greedy/verify.hpp"

namespace ortho_greedy {

enum class Verdict { Universal, Realizable, NotRealizable, Unknown };

const char* verdict_name(Verdict v);

struct OrderingSearch {
    enum class Outcome { Found, Infeasible, Unknown };
    Outcome outcome = Outcome::Unknown;
    std::optional<std::vector<NodeId>> ordering;
    bool series_parallel = false;
    std::string reason;
};

// Hamiltonian order if there is one, otherwise the series-parallel
// construction, otherwise exhaustive search when the DAG has at most
// `exhaustive_limit` nodes.
OrderingSearch find_good_ordering(const ShapeDag& d, int exhaustive_limit = 9);

struct GreedyTest {
    Verdict verdict = Verdict::Unknown;
    std::string stage;
    std::string reason;
    std::optional<ConvexityReport> convexity;
    std::optional<OrderingSearch> x;
    std::optional<OrderingSearch> y;
};

// Decides greedy realizability of a biconnected representation. Throws
// NotBiconnectedError otherwise.
GreedyTest test_greedy(const RectilinearRepresentation& h);

struct PipelineResult {
    Verdict verdict = Verdict::Unknown;
    std::string stage;  // last stage reached
    std::string reason;
    std::optional<ConvexityReport> convexity;
    std::vector<Conflict> conflicts;
    std::optional<Drawing> drawing;
    std::optional<GreedyReport> greedy;
    std::optional<DilationReport> dilation;
    std::vector<std::pair<std::string, double>> timings_ms;
};

// Trees go to the tree construction; other inputs must be biconnected and run
// convexity -> universality -> orderings -> coordinates -> verification.
PipelineResult run_pipeline(const RectilinearRepresentation& h);

struct CorpusInstance {
    std::uint64_t seed = 0;
    int vertices = 0;
    int edges = 0;
    std::vector<std::string> failures;
    DilationReport dilation;
};

struct CorpusSummary {
    int steps = 0;
    std::vector<CorpusInstance> instances;
    int passed = 0;
    std::optional<CorpusInstance> worst_dilation;
};

// Checks every generated instance against all universality and drawing
// invariants; instances are processed on `threads` worker threads.
CorpusSummary run_corpus(std::uint64_t first_seed, std::uint64_t last_seed, int steps,
                         int threads);

// Problems found for one universal representation; empty when all checks pass.
std::vector<std::string> audit_universal(const RectilinearRepresentation& h,
                                         DilationReport* dilation_out = nullptr);

std::string render_svg(const Drawing& drawing);

nlohmann::ordered_json to_json(const ConvexityReport& r);
nlohmann::ordered_json to_json(const Conflict& c);
nlohmann::ordered_json to_json(const std::vector<Conflict>& cs);
nlohmann::ordered_json to_json(const UniversalityVerdict& v);
nlohmann::ordered_json to_json(const GreedyReport& r);
nlohmann::ordered_json to_json(const DilationReport& r);
nlohmann::ordered_json to_json(const OrderingSearch& s);
nlohmann::ordered_json to_json(const GreedyTest& t);
nlohmann::ordered_json to_json(const PipelineResult& r);
nlohmann::ordered_json to_json(const CorpusSummary& s);
std::string to_dot(const ShapeDag& d);

}  // namespace ortho_greedy
