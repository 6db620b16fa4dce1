// Command-line front end: each subcommand prints a JSON document on stdout.
//
// Exit codes: 0 success, 1 negative answer to a yes/no query, 2 parse or
// validation error, 3 not realizable, 4 unknown, 5 internal invariant
// violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ortho_greedy/coords.hpp"
#include "ortho_greedy/errors.hpp"
#include "ortho_greedy/pipeline.hpp"

using namespace ortho_greedy;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;
constexpr int kNotRealizable = 3;
constexpr int kUnknown = 4;
constexpr int kInternal = 5;

struct Options {
    std::string input;
    std::string output;
    std::string json_path;
    std::string svg_path;
    std::uint64_t seed = 1;
    int steps = 20;
    std::string axis = "x";
    bool dot = false;
    std::string mode = "universal";
    std::string order_x;
    std::string order_y;
    std::string sequence;
    int q = 4;
    std::uint64_t seed_from = 1;
    std::uint64_t seed_to = 100;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError({"cannot write " + path});
    out << text;
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

// Accepts a JSON array literal or the path of a file holding one.
std::vector<NodeId> parse_order(const std::string& text) {
    std::string body = text;
    if (std::ifstream in(text); in) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        body = buffer.str();
    }
    try {
        return nlohmann::json::parse(body).get<std::vector<NodeId>>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError({std::string("malformed ordering: ") + e.what()});
    }
}

void require_convex(const RectilinearRepresentation& h) {
    if (!is_biconnected(h)) throw NotBiconnectedError("representation is not biconnected");
    if (!check_convex(h).is_convex)
        throw PreconditionError("operation needs a convex representation");
}

void write_drawing_outputs(const Drawing& d, const Options& o) {
    const std::string svg = !o.output.empty() ? o.output : o.svg_path;
    if (!svg.empty()) write_file(svg, render_svg(d));
    if (!o.json_path.empty()) write_file(o.json_path, serialize_drawing(d));
}

int cmd_check_convex(const Options& o) {
    const auto report = check_convex(load_representation(o.input));
    emit(to_json(report));
    return report.is_convex ? kOk : kNo;
}

int cmd_conflicts(const Options& o) {
    const auto h = load_representation(o.input);
    require_convex(h);
    emit(to_json(enumerate_conflicts(h)));
    return kOk;
}

int cmd_dag(const Options& o) {
    const auto h = load_representation(o.input);
    require_convex(h);
    const auto d = ShapeDag::build(h, o.axis == "y" ? Axis::Y : Axis::X);
    if (o.dot) {
        std::cout << to_dot(d);
        return kOk;
    }
    nlohmann::ordered_json j;
    j["axis"] = axis_name(d.axis());
    j["source"] = d.source();
    j["sink"] = d.sink();
    auto nodes = nlohmann::ordered_json::array();
    for (NodeId n = 0; n < d.node_count(); ++n) nodes.push_back(d.path(n));
    j["nodes"] = nodes;
    auto arcs = nlohmann::ordered_json::array();
    for (const Arc& a : d.graph().arcs()) arcs.push_back({a.tail, a.head});
    j["arcs"] = arcs;
    emit(j);
    return kOk;
}

int cmd_test_universal(const Options& o) {
    const auto verdict = test_universal(load_representation(o.input));
    emit(to_json(verdict));
    return verdict.is_universal ? kOk : kNo;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Universal:
        case Verdict::Realizable: return kOk;
        case Verdict::NotRealizable: return kNotRealizable;
        case Verdict::Unknown: return kUnknown;
    }
    return kInternal;
}

int cmd_test_greedy(const Options& o) {
    const auto result = test_greedy(load_representation(o.input));
    emit(to_json(result));
    return verdict_exit(result.verdict);
}

int cmd_draw(const Options& o) {
    auto h = std::make_shared<const RectilinearRepresentation>(load_representation(o.input));
    std::optional<Drawing> drawing;
    if (o.mode == "universal") {
        drawing = draw_universal_min_area(h);
    } else if (o.mode == "general") {
        require_convex(*h);
        std::vector<NodeId> sx, sy;
        for (Axis axis : {Axis::X, Axis::Y}) {
            const std::string& given = axis == Axis::X ? o.order_x : o.order_y;
            auto& target = axis == Axis::X ? sx : sy;
            if (!given.empty()) {
                target = parse_order(given);
                continue;
            }
            const auto search = find_good_ordering(ShapeDag::build(*h, axis));
            if (search.outcome != OrderingSearch::Outcome::Found) {
                emit(to_json(search));
                return search.outcome == OrderingSearch::Outcome::Infeasible ? kNotRealizable
                                                                             : kUnknown;
            }
            target = *search.ordering;
        }
        drawing = draw_general(h, sx, sy);
    } else {
        throw ValidationError({"unknown mode " + o.mode});
    }
    write_drawing_outputs(*drawing, o);
    const auto greedy = is_greedy(*drawing);
    nlohmann::ordered_json j;
    j["width"] = drawing->width();
    j["height"] = drawing->height();
    j["greedy"] = to_json(greedy);
    emit(j);
    return greedy.is_greedy ? kOk : kInternal;
}

int cmd_generate(const Options& o) {
    RectilinearRepresentation h = unit_rectangle();
    if (!o.sequence.empty()) {
        std::vector<int> kinds;
        std::stringstream in(o.sequence);
        for (std::string item; std::getline(in, item, ',');) kinds.push_back(std::stoi(item));
        h = generate_sequence(kinds);
    } else {
        h = generate_universal(o.seed, o.steps);
    }
    const std::string text = serialize_representation(h);
    if (o.output.empty())
        std::cout << text;
    else
        write_file(o.output, text);
    return kOk;
}

int cmd_fixture_exp(const Options& o) {
    const std::string text = serialize_representation(build_exponential_fixture(o.q).representation);
    if (o.output.empty())
        std::cout << text;
    else
        write_file(o.output, text);
    return kOk;
}

int cmd_verify(const Options& o) {
    const auto report = is_greedy(load_drawing(o.input));
    emit(to_json(report));
    if (report.method_a != report.method_b) return kInternal;
    return report.is_greedy ? kOk : kNo;
}

int cmd_dilation(const Options& o) {
    const auto report = dilation(load_drawing(o.input));
    emit(to_json(report));
    return report.within_bound ? kOk : kInternal;
}

int cmd_pipeline(const Options& o) {
    const auto result = run_pipeline(load_representation(o.input));
    if (result.drawing) write_drawing_outputs(*result.drawing, o);
    emit(to_json(result));
    if (result.greedy && (!result.greedy->is_greedy || !result.dilation ||
                          !result.dilation->within_bound))
        return kInternal;
    return verdict_exit(result.verdict);
}

int cmd_corpus(const Options& o) {
    int threads = 1;
    if (const char* env = std::getenv("ORTHO_GREEDY_THREADS")) threads = std::max(1, std::atoi(env));
    const auto summary = run_corpus(o.seed_from, o.seed_to, o.steps, threads);
    emit(to_json(summary));
    return summary.passed == static_cast<int>(summary.instances.size()) ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy rectilinear drawings: testing, construction and verification"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--json", o.json_path, "Write the drawing as JSON to this path")->expected(1);
    app.add_option("--svg", o.svg_path, "Write the drawing as SVG to this path");
    app.add_option("--seed", o.seed, "Generator seed");

    auto input = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", o.input, what)->required()->check(CLI::ExistingFile);
        sub->fallthrough();
    };

    std::map<CLI::App*, int (*)(const Options&)> handlers;
    auto* c = app.add_subcommand("check-convex", "Convexity report (exit 0 convex, 1 not)");
    input(c, "Representation JSON");
    handlers[c] = cmd_check_convex;

    c = app.add_subcommand("conflicts", "List conflicts of a convex representation");
    input(c, "Representation JSON");
    handlers[c] = cmd_conflicts;

    c = app.add_subcommand("dag", "Export a shape DAG");
    input(c, "Representation JSON");
    c->add_option("--axis", o.axis, "x or y")->check(CLI::IsMember({"x", "y"}));
    c->add_flag("--dot", o.dot, "Graphviz output");
    handlers[c] = cmd_dag;

    c = app.add_subcommand("test-universal", "Universal greedy test (exit 0 yes, 1 no)");
    input(c, "Representation JSON");
    handlers[c] = cmd_test_universal;

    c = app.add_subcommand("test-greedy", "Greedy realizability test");
    input(c, "Representation JSON");
    handlers[c] = cmd_test_greedy;

    c = app.add_subcommand("draw", "Draw a representation");
    input(c, "Representation JSON");
    c->add_option("--mode", o.mode, "universal or general")
        ->check(CLI::IsMember({"universal", "general"}));
    c->add_option("--order-x", o.order_x, "Ordering of D_x as JSON array or file");
    c->add_option("--order-y", o.order_y, "Ordering of D_y as JSON array or file");
    c->add_option("-o,--output", o.output, "SVG output path");
    handlers[c] = cmd_draw;

    c = app.add_subcommand("generate", "Generate a universal greedy representation");
    c->fallthrough();
    c->add_option("--steps", o.steps, "Number of primitive applications");
    c->add_option("--sequence", o.sequence, "Comma-separated primitive kinds (0 = flat)");
    c->add_option("-o,--output", o.output, "Output path");
    handlers[c] = cmd_generate;

    c = app.add_subcommand("fixture-exp", "Representation requiring exponential area");
    c->fallthrough();
    c->add_option("--q", o.q, "Size parameter, at least 2")->check(CLI::Range(2, 4096));
    c->add_option("-o,--output", o.output, "Output path");
    handlers[c] = cmd_fixture_exp;

    c = app.add_subcommand("verify", "Greedy check of a drawing (exit 0 greedy, 1 not)");
    input(c, "Drawing JSON");
    handlers[c] = cmd_verify;

    c = app.add_subcommand("dilation", "Dilation of a greedy drawing");
    input(c, "Drawing JSON");
    handlers[c] = cmd_dilation;

    c = app.add_subcommand("pipeline", "Full decision and drawing pipeline");
    input(c, "Representation JSON");
    c->add_option("-o,--output", o.output, "SVG output path");
    handlers[c] = cmd_pipeline;

    c = app.add_subcommand("corpus", "Generator campaign with all invariant checks");
    c->fallthrough();
    c->add_option("--from", o.seed_from, "First seed");
    c->add_option("--to", o.seed_to, "Last seed");
    c->add_option("--steps", o.steps, "Steps per instance");
    handlers[c] = cmd_corpus;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        for (auto* sub : app.get_subcommands()) return handlers.at(sub)(o);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const NotRealizableError& e) {
        std::cerr << "not realizable: " << e.what() << '\n';
        return kNotRealizable;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const IllegalOperationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InvalidOrderingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
