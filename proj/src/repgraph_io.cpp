#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ortho_greedy/errors.hpp"
#include "ortho_greedy/repgraph.hpp"

namespace ortho_greedy {

RectilinearRepresentation parse_representation(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError({std::string("malformed document: ") + e.what()});
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ValidationError({"malformed document: expected keys \"vertices\" and \"edges\""});
    if (!doc["vertices"].is_number_integer())
        throw ValidationError({"malformed document: \"vertices\" must be an integer"});
    if (!doc["edges"].is_array())
        throw ValidationError({"malformed document: \"edges\" must be an array"});

    std::vector<std::string> issues;
    std::vector<Edge> edges;
    int index = 0;
    for (const auto& item : doc["edges"]) {
        const std::string where = "edge " + std::to_string(index++);
        if (!item.is_object() || !item.contains("u") || !item.contains("v") ||
            !item.contains("dir") || !item["u"].is_number_integer() ||
            !item["v"].is_number_integer() || !item["dir"].is_string()) {
            issues.push_back("malformed document: " + where +
                             " needs integer \"u\", \"v\" and string \"dir\"");
            continue;
        }
        const std::string dir = item["dir"].get<std::string>();
        if (dir != "E" && dir != "N") {
            issues.push_back("malformed document: " + where + " has dir \"" + dir +
                             "\", expected \"E\" or \"N\"");
            continue;
        }
        edges.push_back({item["u"].get<int>(), item["v"].get<int>(),
                         dir == "E" ? EdgeDir::East : EdgeDir::North});
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return RectilinearRepresentation::build(doc["vertices"].get<int>(), std::move(edges));
}

std::string serialize_representation(const RectilinearRepresentation& h) {
    std::ostringstream out;
    out << "{\n  \"vertices\": " << h.vertex_count() << ",\n  \"edges\": [";
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n") << "    {\"u\": " << edges[i].u
            << ", \"v\": " << edges[i].v << ", \"dir\": \""
            << (edges[i].dir == EdgeDir::East ? 'E' : 'N') << "\"}";
    }
    out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

RectilinearRepresentation load_representation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open " + path});
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_representation(buffer.str());
}

}  // namespace ortho_greedy
