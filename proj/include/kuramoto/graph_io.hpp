#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kuramoto/error.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/partition.hpp"

namespace kuramoto {

/// Edge-list text: one "u v" pair per line, 1-indexed. Blank lines and
/// lines starting with '#' are skipped. A line "n <count>" fixes the vertex
/// count; otherwise it is the largest label seen.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    long declared = -1;
    long max_label = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line.substr(first));
        const auto where = " on line " + std::to_string(line_no);
        if (line[first] == 'n') {
            std::string tag;
            long count = 0;
            if (!(fields >> tag >> count) || tag != "n" || count < 0)
                throw Error(ErrorCode::ParseError, "bad header" + where);
            declared = count;
            continue;
        }
        long u = 0, v = 0;
        std::string rest;
        if (!(fields >> u >> v) || (fields >> rest))
            throw Error(ErrorCode::ParseError, "expected \"u v\"" + where);
        if (u < 1 || v < 1) throw Error(ErrorCode::VertexOutOfRange, "labels are 1-indexed" + where);
        max_label = std::max({max_label, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    const long n = declared >= 0 ? declared : max_label;
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// {"blocks": [[1,2],[3,4,5]]}
inline VertexPartition parse_partition(const std::string& text, std::size_t n) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("partition: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
        throw Error(ErrorCode::ParseError, "partition: expected an object with a \"blocks\" array");
    std::vector<std::vector<int>> labels;
    for (const auto& block : doc["blocks"]) {
        if (!block.is_array()) throw Error(ErrorCode::ParseError, "partition: each block must be an array");
        auto& out = labels.emplace_back();
        for (const auto& v : block) {
            if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "partition: labels must be integers");
            out.push_back(v.get<int>());
        }
    }
    return VertexPartition::from_labels(n, labels);
}

inline nlohmann::json partition_to_json(const VertexPartition& p) {
    return nlohmann::json{{"blocks", p.labels()}};
}

} // namespace kuramoto
