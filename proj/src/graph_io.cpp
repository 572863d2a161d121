#include "rigidlink/graph_io.hpp"

#include <cstdint>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rigidlink {

namespace {

using nlohmann::json;

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen_edges;
    int seen = 0;

    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, lineno); };

    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m)) fail("expected header \"n m\"");
            if (n < 0 || m < 0) fail("negative counts in header");
            std::string extra;
            if (fields >> extra) fail("trailing tokens after header");
            continue;
        }
        int u, v;
        if (!(fields >> u >> v)) fail("expected edge line \"u v\"");
        std::string extra;
        if (fields >> extra) fail("trailing tokens after edge");
        if (seen >= m) fail("more edges than declared");
        ++seen;
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex id out of range");
        if (u > v) fail("edge endpoints must satisfy u < v");
        Edge e = make_edge(u, v);
        if (!seen_edges.insert(e).second)
            fail("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("empty input: missing header \"n m\"");
    if (seen != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(seen));
    try {
        return Graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Graph parse_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("missing integer field \"n\"");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("missing array field \"edges\"");

    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw ParseError("each edge must be a 2-array of integers");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    std::map<int, std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object()) throw ParseError("\"labels\" must be an object");
        for (const auto& [key, value] : doc["labels"].items()) {
            if (!value.is_string()) throw ParseError("label values must be strings");
            int v;
            try {
                size_t pos = 0;
                v = std::stoi(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("label keys must be integer vertex ids, got \"" + key + "\"");
            }
            labels[v] = value.get<std::string>();
        }
    }
    try {
        return Graph(n, std::move(edges), std::move(labels));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_json(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

Graph parse_graph_auto(const std::string& text) {
    size_t start = text.find_first_not_of(" \t\r\n");
    GraphFormat format =
        (start != std::string::npos && text[start] == '{') ? GraphFormat::Json : GraphFormat::EdgeList;
    return parse_graph(text, format);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::EdgeList) {
        std::ostringstream out;
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
        return out.str();
    }
    json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [v, label] : g.labels()) labels[std::to_string(v)] = label;
        doc["labels"] = labels;
    }
    return doc.dump();
}

std::string graph_digest(const Graph& g) {
    std::string canonical = serialize_graph(g, GraphFormat::Json);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace rigidlink
