#include "dgeo/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dgeo {

using nlohmann::json;

json graph_to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

SimpleGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SimpleGraph::from_edge_list(n, edges);
}

SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

void write_graph_file(const SimpleGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open output file: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw input_error("cannot parse rational: " + s);
        }
    }
    throw input_error("rational must be an integer or a \"p/q\" string");
}

VertexFunction function_from_json(const json& j, int n) {
    if (!j.is_object()) throw input_error("function file must map vertex id to value");
    VertexFunction f;
    f.values.assign(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (const auto& [key, val] : j.items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw input_error("bad vertex id in function file: " + key);
        }
        if (v < 0 || v >= n) throw input_error("function vertex id out of range: " + key);
        f.values[v] = rational_from_json(val);
        seen[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw input_error("function missing value for vertex " + std::to_string(v));
    if (!f.injective()) throw input_error("vertex function must be injective");
    return f;
}

VertexFunction read_function_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open function file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return function_from_json(j, n);
}

std::string graph_to_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

json hypersurface_to_json(const HypersurfaceGraph& h) {
    json j = graph_to_json(h.graph);
    j["provenance"] = json::array();
    for (const auto& p : h.provenance) {
        json entry;
        entry["type"] = p.is_center ? "center" : "mixed-edge";
        entry["host_vertices"] = p.host_vertices;
        j["provenance"].push_back(entry);
    }
    return j;
}

std::string hypersurface_to_dot(const HypersurfaceGraph& h) {
    std::ostringstream out;
    out << "graph Gf {\n";
    for (VertexId v = 0; v < h.graph.vertex_count(); ++v) {
        const auto& p = h.provenance[v];
        out << "  " << v << " [shape=" << (p.is_center ? "square" : "circle") << ", label=\"";
        for (size_t i = 0; i < p.host_vertices.size(); ++i)
            out << (i ? "," : "") << p.host_vertices[i];
        out << "\"];\n";
    }
    for (const auto& [u, v] : h.graph.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace dgeo
