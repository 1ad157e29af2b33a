#pragma once

// Serialization of phi graphs. Everything is emitted in ascending order
// so output is byte-stable across runs.

#include <string>

#include <json.hpp>

#include "phigraph/phi_graph.hpp"

namespace phigraph {

enum class ExportFormat { dot, json };

inline std::string graph_to_json(const PhiGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices();
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [c, p] : g.edges()) j["edges"].push_back({c, p});
    j["seed"] = g.seed();
    return j.dump() + "\n";
}

inline std::string graph_to_dot(const PhiGraph& g) {
    std::string out = "graph G {\n";
    for (u64 v : g.vertices()) {
        out += "  ";
        out += std::to_string(v);
        out += ";\n";
    }
    for (auto [c, p] : g.edges()) {
        out += "  ";
        out += std::to_string(c);
        out += " -- ";
        out += std::to_string(p);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

inline std::string export_graph(const PhiGraph& g, ExportFormat format) {
    return format == ExportFormat::json ? graph_to_json(g) : graph_to_dot(g);
}

} // namespace phigraph
