#pragma once

// Unlabeled trees over ids 0..order-1: validation, text/DOT round trips,
// AHU canonical forms and isomorphism.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phigraph {

struct UnlabeledTree {
    std::size_t order = 1;
    // normalized: first < second, sorted lexicographically
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    static UnlabeledTree from_edges(std::size_t order,
                                    std::vector<std::pair<std::size_t, std::size_t>> e) {
        if (order == 0) throw std::invalid_argument("tree: order must be positive");
        if (e.size() + 1 != order) throw std::invalid_argument("tree: edge count must be order - 1");
        for (auto& [u, v] : e) {
            if (u >= order || v >= order) throw std::invalid_argument("tree: vertex id out of range");
            if (u == v) throw std::invalid_argument("tree: self-loop");
            if (u > v) std::swap(u, v);
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("tree: duplicate edge");
        UnlabeledTree t;
        t.order = order;
        t.edges = std::move(e);
        if (!t.connected()) throw std::invalid_argument("tree: not connected");
        return t;
    }

    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(order);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& list : adj) std::sort(list.begin(), list.end());
        return adj;
    }

private:
    bool connected() const {
        auto adj = adjacency();
        std::vector<char> seen(order, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == order;
    }
};

namespace detail {

inline std::size_t parse_vertex_id(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("tree file: bad vertex id '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("tree file: vertex id too large '" + tok + "'");
    }
}

inline UnlabeledTree parse_tree_dot(const std::vector<std::string>& lines) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t max_id = 0;
    bool any = false;
    auto note = [&](std::size_t id) {
        max_id = std::max(max_id, id);
        any = true;
    };
    for (const auto& raw : lines) {
        std::string line = raw;
        for (char& c : line)
            if (c == ';' || c == '{' || c == '}') c = ' ';
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "graph") continue;  // header, possibly with a name
        if (toks.size() == 1) {
            note(parse_vertex_id(toks[0]));
        } else if (toks.size() == 3 && toks[1] == "--") {
            std::size_t u = parse_vertex_id(toks[0]);
            std::size_t v = parse_vertex_id(toks[2]);
            note(u);
            note(v);
            edges.emplace_back(u, v);
        } else {
            throw std::invalid_argument("tree file: unrecognized dot line '" + raw + "'");
        }
    }
    if (!any) throw std::invalid_argument("tree file: empty dot graph");
    return UnlabeledTree::from_edges(max_id + 1, std::move(edges));
}

} // namespace detail

// Edge-list tree format: one "u v" pair per line with 0-based ids,
// `#` starts a comment, blank lines are skipped, and the one-vertex
// tree is written as the single line "order 1". The DOT output of
// this library is accepted too, so exports can be re-imported.
inline UnlabeledTree parse_tree(std::istream& in) {
    std::vector<std::string> lines;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t declared_order = 0;
    std::size_t max_id = 0;
    bool has_order = false, has_edge = false, dot = false;
    for (std::string raw; std::getline(in, raw);) {
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        lines.push_back(line);
        if (dot) continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "graph") {
            dot = true;
            continue;
        }
        if (toks[0] == "order") {
            if (toks.size() != 2 || has_order)
                throw std::invalid_argument("tree file: malformed order line");
            declared_order = detail::parse_vertex_id(toks[1]);
            if (declared_order == 0) throw std::invalid_argument("tree file: order must be positive");
            has_order = true;
            continue;
        }
        if (toks.size() != 2)
            throw std::invalid_argument("tree file: expected 'u v' on line '" + raw + "'");
        std::size_t u = detail::parse_vertex_id(toks[0]);
        std::size_t v = detail::parse_vertex_id(toks[1]);
        max_id = std::max({max_id, u, v});
        has_edge = true;
        edges.emplace_back(u, v);
    }
    if (dot) return detail::parse_tree_dot(lines);
    if (!has_order && !has_edge) throw std::invalid_argument("tree file: no edges");
    std::size_t order = has_order ? declared_order : max_id + 1;
    return UnlabeledTree::from_edges(order, std::move(edges));
}

inline UnlabeledTree parse_tree(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_tree(in);
}

inline std::string format_tree(const UnlabeledTree& t) {
    if (t.order == 1) return "order 1\n";
    std::string out;
    for (auto [u, v] : t.edges) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

inline std::string tree_to_dot(const UnlabeledTree& t) {
    std::string out = "graph G {\n";
    for (std::size_t v = 0; v < t.order; ++v) {
        out += "  ";
        out += std::to_string(v);
        out += ";\n";
    }
    for (auto [u, v] : t.edges) {
        out += "  ";
        out += std::to_string(u);
        out += " -- ";
        out += std::to_string(v);
        out += ";\n";
    }
    out += "}\n";
    return out;
}

// One or two middle vertices found by peeling leaves.
inline std::vector<std::size_t> tree_centers(const UnlabeledTree& t) {
    if (t.order == 1) return {0};
    auto adj = t.adjacency();
    std::vector<std::size_t> degree(t.order);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < t.order; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] == 1) layer.push_back(v);
    }
    std::size_t remaining = t.order;
    while (remaining > 2) {
        std::vector<std::size_t> next;
        remaining -= layer.size();
        for (std::size_t leaf : layer)
            for (std::size_t nb : adj[leaf])
                if (--degree[nb] == 1) next.push_back(nb);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace detail {

// AHU encoding of the subtree at u (parent excluded): "(" + sorted child
// encodings + ")". Equal strings <=> isomorphic rooted trees.
inline std::string rooted_encoding(const std::vector<std::vector<std::size_t>>& adj,
                                   std::size_t root, std::size_t parent_of_root) {
    struct Frame {
        std::size_t node, parent, next_child;
        std::vector<std::string> parts;
    };
    std::vector<Frame> stack;
    stack.push_back({root, parent_of_root, 0, {}});
    std::string result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbs = adj[f.node];
        if (f.next_child < nbs.size()) {
            std::size_t c = nbs[f.next_child++];
            if (c != f.parent) stack.push_back({c, f.node, 0, {}});
        } else {
            std::sort(f.parts.begin(), f.parts.end());
            std::string enc = "(";
            for (const auto& p : f.parts) enc += p;
            enc += ')';
            stack.pop_back();
            if (stack.empty())
                result = std::move(enc);
            else
                stack.back().parts.push_back(std::move(enc));
        }
    }
    return result;
}

} // namespace detail

// Canonical form of an unlabeled tree: rooted encoding at the centroid-free
// canonical root (the center, taking the smaller string when there are two).
inline std::string canonical_form(const UnlabeledTree& t) {
    auto adj = t.adjacency();
    std::string best;
    for (std::size_t c : tree_centers(t)) {
        std::string enc = detail::rooted_encoding(adj, c, c);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

inline bool isomorphic(const UnlabeledTree& a, const UnlabeledTree& b) {
    return a.order == b.order && canonical_form(a) == canonical_form(b);
}

// Renumber vertices in breadth-first order from the given root, visiting
// neighbors in ascending old-id order.
inline UnlabeledTree bfs_relabel(const UnlabeledTree& t, std::size_t root = 0) {
    if (root >= t.order) throw std::invalid_argument("bfs_relabel: root out of range");
    auto adj = t.adjacency();
    std::vector<std::size_t> newid(t.order, t.order);
    std::queue<std::size_t> q;
    q.push(root);
    newid[root] = 0;
    std::size_t next = 1;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : adj[u])
            if (newid[v] == t.order) {
                newid[v] = next++;
                q.push(v);
            }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(t.edges.size());
    for (auto [u, v] : t.edges) edges.emplace_back(newid[u], newid[v]);
    return UnlabeledTree::from_edges(t.order, std::move(edges));
}

} // namespace phigraph
