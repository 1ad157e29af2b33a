#pragma once

// Decides whether an unlabeled tree is realizable as a phi graph.
//
// Root the tree at a degree-1 vertex labeled 1; its neighbor must be 2
// (the only solution of phi(x) = 1 besides 1 itself). Each child of a
// vertex labeled x takes a distinct label from inverse_totient(x) minus
// x, so labels strictly increase toward the leaves and the search is
// finite. Sibling-injectivity forces global injectivity: equal labels
// imply equal depth, and walking up from two equally labeled vertices
// reaches two children of a common ancestor with equal labels. Any
// consistent labeling therefore certifies itself: the closure of its
// image adds no vertices and reproduces exactly the tree's edges.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phigraph/families.hpp"
#include "phigraph/inverse_totient.hpp"
#include "phigraph/phi_graph.hpp"
#include "phigraph/tree.hpp"

namespace phigraph {

inline constexpr u64 kDefaultBudget = 10'000'000;
inline constexpr std::size_t kMaxRecognizeOrder = 10'000;

enum class Verdict { realized, refuted, budget_exceeded };

struct RecognitionResult {
    Verdict verdict = Verdict::refuted;
    std::optional<std::vector<u64>> labeling;  // vertex id -> label
    std::optional<SeedSet> minimal_seed;
    u64 nodes_explored = 0;
};

// True iff the bijective labeling maps the tree exactly onto the phi
// graph built from its image. Malformed labelings (wrong size, zeros,
// duplicates) are reported as errors, not as a false verdict.
inline bool certify(const UnlabeledTree& tree, const std::vector<u64>& labeling) {
    if (labeling.size() != tree.order)
        throw std::invalid_argument("certify: labeling size must equal the tree order");
    std::vector<u64> sorted = labeling;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0)
        throw std::invalid_argument("certify: labels must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("certify: labels must be distinct");
    PhiGraph g = PhiGraph::build(SeedSet::from(labeling));
    if (g.vertices() != sorted) return false;  // closure escaped the label set
    auto graph_edges = g.edges();
    std::vector<std::pair<u64, u64>> want;
    want.reserve(tree.edges.size());
    for (auto [u, v] : tree.edges) {
        u64 a = labeling[u], b = labeling[v];
        want.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<std::pair<u64, u64>> have;
    have.reserve(graph_edges.size());
    for (auto [c, p] : graph_edges) have.emplace_back(std::min(c, p), std::max(c, p));
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    return want == have;
}

namespace detail {

struct SearchAborted {};

class Recognizer {
public:
    Recognizer(const UnlabeledTree& t, u64 budget)
        : tree_(t), adj_(t.adjacency()), budget_(budget) {}

    RecognitionResult run() {
        RecognitionResult res;
        if (tree_.order == 1) {
            res.verdict = Verdict::realized;
            res.labeling = std::vector<u64>{1};
            res.minimal_seed = SeedSet::from({1});
            return res;
        }
        try {
            for (std::size_t r = 0; r < tree_.order; ++r) {
                if (adj_[r].size() != 1) continue;
                root_at(r);
                std::size_t c = adj_[r][0];
                if (!feasible(c, 2)) continue;
                std::vector<u64> labels(tree_.order, 0);
                labels[r] = 1;
                assign(c, 2, labels);
                res.verdict = Verdict::realized;
                res.labeling = labels;
                res.minimal_seed = minimal_seed(PhiGraph::build(SeedSet::from(labels)));
                res.nodes_explored = explored_;
                return res;
            }
            res.verdict = Verdict::refuted;
        } catch (const SearchAborted&) {
            res.verdict = Verdict::budget_exceeded;
        }
        res.nodes_explored = explored_;
        return res;
    }

private:
    const UnlabeledTree& tree_;
    std::vector<std::vector<std::size_t>> adj_;
    u64 budget_;
    u64 explored_ = 0;
    std::vector<std::vector<std::size_t>> kids_;
    std::vector<std::string> canon_;
    std::map<std::pair<std::string, u64>, bool> memo_;  // (subtree shape, label)
    std::unordered_map<u64, std::vector<u64>> preimage_cache_;

    void root_at(std::size_t root) {
        std::size_t n = tree_.order;
        kids_.assign(n, {});
        canon_.assign(n, {});
        std::vector<std::size_t> order;
        order.reserve(n);
        std::vector<std::size_t> parent(n, n);
        order.push_back(root);
        for (std::size_t head = 0; head < order.size(); ++head) {
            std::size_t u = order[head];
            for (std::size_t v : adj_[u])
                if (v != parent[u]) {
                    parent[v] = u;
                    kids_[u].push_back(v);  // ascending: adj_ lists are sorted
                    order.push_back(v);
                }
        }
        for (std::size_t i = n; i-- > 0;) {  // children before parents
            std::size_t u = order[i];
            std::vector<std::string> parts;
            parts.reserve(kids_[u].size());
            for (std::size_t c : kids_[u]) parts.push_back(canon_[c]);
            std::sort(parts.begin(), parts.end());
            std::string enc = "(";
            for (auto& p : parts) enc += p;
            enc += ')';
            canon_[u] = std::move(enc);
        }
    }

    // Labels are bounded by the inverse_totient domain; hitting that
    // bound means the search cannot be finished, same as running out
    // of budget.
    const std::vector<u64>& preimages(u64 x) {
        auto it = preimage_cache_.find(x);
        if (it != preimage_cache_.end()) return it->second;
        std::vector<u64> sols;
        try {
            sols = inverse_totient(x).solutions;
        } catch (const std::domain_error&) {
            throw SearchAborted{};
        }
        std::erase(sols, x);
        return preimage_cache_.emplace(x, std::move(sols)).first->second;
    }

    void bump() {
        if (++explored_ > budget_) throw SearchAborted{};
    }

    // Can the subtree at u be labeled consistently when u gets x?
    bool feasible(std::size_t u, u64 x) {
        if (kids_[u].empty()) return true;
        auto key = std::make_pair(canon_[u], x);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bump();
        const auto& cands = preimages(x);
        std::vector<char> used(cands.size(), 0);
        bool ok = cands.size() >= kids_[u].size() && match(u, 0, cands, used, nullptr);
        memo_.emplace(std::move(key), ok);
        return ok;
    }

    // Injective child-to-label matching, children in id order and
    // candidates ascending, so the first witness found is the
    // lowest-candidate-first one.
    bool match(std::size_t u, std::size_t ci, const std::vector<u64>& cands,
               std::vector<char>& used, std::vector<u64>* chosen) {
        if (ci == kids_[u].size()) return true;
        std::size_t child = kids_[u][ci];
        for (std::size_t k = 0; k < cands.size(); ++k) {
            if (used[k]) continue;
            if (!feasible(child, cands[k])) continue;
            used[k] = 1;
            if (match(u, ci + 1, cands, used, chosen)) {
                if (chosen) (*chosen)[ci] = cands[k];
                return true;
            }
            used[k] = 0;
        }
        return false;
    }

    // Write the witness; feasible(u, x) already holds, so every locally
    // feasible matching extends to a full labeling and no backtracking
    // across levels is needed.
    void assign(std::size_t u, u64 x, std::vector<u64>& labels) {
        labels[u] = x;
        if (kids_[u].empty()) return;
        const auto& cands = preimages(x);
        std::vector<char> used(cands.size(), 0);
        std::vector<u64> chosen(kids_[u].size(), 0);
        if (!match(u, 0, cands, used, &chosen))
            throw std::logic_error("recognizer: witness reconstruction failed");
        for (std::size_t i = 0; i < kids_[u].size(); ++i) assign(kids_[u][i], chosen[i], labels);
    }
};

} // namespace detail

inline RecognitionResult recognize(const UnlabeledTree& tree, u64 budget = kDefaultBudget) {
    if (tree.order > kMaxRecognizeOrder)
        throw std::invalid_argument("recognize: tree order exceeds the supported maximum");
    return detail::Recognizer(tree, budget).run();
}

inline RecognitionResult recognize(const FamilySpec& spec, u64 budget = kDefaultBudget) {
    return recognize(generate(spec), budget);
}

} // namespace phigraph
