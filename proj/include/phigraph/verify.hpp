#pragma once

// End-to-end verification suite: every documented identity, golden value
// and classification result, checked exactly. Used by the acceptance
// binary and by the verify-paper CLI subcommand.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phigraph/families.hpp"
#include "phigraph/inverse_totient.hpp"
#include "phigraph/phi_graph.hpp"
#include "phigraph/recognizer.hpp"
#include "phigraph/totient.hpp"
#include "phigraph/tree.hpp"

namespace phigraph {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, empty when passed
};

namespace detail {

class Checker {
public:
    void require(bool cond, const std::string& what) {
        if (!cond && fail_.empty()) fail_ = what;
    }
    bool ok() const { return fail_.empty(); }
    const std::string& detail() const { return fail_; }

private:
    std::string fail_;
};

inline std::string join(const std::vector<u64>& xs) {
    std::string out;
    for (u64 x : xs) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

// Fixed-seed corpus shared by the tree-law and leaf-bound criteria.
inline std::vector<SeedSet> random_seed_corpus() {
    std::mt19937_64 rng(20250815);
    std::vector<SeedSet> corpus;
    corpus.reserve(500);
    for (int i = 0; i < 500; ++i) {
        std::size_t size = 1 + rng() % 12;
        std::vector<u64> xs;
        xs.reserve(size);
        for (std::size_t j = 0; j < size; ++j) xs.push_back(1 + rng() % 1'000'000);
        corpus.push_back(SeedSet::from(std::move(xs)));
    }
    return corpus;
}

inline Checker check_example_graph() {
    Checker c;
    PhiGraph g = PhiGraph::build(SeedSet::from({3, 7, 11, 20}));
    std::vector<u64> verts{1, 2, 3, 4, 6, 7, 8, 10, 11, 20};
    c.require(g.vertices() == verts, "vertex set is " + join(g.vertices()));
    std::vector<std::pair<u64, u64>> edges{{2, 1}, {3, 2}, {4, 2},  {6, 2},  {7, 6},
                                           {8, 4}, {10, 4}, {11, 10}, {20, 8}};
    c.require(g.edges() == edges, "edge set differs");
    return c;
}

inline Checker check_inverse_totient() {
    Checker c;
    auto expect = [&](u64 m, const std::vector<u64>& want) {
        auto got = inverse_totient(m).solutions;
        c.require(got == want,
                  "invphi(" + std::to_string(m) + ") = {" + join(got) + "}, expected {" +
                      join(want) + "}");
    };
    expect(1, {1, 2});
    expect(2, {3, 4, 6});
    expect(3, {});
    expect(5, {});
    expect(7, {});
    expect(14, {});
    expect(4, {5, 8, 10, 12});
    expect(6, {7, 9, 14, 18});
    for (u64 m = 1; m <= 2000 && c.ok(); ++m) {
        u64 bound = 2 * m * m + 10;
        c.require(inverse_totient(m).solutions == inverse_totient_brute(m, bound).solutions,
                  "solver disagrees with brute force at m = " + std::to_string(m));
    }
    return c;
}

inline Checker check_gauss_identity() {
    Checker c;
    for (u64 n = 1; n <= 100'000 && c.ok(); ++n)
        c.require(divisor_totient_sum(n) == n,
                  "divisor totient sum fails at n = " + std::to_string(n));
    return c;
}

inline Checker check_tree_and_depth(const std::vector<SeedSet>& corpus) {
    Checker c;
    for (const SeedSet& seed : corpus) {
        if (!c.ok()) break;
        PhiGraph g = PhiGraph::build(seed);
        c.require(is_tree(g), "not a tree for seed {" + join(seed.elements) + "}");
        c.require(g.edge_count() == g.order() - 1, "edge count off for seed {" + join(seed.elements) + "}");
        for (u64 v : g.vertices())
            c.require(depth(g, v) == iteration_length(v),
                      "depth != iteration length at vertex " + std::to_string(v));
    }
    return c;
}

inline Checker check_star_classification() {
    Checker c;
    const std::vector<std::vector<u64>> closures{
        {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4, 6}};
    for (u64 n = 1; n <= 4; ++n) {
        UnlabeledTree star = generate(FamilySpec{FamilyKind::star, n});
        RecognitionResult r = recognize(star);
        c.require(r.verdict == Verdict::realized, "star " + std::to_string(n) + " not realized");
        if (r.verdict != Verdict::realized) continue;
        std::vector<u64> labels = *r.labeling;
        c.require(certify(star, labels), "star witness fails certification");
        std::sort(labels.begin(), labels.end());
        c.require(labels == closures[n - 1],
                  "star " + std::to_string(n) + " closure is {" + join(labels) + "}");
    }
    for (u64 n = 5; n <= 8; ++n) {
        RecognitionResult r = recognize(FamilySpec{FamilyKind::star, n});
        c.require(r.verdict == Verdict::refuted,
                  "star " + std::to_string(n) + " not exhaustively refuted");
    }
    return c;
}

inline Checker check_corona_banana() {
    Checker c;
    for (const char* s : {"corona:path:2,m=4", "corona:path:3,m=4", "banana:1x6", "banana:2x6",
                          "banana:1x7"}) {
        RecognitionResult r = recognize(parse_family_spec(s));
        c.require(r.verdict == Verdict::refuted, std::string(s) + " not exhaustively refuted");
    }
    return c;
}

inline Checker check_centipedes() {
    Checker c;
    for (u64 n = 2; n <= 20; ++n) {
        FamilySpec spec{FamilyKind::centipede, n};
        UnlabeledTree want = generate(spec);
        PhiGraph g = PhiGraph::build(*known_seed(spec));
        c.require(isomorphic(shape_of(g), want),
                  "centipede " + std::to_string(n) + " seed builds the wrong shape");
        c.require(recognize(want).verdict == Verdict::realized,
                  "centipede " + std::to_string(n) + " not recognized");
    }
    return c;
}

inline Checker check_chemical_trees() {
    Checker c;
    for (const char* name : {"isomer:methane", "isomer:ethane", "isomer:propane", "isomer:butane",
                             "isomer:isobutane", "isomer:pentane", "isomer:isopentane",
                             "nanostar:d2"}) {
        FamilySpec spec = parse_family_spec(name);
        auto seed = known_seed(spec);
        c.require(seed.has_value(), std::string(name) + " has no seed");
        if (!seed) continue;
        c.require(isomorphic(shape_of(PhiGraph::build(*seed)), generate(spec)),
                  std::string(name) + " seed builds the wrong shape");
    }
    c.require(recognize(parse_family_spec("isomer:neopentane")).verdict == Verdict::refuted,
              "neopentane not exhaustively refuted");
    for (u64 n = 1; n <= 8; ++n)
        c.require(recognize(FamilySpec{FamilyKind::alkane, n}).verdict == Verdict::realized,
                  "alkane " + std::to_string(n) + " not recognized");
    for (u64 n = 6; n <= 12; ++n) {
        PhiGraph g = PhiGraph::build(*known_seed(FamilySpec{FamilyKind::alkane, n}));
        u64 deg4 = 0, deg1 = 0;
        for (u64 v : g.vertices()) {
            if (g.degree(v) == 4) ++deg4;
            if (g.degree(v) == 1) ++deg1;
        }
        c.require(g.order() == 3 * n + 2 && deg4 == n && deg1 == 2 * n + 2,
                  "alkane " + std::to_string(n) + " seed has wrong atom counts");
    }
    return c;
}

inline Checker check_nanostar() {
    Checker c;
    SeedSet seed = SeedSet::from({3, 256, 376, 384, 564});
    std::vector<u64> want{1, 2, 3, 4, 8, 16, 32, 40, 64, 88, 128, 184, 256, 376, 384, 564};
    c.require(closure(seed) == want, "closure is {" + join(closure(seed)) + "}");
    c.require(isomorphic(shape_of(PhiGraph::build(seed)), generate(parse_family_spec("nanostar:d2"))),
              "closure shape differs from the 16-vertex tree");
    return c;
}

inline Checker check_perfect_totients() {
    Checker c;
    c.require(totient_sum(15) == 15, "totient sum of 15 is not 15");
    u64 power = 1;
    for (int k = 1; k <= 12; ++k) {
        power *= 3;
        c.require(is_perfect_totient(power),
                  "3^" + std::to_string(k) + " should be perfect totient");
    }
    for (u64 p : {2ull, 5ull, 7ull, 11ull, 13ull}) {
        u64 pk = 1;
        for (int k = 1; k <= 8; ++k) {
            pk *= p;
            c.require(!is_perfect_totient(pk),
                      std::to_string(p) + "^" + std::to_string(k) + " should not be perfect totient");
        }
    }
    for (u64 n : perfect_totient_numbers_upto(9'999))
        if (is_prime(4 * n + 1))
            c.require(is_perfect_totient(3 * (4 * n + 1)),
                      "3(4n+1) not perfect totient for n = " + std::to_string(n));
    return c;
}

inline Checker check_leaf_bounds(const std::vector<SeedSet>& corpus) {
    Checker c;
    for (const SeedSet& seed : corpus) {
        if (!c.ok()) break;
        PhiGraph g = PhiGraph::build(seed);
        if (g.order() < 2) continue;
        std::size_t t = leaves(g).size();
        std::size_t min_size = minimal_seed(g).elements.size();
        c.require(t <= min_size + 1 && min_size >= t - 1,
                  "leaf bound fails for seed {" + join(seed.elements) + "}");
    }
    SeedSet b = construct_seed_with_leaves(5, 3);
    c.require(b.elements.size() == 5, "constructed seed has size " + std::to_string(b.elements.size()));
    c.require(leaves(PhiGraph::build(b)).size() == 3,
              "constructed seed {" + join(b.elements) + "} does not give 3 leaves");
    return c;
}

} // namespace detail

inline std::vector<CriterionResult> run_acceptance_suite() {
    auto corpus = detail::random_seed_corpus();
    std::vector<std::pair<std::string, detail::Checker>> checks;
    checks.emplace_back("graph of {3,7,11,20}", detail::check_example_graph());
    checks.emplace_back("inverse totient values and oracle", detail::check_inverse_totient());
    checks.emplace_back("divisor totient identity", detail::check_gauss_identity());
    checks.emplace_back("tree shape and depth laws", detail::check_tree_and_depth(corpus));
    checks.emplace_back("star classification", detail::check_star_classification());
    checks.emplace_back("corona and banana refutations", detail::check_corona_banana());
    checks.emplace_back("centipede realization", detail::check_centipedes());
    checks.emplace_back("chemical trees", detail::check_chemical_trees());
    checks.emplace_back("nanostar D2", detail::check_nanostar());
    checks.emplace_back("perfect totient numbers", detail::check_perfect_totients());
    checks.emplace_back("leaf count bounds", detail::check_leaf_bounds(corpus));
    std::vector<CriterionResult> results;
    int i = 0;
    for (auto& [name, checker] : checks) {
        ++i;
        results.push_back({i, name, checker.ok(), checker.detail()});
    }
    return results;
}

inline bool acceptance_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

inline std::string format_acceptance_report(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    int passed = 0;
    for (const auto& r : results) {
        out << '[' << (r.index < 10 ? " " : "") << r.index << '/' << results.size() << "] "
            << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.passed && !r.detail.empty()) out << "  (" << r.detail << ")";
        out << '\n';
        if (r.passed) ++passed;
    }
    out << passed << " passed, " << (results.size() - static_cast<std::size_t>(passed))
        << " failed\n";
    return out.str();
}

} // namespace phigraph
