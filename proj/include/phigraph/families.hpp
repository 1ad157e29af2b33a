#pragma once

// Named tree families: paths, stars, centipedes, coronas with empty
// graphs, banana trees, straight-chain alkanes, the C1..C5 isomers and
// the D2 nanostar, plus the known constructive seed sets where they exist.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phigraph/phi_graph.hpp"
#include "phigraph/tree.hpp"
#include "phigraph/totient.hpp"

namespace phigraph {

enum class FamilyKind { path, star, centipede, corona, banana, alkane, isomer, nanostar_d2 };

enum class IsomerName { methane, ethane, propane, butane, isobutane, pentane, isopentane, neopentane };

struct FamilySpec {
    FamilyKind kind{};
    u64 n = 0;                              // length / copy count, kind-specific
    u64 m = 0;                              // corona pendants per vertex, banana star size
    IsomerName isomer = IsomerName::methane;
    std::shared_ptr<const FamilySpec> base; // corona base tree
};

namespace detail {

inline u64 parse_nat(std::string_view tok, std::string_view what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument(std::string(what) + ": expected a number, got '" +
                                    std::string(tok) + "'");
    try {
        return std::stoull(std::string(tok));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument(std::string(what) + ": number out of range '" +
                                    std::string(tok) + "'");
    }
}

inline const char* isomer_name(IsomerName name) {
    switch (name) {
        case IsomerName::methane: return "methane";
        case IsomerName::ethane: return "ethane";
        case IsomerName::propane: return "propane";
        case IsomerName::butane: return "butane";
        case IsomerName::isobutane: return "isobutane";
        case IsomerName::pentane: return "pentane";
        case IsomerName::isopentane: return "isopentane";
        case IsomerName::neopentane: return "neopentane";
    }
    return "?";
}

} // namespace detail

inline void validate_spec(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path:
        case FamilyKind::star:
        case FamilyKind::alkane:
            if (spec.n < 1) throw std::invalid_argument("family spec: n must be at least 1");
            break;
        case FamilyKind::centipede:
            if (spec.n < 2) throw std::invalid_argument("centipede: n must be at least 2");
            break;
        case FamilyKind::corona:
            if (!spec.base) throw std::invalid_argument("corona: missing base spec");
            if (spec.m < 1) throw std::invalid_argument("corona: m must be at least 1");
            validate_spec(*spec.base);
            break;
        case FamilyKind::banana:
            if (spec.n < 1) throw std::invalid_argument("banana: n must be at least 1");
            if (spec.m < 2) throw std::invalid_argument("banana: m must be at least 2");
            break;
        case FamilyKind::isomer:
        case FamilyKind::nanostar_d2:
            break;
    }
}

// Spec strings: path:5, star:4, centipede:7, corona:path:3,m=4,
// banana:2x7, alkane:6, isomer:neopentane, nanostar:d2.
inline FamilySpec parse_family_spec(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos || colon + 1 == s.size())
        throw std::invalid_argument("family spec: expected 'kind:params', got '" + std::string(s) + "'");
    std::string_view kind = s.substr(0, colon);
    std::string_view rest = s.substr(colon + 1);
    FamilySpec spec;
    if (kind == "path" || kind == "star" || kind == "centipede" || kind == "alkane") {
        spec.kind = kind == "path"        ? FamilyKind::path
                    : kind == "star"      ? FamilyKind::star
                    : kind == "centipede" ? FamilyKind::centipede
                                          : FamilyKind::alkane;
        spec.n = detail::parse_nat(rest, kind);
    } else if (kind == "banana") {
        auto x = rest.find('x');
        if (x == std::string_view::npos)
            throw std::invalid_argument("banana: expected 'banana:NxM', got '" + std::string(s) + "'");
        spec.kind = FamilyKind::banana;
        spec.n = detail::parse_nat(rest.substr(0, x), "banana n");
        spec.m = detail::parse_nat(rest.substr(x + 1), "banana m");
    } else if (kind == "corona") {
        auto sep = rest.rfind(",m=");
        if (sep == std::string_view::npos)
            throw std::invalid_argument("corona: expected 'corona:BASE,m=M', got '" + std::string(s) + "'");
        spec.kind = FamilyKind::corona;
        spec.base = std::make_shared<const FamilySpec>(parse_family_spec(rest.substr(0, sep)));
        spec.m = detail::parse_nat(rest.substr(sep + 3), "corona m");
    } else if (kind == "isomer") {
        spec.kind = FamilyKind::isomer;
        bool found = false;
        for (int i = 0; i <= static_cast<int>(IsomerName::neopentane); ++i) {
            if (rest == detail::isomer_name(static_cast<IsomerName>(i))) {
                spec.isomer = static_cast<IsomerName>(i);
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("isomer: unknown name '" + std::string(rest) + "'");
    } else if (kind == "nanostar") {
        if (rest != "d2")
            throw std::invalid_argument("nanostar: only 'nanostar:d2' is supported");
        spec.kind = FamilyKind::nanostar_d2;
    } else {
        throw std::invalid_argument("family spec: unknown kind '" + std::string(kind) + "'");
    }
    validate_spec(spec);
    return spec;
}

inline std::string to_string(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path: return "path:" + std::to_string(spec.n);
        case FamilyKind::star: return "star:" + std::to_string(spec.n);
        case FamilyKind::centipede: return "centipede:" + std::to_string(spec.n);
        case FamilyKind::corona: return "corona:" + to_string(*spec.base) + ",m=" + std::to_string(spec.m);
        case FamilyKind::banana: return "banana:" + std::to_string(spec.n) + "x" + std::to_string(spec.m);
        case FamilyKind::alkane: return "alkane:" + std::to_string(spec.n);
        case FamilyKind::isomer: return std::string("isomer:") + detail::isomer_name(spec.isomer);
        case FamilyKind::nanostar_d2: return "nanostar:d2";
    }
    return "?";
}

namespace detail {

inline constexpr std::size_t kMaxGeneratedOrder = std::size_t(1) << 24;

inline void check_order(u64 order) {
    if (order > kMaxGeneratedOrder)
        throw std::invalid_argument("family spec: generated tree would be too large");
}

inline UnlabeledTree make_path(u64 n) {
    check_order(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return UnlabeledTree::from_edges(n, std::move(edges));
}

inline UnlabeledTree make_star(u64 n) {
    check_order(n + 1);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(0, i);
    return UnlabeledTree::from_edges(n + 1, std::move(edges));
}

inline UnlabeledTree make_corona(const UnlabeledTree& base, u64 m) {
    check_order(base.order + base.order * m);
    auto edges = base.edges;
    std::size_t next = base.order;
    for (std::size_t v = 0; v < base.order; ++v)
        for (u64 j = 0; j < m; ++j) edges.emplace_back(v, next++);
    return bfs_relabel(UnlabeledTree::from_edges(next, std::move(edges)), 0);
}

// n copies of K_{1,m}; one leaf of each copy joins the new root.
inline UnlabeledTree make_banana(u64 n, u64 m) {
    check_order(1 + n * (m + 1));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (u64 i = 0; i < n; ++i) {
        std::size_t attached = 1 + i * (m + 1);
        std::size_t center = attached + 1;
        edges.emplace_back(0, attached);
        edges.emplace_back(center, attached);
        for (u64 j = 2; j <= m; ++j) edges.emplace_back(center, attached + j);
    }
    return bfs_relabel(UnlabeledTree::from_edges(1 + n * (m + 1), std::move(edges)), 0);
}

// Pad every carbon of the skeleton with pendant vertices up to degree 4.
inline UnlabeledTree make_molecule(std::size_t carbons,
                                   std::vector<std::pair<std::size_t, std::size_t>> bonds) {
    std::vector<std::size_t> deg(carbons, 0);
    for (auto [u, v] : bonds) {
        ++deg[u];
        ++deg[v];
    }
    std::size_t next = carbons;
    for (std::size_t c = 0; c < carbons; ++c)
        for (std::size_t h = deg[c]; h < 4; ++h) bonds.emplace_back(c, next++);
    return bfs_relabel(UnlabeledTree::from_edges(next, std::move(bonds)), 0);
}

inline UnlabeledTree make_alkane(u64 n) {
    check_order(3 * n + 2);
    std::vector<std::pair<std::size_t, std::size_t>> bonds;
    for (std::size_t i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
    return make_molecule(n, std::move(bonds));
}

inline UnlabeledTree make_isomer(IsomerName name) {
    using E = std::vector<std::pair<std::size_t, std::size_t>>;
    switch (name) {
        case IsomerName::methane: return make_molecule(1, {});
        case IsomerName::ethane: return make_molecule(2, E{{0, 1}});
        case IsomerName::propane: return make_molecule(3, E{{0, 1}, {1, 2}});
        case IsomerName::butane: return make_molecule(4, E{{0, 1}, {1, 2}, {2, 3}});
        case IsomerName::isobutane: return make_molecule(4, E{{0, 1}, {0, 2}, {0, 3}});
        case IsomerName::pentane: return make_molecule(5, E{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        case IsomerName::isopentane: return make_molecule(5, E{{0, 1}, {1, 2}, {2, 3}, {1, 4}});
        case IsomerName::neopentane: return make_molecule(5, E{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    }
    throw std::invalid_argument("isomer: unknown name");
}

// Central vertex, three arms of three edges, two pendants on each arm tip.
inline UnlabeledTree make_nanostar_d2() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t arm = 0; arm < 3; ++arm) {
        std::size_t a = 1 + arm * 5;
        edges.emplace_back(0, a);
        edges.emplace_back(a, a + 1);
        edges.emplace_back(a + 1, a + 2);
        edges.emplace_back(a + 2, a + 3);
        edges.emplace_back(a + 2, a + 4);
    }
    return bfs_relabel(UnlabeledTree::from_edges(16, std::move(edges)), 0);
}

} // namespace detail

inline UnlabeledTree generate(const FamilySpec& spec) {
    validate_spec(spec);
    switch (spec.kind) {
        case FamilyKind::path: return detail::make_path(spec.n);
        case FamilyKind::star: return detail::make_star(spec.n);
        case FamilyKind::centipede: return detail::make_corona(detail::make_path(spec.n), 1);
        case FamilyKind::corona: return detail::make_corona(generate(*spec.base), spec.m);
        case FamilyKind::banana: return detail::make_banana(spec.n, spec.m);
        case FamilyKind::alkane: return detail::make_alkane(spec.n);
        case FamilyKind::isomer: return detail::make_isomer(spec.isomer);
        case FamilyKind::nanostar_d2: return detail::make_nanostar_d2();
    }
    throw std::invalid_argument("family spec: unknown kind");
}

namespace detail {

inline u64 pow2_checked(u64 k) {
    if (k >= 64) throw std::overflow_error("family seed: power of two exceeds 64 bits");
    return u64(1) << k;
}

// The molecule seeds below are hand-built; guard against slips by
// checking the atom counts they must produce.
inline SeedSet validated_molecule_seed(std::vector<u64> elements, u64 carbons) {
    SeedSet seed = SeedSet::from(std::move(elements));
    PhiGraph g = PhiGraph::build(seed);
    u64 degree4 = 0, degree1 = 0;
    for (u64 v : g.vertices()) {
        if (g.degree(v) == 4) ++degree4;
        if (g.degree(v) == 1) ++degree1;
    }
    if (g.order() != 3 * carbons + 2 || degree4 != carbons || degree1 != 2 * carbons + 2)
        throw std::runtime_error("family seed: molecule seed failed atom-count validation");
    return seed;
}

inline SeedSet alkane_seed(u64 n) {
    // hand-built seeds for the first five, the general pattern beyond
    switch (n) {
        case 1: return validated_molecule_seed({3, 4, 6}, 1);
        case 2: return validated_molecule_seed({3, 5, 6, 8, 12}, 2);
        case 3: return validated_molecule_seed({3, 5, 6, 12, 15, 16, 20}, 3);
        case 4: return validated_molecule_seed({3, 5, 6, 12, 15, 17, 20, 32, 48}, 4);
        case 5: return validated_molecule_seed({3, 5, 6, 12, 15, 17, 20, 48, 64, 80, 96}, 5);
        default: break;
    }
    std::vector<u64> b{3, 6, 5, 12, 15, 20};
    for (u64 k = 3; k <= n - 1; ++k) b.push_back(checked_mul(5, pow2_checked(k)));
    for (u64 k = 4; k <= n; ++k) b.push_back(checked_mul(3, pow2_checked(k)));
    b.push_back(pow2_checked(n + 1));
    return validated_molecule_seed(std::move(b), n);
}

inline std::optional<SeedSet> isomer_seed(IsomerName name) {
    switch (name) {
        case IsomerName::methane: return alkane_seed(1);
        case IsomerName::ethane: return alkane_seed(2);
        case IsomerName::propane: return alkane_seed(3);
        case IsomerName::butane: return alkane_seed(4);
        case IsomerName::isobutane:
            return validated_molecule_seed({3, 5, 6, 13, 15, 20, 21, 24, 28}, 4);
        case IsomerName::pentane: return alkane_seed(5);
        case IsomerName::isopentane:
            return validated_molecule_seed({3, 5, 6, 12, 13, 15, 20, 21, 28, 32, 40, 48}, 5);
        case IsomerName::neopentane: return std::nullopt;  // proven unrealizable
    }
    return std::nullopt;
}

} // namespace detail

// A seed whose iteration graph takes the requested shape, when one is
// known. Families that are unrealizable (large stars, neopentane) or
// have no known construction (corona, banana) yield nothing.
inline std::optional<SeedSet> known_seed(const FamilySpec& spec) {
    validate_spec(spec);
    switch (spec.kind) {
        case FamilyKind::path:
            return SeedSet::from({detail::pow2_checked(spec.n - 1)});
        case FamilyKind::star:
            switch (spec.n) {
                case 1: return SeedSet::from({1, 2});
                case 2: return SeedSet::from({1, 2, 3});
                case 3: return SeedSet::from({1, 2, 3, 4});
                case 4: return SeedSet::from({1, 2, 3, 4, 6});
                default: return std::nullopt;
            }
        case FamilyKind::centipede: {
            std::vector<u64> b{1};
            for (u64 k = 1; k <= spec.n; ++k) b.push_back(detail::pow2_checked(k));
            for (u64 k = 2; k <= spec.n; ++k)
                b.push_back(detail::checked_mul(3, detail::pow2_checked(k)));
            return SeedSet::from(std::move(b));
        }
        case FamilyKind::corona:
        case FamilyKind::banana:
            return std::nullopt;
        case FamilyKind::alkane:
            return detail::alkane_seed(spec.n);
        case FamilyKind::isomer:
            return detail::isomer_seed(spec.isomer);
        case FamilyKind::nanostar_d2:
            return SeedSet::from({3, 256, 376, 384, 564});
    }
    return std::nullopt;
}

} // namespace phigraph
