#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "phigraph/families.hpp"
#include "phigraph/phi_graph.hpp"

using namespace phigraph;

namespace {

std::vector<std::size_t> degree_sequence(const UnlabeledTree& t) {
    std::vector<std::size_t> deg(t.order, 0);
    for (auto [u, v] : t.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::size_t count_degree(const UnlabeledTree& t, std::size_t d) {
    auto deg = degree_sequence(t);
    return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), d));
}

} // namespace

TEST_CASE("family spec parsing") {
    FamilySpec s = parse_family_spec("path:5");
    REQUIRE(s.kind == FamilyKind::path);
    REQUIRE(s.n == 5);

    s = parse_family_spec("banana:2x7");
    REQUIRE(s.kind == FamilyKind::banana);
    REQUIRE(s.n == 2);
    REQUIRE(s.m == 7);

    s = parse_family_spec("corona:path:3,m=4");
    REQUIRE(s.kind == FamilyKind::corona);
    REQUIRE(s.m == 4);
    REQUIRE(s.base->kind == FamilyKind::path);
    REQUIRE(s.base->n == 3);

    s = parse_family_spec("isomer:neopentane");
    REQUIRE(s.kind == FamilyKind::isomer);
    REQUIRE(s.isomer == IsomerName::neopentane);

    REQUIRE(parse_family_spec("nanostar:d2").kind == FamilyKind::nanostar_d2);

    for (const char* bad : {"path", "path:", "path:x", "path:0", "star:0", "centipede:1",
                            "banana:3", "banana:1x1", "banana:0x5", "corona:path:3",
                            "corona:path:0,m=2", "nanostar:d3", "isomer:hexane", "plum:3", ""})
        REQUIRE_THROWS_AS(parse_family_spec(bad), std::invalid_argument);
}

TEST_CASE("family spec round trips through to_string") {
    for (const char* s : {"path:5", "star:4", "centipede:7", "corona:path:3,m=4", "banana:2x7",
                          "alkane:6", "isomer:neopentane", "nanostar:d2",
                          "corona:corona:star:2,m=1,m=2"}) {
        FamilySpec spec = parse_family_spec(s);
        REQUIRE(to_string(spec) == s);
    }
}

TEST_CASE("paths and stars") {
    UnlabeledTree p5 = generate(parse_family_spec("path:5"));
    REQUIRE(p5.order == 5);
    REQUIRE(count_degree(p5, 1) == 2);
    REQUIRE(generate(parse_family_spec("path:1")).order == 1);

    UnlabeledTree s4 = generate(parse_family_spec("star:4"));
    REQUIRE(s4.order == 5);
    REQUIRE(count_degree(s4, 4) == 1);
    REQUIRE(count_degree(s4, 1) == 4);
}

TEST_CASE("centipedes are coronas of paths") {
    for (u64 n = 2; n <= 9; ++n) {
        UnlabeledTree c = generate(FamilySpec{FamilyKind::centipede, n});
        REQUIRE(c.order == 2 * n);
        FamilySpec corona{FamilyKind::corona, 0, 1};
        corona.base = std::make_shared<const FamilySpec>(FamilySpec{FamilyKind::path, n});
        REQUIRE(generate(corona).edges == c.edges);
        REQUIRE(count_degree(c, 1) == n);
    }
}

TEST_CASE("coronas pad every base vertex") {
    UnlabeledTree t = generate(parse_family_spec("corona:path:2,m=4"));
    REQUIRE(t.order == 10);
    REQUIRE(count_degree(t, 5) == 2);
    REQUIRE(count_degree(t, 1) == 8);

    t = generate(parse_family_spec("corona:star:3,m=2"));
    REQUIRE(t.order == 12);
    REQUIRE(count_degree(t, 5) == 1);  // the center: 3 base neighbors + 2 pendants
}

TEST_CASE("banana trees") {
    UnlabeledTree b = generate(parse_family_spec("banana:2x6"));
    REQUIRE(b.order == 2 * 7 + 1);
    REQUIRE(count_degree(b, 6) == 2);  // the two star centers
    REQUIRE(count_degree(b, 2) == 3);  // root and the two attachment leaves

    b = generate(parse_family_spec("banana:1x6"));
    REQUIRE(b.order == 8);
    REQUIRE(count_degree(b, 6) == 1);

    b = generate(parse_family_spec("banana:3x2"));
    REQUIRE(b.order == 10);
    REQUIRE(count_degree(b, 3) == 1);  // root joins three copies
}

TEST_CASE("alkanes") {
    for (u64 n = 1; n <= 9; ++n) {
        UnlabeledTree a = generate(FamilySpec{FamilyKind::alkane, n});
        REQUIRE(a.order == 3 * n + 2);
        REQUIRE(count_degree(a, 4) == n);
        REQUIRE(count_degree(a, 1) == 2 * n + 2);
    }
    REQUIRE(isomorphic(generate(parse_family_spec("alkane:1")),
                       generate(parse_family_spec("star:4"))));
    REQUIRE(isomorphic(generate(parse_family_spec("alkane:1")),
                       generate(parse_family_spec("isomer:methane"))));
}

TEST_CASE("isomers") {
    auto gen = [](const char* s) { return generate(parse_family_spec(s)); };
    REQUIRE(gen("isomer:methane").order == 5);
    REQUIRE(gen("isomer:ethane").order == 8);
    REQUIRE(gen("isomer:propane").order == 11);
    REQUIRE(gen("isomer:butane").order == 14);
    REQUIRE(gen("isomer:isobutane").order == 14);
    REQUIRE(gen("isomer:pentane").order == 17);
    REQUIRE(gen("isomer:isopentane").order == 17);
    REQUIRE(gen("isomer:neopentane").order == 17);

    REQUIRE(isomorphic(gen("isomer:butane"), gen("alkane:4")));
    REQUIRE_FALSE(isomorphic(gen("isomer:butane"), gen("isomer:isobutane")));
    REQUIRE_FALSE(isomorphic(gen("isomer:pentane"), gen("isomer:isopentane")));
    REQUIRE_FALSE(isomorphic(gen("isomer:pentane"), gen("isomer:neopentane")));
    REQUIRE_FALSE(isomorphic(gen("isomer:isopentane"), gen("isomer:neopentane")));
}

TEST_CASE("the sixteen-vertex nanostar") {
    UnlabeledTree t = generate(parse_family_spec("nanostar:d2"));
    REQUIRE(t.order == 16);
    REQUIRE(degree_sequence(t) ==
            std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("known seeds") {
    REQUIRE(known_seed(parse_family_spec("path:5"))->elements == std::vector<u64>{16});
    REQUIRE(known_seed(parse_family_spec("path:1"))->elements == std::vector<u64>{1});
    REQUIRE(known_seed(parse_family_spec("star:1"))->elements == std::vector<u64>{1, 2});
    REQUIRE(known_seed(parse_family_spec("star:4"))->elements == std::vector<u64>{1, 2, 3, 4, 6});
    REQUIRE_FALSE(known_seed(parse_family_spec("star:5")).has_value());
    REQUIRE(known_seed(parse_family_spec("centipede:3"))->elements ==
            std::vector<u64>{1, 2, 4, 8, 12, 24});
    REQUIRE(known_seed(parse_family_spec("alkane:6"))->elements ==
            std::vector<u64>{3, 5, 6, 12, 15, 20, 40, 48, 80, 96, 128, 160, 192});
    REQUIRE(known_seed(parse_family_spec("nanostar:d2"))->elements ==
            std::vector<u64>{3, 256, 376, 384, 564});
    REQUIRE(known_seed(parse_family_spec("isomer:isopentane"))->elements ==
            std::vector<u64>{3, 5, 6, 12, 13, 15, 20, 21, 28, 32, 40, 48});
    REQUIRE_FALSE(known_seed(parse_family_spec("isomer:neopentane")).has_value());
    REQUIRE_FALSE(known_seed(parse_family_spec("banana:2x6")).has_value());
    REQUIRE_FALSE(known_seed(parse_family_spec("corona:path:2,m=4")).has_value());
}

TEST_CASE("known seeds build the matching shapes") {
    for (const char* s : {"path:1", "path:2", "path:7", "star:1", "star:2", "star:3", "star:4",
                          "centipede:2", "centipede:5", "centipede:8", "alkane:1", "alkane:2",
                          "alkane:5", "alkane:7", "isomer:methane", "isomer:ethane",
                          "isomer:propane", "isomer:butane", "isomer:isobutane", "isomer:pentane",
                          "isomer:isopentane", "nanostar:d2"}) {
        CAPTURE(s);
        FamilySpec spec = parse_family_spec(s);
        auto seed = known_seed(spec);
        REQUIRE(seed.has_value());
        REQUIRE(isomorphic(shape_of(PhiGraph::build(*seed)), generate(spec)));
    }
}

TEST_CASE("known seeds overflow cleanly") {
    REQUIRE(known_seed(parse_family_spec("path:64"))->elements ==
            std::vector<u64>{u64(1) << 63});
    REQUIRE_THROWS_AS(known_seed(parse_family_spec("path:65")), std::overflow_error);
    REQUIRE_THROWS_AS(known_seed(parse_family_spec("centipede:63")), std::overflow_error);
    REQUIRE_THROWS_AS(known_seed(parse_family_spec("alkane:63")), std::overflow_error);
}

TEST_CASE("generation guards against absurd sizes") {
    REQUIRE_THROWS_AS(generate(parse_family_spec("path:999999999999")), std::invalid_argument);
    REQUIRE_THROWS_AS(generate(parse_family_spec("banana:99999999x99999999")),
                      std::invalid_argument);
}
