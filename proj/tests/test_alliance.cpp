#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "kalliance/alliance.hpp"
#include "kalliance/generators.hpp"
#include "kalliance/graph.hpp"

using namespace kalliance;

namespace {

VertexSet from_mask(const Graph& g, uint32_t mask) {
    VertexSet s = g.empty_set();
    for (int v = 0; v < g.n(); ++v)
        if (mask & (1u << v)) s.insert(v);
    return s;
}

// straight-line re-statement of the definition, for cross-checking
bool alliance_by_definition(const Graph& g, const VertexSet& S, const AllianceSpec& spec) {
    if (spec.global && !g.is_dominating(S)) return false;
    VertexSet members = spec.kind == Kind::defensive ? S : g.boundary(S);
    for (int v = 0; v < g.n(); ++v) {
        if (!members.contains(v)) continue;
        if (2 * g.degree_in(v, S) < g.degree(v) + spec.k) return false;
    }
    return true;
}

std::vector<uint32_t> all_alliances(const Graph& g, const AllianceSpec& spec) {
    std::vector<uint32_t> out;
    for (uint32_t m = 1; m < (1u << g.n()); ++m)
        if (alliance_by_definition(g, from_mask(g, m), spec)) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("defensive membership on complete graphs") {
    Graph k5 = make_complete(5);
    // every member of a 4-clique inside K_5 has 3 allies vs 1 outsider
    CHECK(is_alliance(k5, k5.make_set({0, 1, 2, 3}), {Kind::defensive, 1, false}));
    CHECK_FALSE(is_alliance(k5, k5.make_set({0, 1, 2}), {Kind::defensive, 1, false}));
    CHECK(is_alliance(k5, k5.make_set({0, 1, 2}), {Kind::defensive, 0, false}));
    CHECK(is_alliance(k5, k5.full_set(), {Kind::defensive, 4, false}));
}

TEST_CASE("offensive and global membership goldens") {
    Graph c4 = make_cycle(4);
    AllianceSpec off0{Kind::offensive, 0, false};
    AllianceSpec goff0{Kind::offensive, 0, true};
    // {0,2} attacks both 1 and 3 with both their neighbors
    CHECK(is_alliance(c4, c4.make_set({0, 2}), off0));
    CHECK(is_alliance(c4, c4.make_set({0, 2}), goff0));
    // {0} leaves 1 with one attacker out of two neighbors: 2*1 >= 2+0 holds
    CHECK(is_alliance(c4, c4.make_set({0}), off0));
    CHECK_FALSE(is_alliance(c4, c4.make_set({0}), goff0));  // not dominating
    CHECK_FALSE(is_alliance(c4, c4.make_set({0}), {Kind::offensive, 1, false}));

    Graph star = make_star(3);
    // leaves attack the center 3-vs-0
    CHECK(is_alliance(star, star.make_set({1, 2, 3}), {Kind::offensive, 3, true}));
    CHECK_FALSE(is_alliance(star, star.make_set({1, 2}), {Kind::offensive, 2, false}));
}

TEST_CASE("V is an offensive alliance at every k; low k admits everything") {
    for (const char* spec_text : {"cycle:5", "star:4", "complete:4", "path:5"}) {
        Graph g = generate(spec_text);
        int D = g.max_degree();
        for (int k = -D; k <= D; ++k) {
            INFO("spec_text=", spec_text, " ", "k=", k, " ");
            // boundary of V is empty, and V dominates vacuously
            CHECK(is_alliance(g, g.full_set(), {Kind::offensive, k, false}));
            CHECK(is_alliance(g, g.full_set(), {Kind::offensive, k, true}));
        }
        // k <= 2-Delta: every nonempty subset is an offensive alliance
        for (uint32_t m = 1; m < (1u << g.n()); ++m)
            CHECK(is_alliance(g, from_mask(g, m), {Kind::offensive, 2 - D, false}));
    }
}

TEST_CASE("empty set handling") {
    Graph c4 = make_cycle(4);
    AllianceSpec d0{Kind::defensive, 0, false};
    CHECK_THROWS_AS(is_alliance(c4, c4.empty_set(), d0), std::invalid_argument);
    CHECK_THROWS_AS(is_boundary_offensive(c4, c4.empty_set(), 0), std::invalid_argument);
    CHECK(is_free(c4, c4.empty_set(), d0));
    // the defensive 0-family on C_4 is nonempty, so {} does not cover
    CHECK_FALSE(is_cover(c4, c4.empty_set(), d0));
    CHECK(is_cover(c4, c4.full_set(), d0));
    // star:3 has no defensive 3-alliance: everything is free, {} covers
    Graph star = make_star(3);
    AllianceSpec d3{Kind::defensive, 3, false};
    CHECK(is_free(star, star.full_set(), d3));
    CHECK(is_cover(star, star.empty_set(), d3));
}

TEST_CASE("boundary-offensive equality predicate") {
    Graph c4 = make_cycle(4);
    CHECK(is_boundary_offensive(c4, c4.make_set({0, 2}), 2));  // 2*2 == 2+2
    CHECK(is_boundary_offensive(c4, c4.make_set({0, 1}), 0));  // 2*1 == 2+0
    CHECK_FALSE(is_boundary_offensive(c4, c4.make_set({0, 2}), 0));
    CHECK_FALSE(is_boundary_offensive(c4, c4.full_set(), 0));  // proper subsets only
    Graph k4 = make_complete(4);
    CHECK_FALSE(is_boundary_offensive(k4, k4.make_set({0, 1}), 0));  // 2*2 != 3
    CHECK(is_boundary_offensive(k4, k4.make_set({0, 1}), 1));
}

TEST_CASE("free and cover goldens") {
    Graph c4 = make_cycle(4);
    AllianceSpec d0{Kind::defensive, 0, false};
    CHECK(is_free(c4, c4.make_set({0, 2}), d0));       // no adjacent pair inside
    CHECK_FALSE(is_free(c4, c4.make_set({0, 1}), d0)); // {0,1} is itself an alliance
    CHECK(is_maximal_free(c4, c4.make_set({0, 2}), d0));
    CHECK(is_minimal_cover(c4, c4.make_set({1, 3}), d0));

    // the published counterexample instance: S={1,2,4,5,6} is a minimal
    // offensive 0-cover of the chorded 8-cycle
    Graph c8 = make_c8_chords();
    AllianceSpec off0{Kind::offensive, 0, false};
    VertexSet S = c8.make_set({1, 2, 4, 5, 6});
    CHECK(is_cover(c8, S, off0));
    CHECK(is_minimal_cover(c8, S, off0));
    CHECK_FALSE(c8.is_dominating(S.complement()));
}

TEST_CASE("star:3 minimal defensive (-1)-covers are exactly {1,2,3}") {
    Graph star = make_star(3);
    AllianceSpec spec{Kind::defensive, -1, false};
    std::vector<uint32_t> minimal;
    for (uint32_t m = 0; m < (1u << star.n()); ++m) {
        VertexSet Y = from_mask(star, m);
        if (is_cover(star, Y, spec) && is_minimal_cover(star, Y, spec))
            minimal.push_back(m);
    }
    REQUIRE(minimal.size() == 1);
    CHECK(from_mask(star, minimal[0]) == star.make_set({1, 2, 3}));
}

TEST_CASE("minimality/maximality preconditions throw") {
    Graph c4 = make_cycle(4);
    AllianceSpec d0{Kind::defensive, 0, false};
    CHECK_THROWS_AS(is_minimal_cover(c4, c4.make_set({0}), d0), std::invalid_argument);
    CHECK_THROWS_AS(is_maximal_free(c4, c4.make_set({0, 1}), d0), std::invalid_argument);
}

TEST_CASE("contains_alliance agrees with raw subset enumeration") {
    for (const char* spec_text :
         {"cycle:4", "cycle:5", "path:5", "star:4", "complete:5", "random:6,0.5,3"}) {
        Graph g = generate(spec_text);
        int D = g.max_degree();
        for (int k = -D; k <= D; ++k)
            for (Kind kind : {Kind::defensive, Kind::offensive})
                for (bool global : {false, true}) {
                    AllianceSpec spec{kind, k, global};
                    auto fam = all_alliances(g, spec);
                    for (uint32_t x = 0; x < (1u << g.n()); ++x) {
                        bool raw = false;
                        for (uint32_t a : fam)
                            if ((a & x) == a) {
                                raw = true;
                                break;
                            }
                        VertexSet X = from_mask(g, x);
                        INFO("spec_text=", spec_text, " ", "k=", k, " ", "int(kind)=", int(kind), " ", "global=", global, " ", "x=", x, " ");
                        REQUIRE(contains_alliance(g, X, spec) == raw);
                    }
                }
    }
}

TEST_CASE("library cover matches direct all-alliances-intersect scan") {
    for (const char* spec_text : {"cycle:4", "star:3", "path:4", "complete:4"}) {
        Graph g = generate(spec_text);
        int D = g.max_degree();
        for (int k = -D; k <= D; ++k)
            for (Kind kind : {Kind::defensive, Kind::offensive})
                for (bool global : {false, true}) {
                    AllianceSpec spec{kind, k, global};
                    auto fam = all_alliances(g, spec);
                    for (uint32_t y = 0; y < (1u << g.n()); ++y) {
                        bool direct = true;
                        for (uint32_t a : fam)
                            if (!(a & y)) {
                                direct = false;
                                break;
                            }
                        INFO("spec_text=", spec_text, " ", "k=", k, " ", "int(kind)=", int(kind), " ", "global=", global, " ", "y=", y, " ");
                        REQUIRE(is_cover(g, from_mask(g, y), spec) == direct);
                    }
                }
    }
}

TEST_CASE("free sets are downward closed") {
    Graph g = generate("random:7,0.5,11");
    int D = g.max_degree();
    for (int k = -D; k <= D; k += 2)
        for (Kind kind : {Kind::defensive, Kind::offensive}) {
            AllianceSpec spec{kind, k, false};
            for (uint32_t x = 0; x < (1u << g.n()); ++x) {
                if (!is_free(g, from_mask(g, x), spec)) continue;
                uint32_t sub = x & (x - 1);  // drop lowest bit
                CHECK(is_free(g, from_mask(g, sub), spec));
            }
        }
}

TEST_CASE("is_alliance agrees with the definitional restatement everywhere") {
    Graph g = generate("random:6,0.7,5");
    int D = g.max_degree();
    for (int k = -D - 2; k <= D + 2; ++k)  // predicates accept any k
        for (Kind kind : {Kind::defensive, Kind::offensive})
            for (bool global : {false, true}) {
                AllianceSpec spec{kind, k, global};
                for (uint32_t m = 1; m < (1u << g.n()); ++m) {
                    VertexSet S = from_mask(g, m);
                    INFO("k=", k, " ", "int(kind)=", int(kind), " ", "global=", global, " ", "m=", m, " ");
                    REQUIRE(is_alliance(g, S, spec) == alliance_by_definition(g, S, spec));
                }
            }
}
