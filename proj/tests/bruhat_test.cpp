#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "pposets/bruhat.hpp"
#include "test_util.hpp"

using namespace pposets;

TEST_CASE("leq is containment of h-pairs the other way round") {
    CHECK(leq(PP("123"), PP("213")));
    CHECK_FALSE(leq(PP("213"), PP("123")));
    CHECK(leq(PP("213"), PP("213")));
    CHECK_FALSE(leq(PP("132"), PP("213")));
    CHECK_THROWS_AS(leq(PP("12"), PP("123")), CardinalityMismatch);
}

TEST_CASE("inversion sets are computed from positions alone") {
    CHECK(inversion_set(Permutation::parse("231")).pairs(3) ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
    CHECK(inversion_set(Permutation::parse("123")).none());
    CHECK(inversion_set(Permutation::parse("321")) == PairSet::full(3));
}

TEST_CASE("the order matches the right weak order through the word bijection") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        std::vector<Permutation> words;
        do {
            words.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));

        bool agree = true, complement = true;
        for (const Permutation& sigma : words) {
            // Inversions are exactly the missing h-pairs.
            complement = complement &&
                         inversion_set(sigma) ==
                             psi(sigma).h_pairs().complement_within(n);
            for (const Permutation& tau : words)
                agree = agree && weak_bruhat_leq(sigma, tau) ==
                                     leq(psi(sigma), psi(tau));
        }
        CHECK(agree);
        CHECK(complement);
    }
    CHECK_THROWS_AS(weak_bruhat_leq(Permutation::parse("12"), Permutation::parse("1")),
                    CardinalityMismatch);
}

TEST_CASE("leq is a partial order with the chain and antichain as extremes") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<PlanePoset> all = enumerate_plane_posets(n);
        PlanePoset bottom = all.front();
        bool reflexive = true, antisym = true, transitive = true, extremes = true,
             antitone = true;
        for (const PlanePoset& p : all) {
            reflexive = reflexive && leq(p, p);
            extremes = extremes && leq(bottom, p) && leq(p, iota(bottom));
            for (const PlanePoset& q : all) {
                if (leq(p, q) && leq(q, p))
                    antisym = antisym && p == q;
                antitone = antitone && leq(p, q) == leq(iota(q), iota(p));
                if (!leq(p, q))
                    continue;
                for (const PlanePoset& r : all)
                    if (leq(q, r))
                        transitive = transitive && leq(p, r);
            }
        }
        CHECK(reflexive);
        CHECK(antisym);
        CHECK(transitive);
        CHECK(extremes);
        CHECK(antitone);
    }
}

TEST_CASE("both products are monotone in both arguments") {
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
            std::vector<PlanePoset> left = enumerate_plane_posets(k);
            std::vector<PlanePoset> right = enumerate_plane_posets(l);
            for (const PlanePoset& p : left)
                for (const PlanePoset& p2 : left) {
                    if (!leq(p, p2))
                        continue;
                    for (const PlanePoset& q : right)
                        for (const PlanePoset& q2 : right) {
                            if (!leq(q, q2))
                                continue;
                            CHECK(leq(compose(p, q), compose(p2, q2)));
                            CHECK(leq(under(p, q), under(p2, q2)));
                        }
                }
        }
}

TEST_CASE("covers come from single pair removals, lex order of removed pair") {
    CHECK(covers(PP("123")) == std::vector<PlanePoset>{PP("213"), PP("132")});
    CHECK(covers(PP("321")).empty());
    CHECK(covers(PP("132")) == std::vector<PlanePoset>{PP("312")});
    CHECK(covers(PlanePoset()).empty());
}

TEST_CASE("pair-removal covers agree with the word-transposition oracle") {
    for (int n = 0; n <= 5; ++n)
        for (const PlanePoset& p : enumerate_plane_posets(n)) {
            std::vector<PlanePoset> removal = covers(p);
            std::vector<PlanePoset> sorted = removal;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == covers_via_word(p));
            for (const PlanePoset& c : removal)
                CHECK(level(c) == level(p) + 1);
        }
}

TEST_CASE("removal validity agrees with revalidating from scratch") {
    for (const PlanePoset& p : enumerate_plane_posets(4)) {
        std::vector<PlanePoset> brute;
        for (auto [i, j] : p.h_pairs().pairs(4)) {
            std::vector<std::pair<int, int>> rest;
            for (auto pr : p.h_pairs().pairs(4))
                if (pr != std::make_pair(i, j))
                    rest.push_back(pr);
            try {
                brute.push_back(PlanePoset::validated(4, rest));
            } catch (const TransitivityViolation&) {
            }
        }
        CHECK(brute == covers(p));
    }
}

TEST_CASE("saturated chains step through lex-least valid removals") {
    auto chain = saturated_chain(PP("123"), PP("321"));
    REQUIRE(chain.has_value());
    CHECK(*chain == std::vector<PlanePoset>{PP("213"), PP("231"), PP("321")});

    CHECK(saturated_chain(PP("213"), PP("213"))->empty());
    CHECK_FALSE(saturated_chain(PP("132"), PP("213")).has_value());
    CHECK_FALSE(saturated_chain(PP("321"), PP("123")).has_value());

    for (const PlanePoset& p : enumerate_plane_posets(5)) {
        PlanePoset q = iota(p);
        if (!leq(p, q))
            continue;
        auto c = saturated_chain(p, q);
        REQUIRE(c.has_value());
        CHECK(static_cast<int>(c->size()) == level(q) - level(p));
        PlanePoset prev = p;
        for (const PlanePoset& step : *c) {
            CHECK(level(step) == level(prev) + 1);
            CHECK(leq(prev, step));
            prev = step;
        }
        if (!c->empty())
            CHECK(c->back() == q);
    }
}

TEST_CASE("Hasse diagrams have one edge per cover") {
    HasseGraph g2 = hasse(2);
    CHECK(g2.nodes == std::vector<PlanePoset>{PP("12"), PP("21")});
    CHECK(g2.edges == std::vector<std::pair<int, int>>{{0, 1}});

    HasseGraph g3 = hasse(3);
    CHECK(g3.edges == std::vector<std::pair<int, int>>{
                          {0, 2}, {0, 1}, {1, 4}, {2, 3}, {3, 5}, {4, 5}});

    // Total cover count is n! (n-1)/2: one cover per word ascent.
    CHECK(hasse(4).edges.size() == 36);
    CHECK(hasse(5).edges.size() == 240);
}

TEST_CASE("DOT and JSON exports are stable byte for byte") {
    CHECK(hasse_to_dot(hasse(2)) ==
          "digraph bruhat_2 {\n"
          "  \"12\";\n"
          "  \"21\";\n"
          "  \"12\" -> \"21\";\n"
          "}\n");
    CHECK(hasse_to_json(hasse(2)) ==
          R"({"n":2,"forest_only":false,"nodes":["12","21"],"edges":[["12","21"]]})");
    CHECK(hasse_to_dot(hasse(2, true)).rfind("digraph bruhat_2_forests {", 0) == 0);
}

TEST_CASE("the forest suborder needs its own transitive reduction") {
    HasseGraph g = hasse(3, true);
    std::vector<std::string> words;
    for (const PlanePoset& p : g.nodes)
        words.push_back(W(p));
    CHECK(words == std::vector<std::string>{"123", "132", "231", "312", "321"});
    // The pentagon: the edge 123 -> 231 skips 213, which is not a forest.
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
}
