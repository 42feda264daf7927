// Acceptance gate: ten criteria, one PASS/FAIL line each, nonzero exit on
// any failure.  Time budgets are pinned here, next to the checks they bound.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pposets/bruhat.hpp"
#include "pposets/hopf.hpp"
#include "pposets/tamari.hpp"
#include "pposets/verify.hpp"

using namespace pposets;

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

int hardware_jobs() {
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

PlanePoset pp(const std::string& word) { return psi(Permutation::parse(word)); }

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::uint64_t>(k);
    return f;
}

struct Checker {
    std::vector<std::string> problems;
    std::uint64_t cases = 0;

    void require(bool ok, const std::string& what) {
        if (!ok && problems.size() < 8)
            problems.push_back(what);
        ++cases;
    }
};

// --- criterion 1: the word -> poset dictionary for n <= 4, every entry
// built from compose/under of atoms (two size-4 posets admit no such
// factorization and are pinned by their explicit h-pair sets).

void check_bijection_tables(Checker& ck) {
    const PlanePoset dot = pp("1");
    auto U = [](const PlanePoset& a, const PlanePoset& b) { return under(a, b); };
    auto C = [](const PlanePoset& a, const PlanePoset& b) { return compose(a, b); };
    const PlanePoset chain2 = U(dot, dot), anti2 = C(dot, dot);
    const PlanePoset chain3 = U(dot, chain2), anti3 = C(dot, anti2);

    const std::vector<std::pair<std::string, PlanePoset>> table = {
        {"1", dot},
        {"12", chain2},
        {"21", anti2},
        {"123", chain3},
        {"132", U(dot, anti2)},
        {"213", U(anti2, dot)},
        {"231", C(dot, chain2)},
        {"312", C(chain2, dot)},
        {"321", anti3},
        {"1234", U(dot, chain3)},
        {"1243", U(chain2, anti2)},
        {"1324", U(dot, U(anti2, dot))},
        {"1342", U(dot, C(dot, chain2))},
        {"1423", U(dot, C(chain2, dot))},
        {"1432", U(dot, anti3)},
        {"2134", U(anti2, chain2)},
        {"2143", U(anti2, anti2)},
        {"2314", U(C(dot, chain2), dot)},
        {"2341", C(dot, chain3)},
        {"2413", PlanePoset::validated(4, {{1, 3}, {2, 3}, {2, 4}})},
        {"2431", C(dot, U(dot, anti2))},
        {"3124", U(C(chain2, dot), dot)},
        {"3142", PlanePoset::validated(4, {{1, 2}, {1, 4}, {3, 4}})},
        {"3214", U(anti3, dot)},
        {"3241", C(dot, U(anti2, dot))},
        {"3412", C(chain2, chain2)},
        {"3421", C(anti2, chain2)},
        {"4123", C(chain3, dot)},
        {"4132", C(U(dot, anti2), dot)},
        {"4213", C(U(anti2, dot), dot)},
        {"4231", C(dot, C(chain2, dot))},
        {"4312", C(chain2, anti2)},
        {"4321", C(dot, anti3)},
    };

    int size4 = 0;
    for (const auto& [word, expected] : table) {
        ck.require(pp(word) == expected, "psi(" + word + ") differs from its construction");
        ck.require(psi_inverse(expected).to_string() == word,
                   "psi_inverse mismatch at " + word);
        if (expected.size() == 4)
            ++size4;
    }
    ck.require(size4 == 24, "size-4 dictionary does not cover all 24 words");

    // The two explicit entries are forced: they are the only size-4 posets
    // with neither a composition split nor an under split, and they are
    // exchanged by iota.
    auto splits_somewhere = [](const PlanePoset& p, bool all_cross) {
        for (int k = 1; k < p.size(); ++k) {
            bool match = true;
            for (int i = 1; i <= k && match; ++i)
                for (int j = k + 1; j <= p.size() && match; ++j)
                    match = p.h_pairs().test(i, j) == all_cross;
            if (match)
                return true;
        }
        return false;
    };
    std::set<std::string> irreducible;
    for (const PlanePoset& p : enumerate_plane_posets(4))
        if (!splits_somewhere(p, false) && !splits_somewhere(p, true))
            irreducible.insert(p.word_string());
    ck.require(irreducible == std::set<std::string>{"2413", "3142"},
               "unexpected set of doubly irreducible size-4 posets");
    ck.require(iota(pp("2413")) == pp("3142"), "iota does not swap 2413 and 3142");
}

// --- criterion 2: enumeration hits n! distinct canonical forms, n <= 7.

void check_enumeration_counts(Checker& ck) {
    for (int n = 0; n <= 7; ++n) {
        std::vector<PlanePoset> all = enumerate_plane_posets(n);
        ck.require(all.size() == factorial(n),
                   "count at n=" + std::to_string(n) + " is not n!");
        std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
        for (const PlanePoset& p : all)
            keys.insert(p.h_pairs().key());
        ck.require(keys.size() == all.size(),
                   "duplicate canonical forms at n=" + std::to_string(n));
    }
}

// --- criterion 3: Gram matrices for n = 1, 2, 3, entry for entry.

void check_pairing_tables(Checker& ck) {
    auto q = [](int d) { return QPolynomial::monomial(d); };
    const QPolynomial z;

    ck.require(gram_matrix(1) == std::vector<std::vector<QPolynomial>>{{q(0)}},
               "Gram matrix at n=1");
    ck.require(gram_matrix(2) ==
                   std::vector<std::vector<QPolynomial>>{{z, q(1)}, {q(1), q(0)}},
               "Gram matrix at n=2");
    // Rows and columns ordered 123, 132, 213, 231, 312, 321.
    std::vector<std::vector<QPolynomial>> expected3 = {
        {z, z, z, z, z, q(3)},          {z, z, z, q(3), z, q(2)},
        {z, z, z, z, q(3), q(2)},       {z, q(3), z, z, q(2), q(1)},
        {z, z, q(3), q(2), z, q(1)},    {q(3), q(2), q(2), q(1), q(1), q(0)},
    };
    ck.require(gram_matrix(3) == expected3, "Gram matrix at n=3");

    // The two named sample entries: chain/antichain at n=2 pairs to q, and
    // <132, 321> = q^2.
    ck.require(pairing(pp("12"), pp("21")) == q(1), "<12,21> is not q");
    ck.require(pairing(pp("132"), pp("321")) == q(2), "<132,321> is not q^2");
}

// --- criterion 4: the level (rank) table for all 9 posets with n <= 3.

void check_level_table(Checker& ck) {
    const std::vector<std::pair<std::string, int>> table = {
        {"1", 0},   {"12", 0},  {"21", 1},  {"123", 0}, {"132", 1},
        {"213", 1}, {"231", 2}, {"312", 2}, {"321", 3},
    };
    ck.require(table.size() == 9, "level table is not complete for n <= 3");
    for (const auto& [word, expected] : table)
        ck.require(level(pp(word)) == expected, "level(" + word + ") wrong");
}

// --- criterion 5: the small Hasse diagrams, and digraph isomorphism with an
// independently built weak-order diagram on words.

void check_hasse_figures(Checker& ck) {
    HasseGraph g2 = hasse(2);
    ck.require(g2.edges == std::vector<std::pair<int, int>>{{0, 1}},
               "hasse(2) is not the single edge 12 -> 21");

    HasseGraph g3 = hasse(3);
    std::vector<std::pair<int, int>> got = g3.edges;
    std::sort(got.begin(), got.end());
    // Nodes in word order 123,132,213,231,312,321; six covers.
    std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {1, 4},
                                                 {2, 3}, {3, 5}, {4, 5}};
    ck.require(got == expected, "hasse(3) does not match the six-edge figure");

    // The S3 right weak order, built from words alone: swap an ascending
    // adjacent pair to move up one cover.
    std::vector<std::vector<int>> words;
    std::vector<int> w = {1, 2, 3};
    do {
        words.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < words.size(); ++i)
        index[words[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> weak(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t p = 0; p + 1 < words[i].size(); ++p)
            if (words[i][p] < words[i][p + 1]) {
                std::vector<int> t = words[i];
                std::swap(t[p], t[p + 1]);
                weak[i].push_back(index.at(t));
            }
    std::vector<std::vector<int>> adj(g3.nodes.size());
    for (auto [a, b] : g3.edges)
        adj[a].push_back(b);
    ck.require(digraphs_isomorphic(adj, weak),
               "hasse(3) is not isomorphic to the S3 weak-order diagram");
}

// --- criterion 6: leq through psi equals weak-order containment of
// inversion sets, exhaustively for n <= 6.

void check_bruhat_isomorphism(Checker& ck) {
    std::uint64_t pairs = 0;
    for (int n = 0; n <= 6; ++n) {
        std::vector<Permutation> words;
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        do {
            words.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        std::vector<PlanePoset> posets;
        std::vector<PairSet> invs;
        for (const Permutation& s : words) {
            posets.push_back(psi(s));
            invs.push_back(inversion_set(s));
        }
        std::uint64_t mismatches = 0;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j < words.size(); ++j) {
                if (leq(posets[i], posets[j]) != invs[j].contains(invs[i]))
                    ++mismatches;
                ++pairs;
            }
        ck.require(mismatches == 0,
                   std::to_string(mismatches) + " mismatches at n=" + std::to_string(n));
        if (n == 6)
            ck.require(words.size() * words.size() == 518400,
                       "pair count at n=6 is not 518,400");
    }
    ck.cases += pairs;
}

// --- criterion 7: the symbolic identity suites, zero counterexamples.

void check_identity_suites(Checker& ck) {
    const std::vector<std::string> suites = {
        "coassoc",           "infinitesimal-m", "infinitesimal-under",
        "pairing-symmetric", "pairing-hopf-m",  "pairing-adjoint-under",
        "lemma22-under",     "lemma22-m",
    };
    for (const std::string& name : suites) {
        IdentityReport r = verify_identity(name, 6, hardware_jobs());
        ck.require(r.cases_checked > 0, name + " checked nothing");
        ck.require(r.failures.empty(),
                   name + ": " + (r.failures.empty() ? "" : r.failures.front()));
        ck.cases += r.cases_checked;
    }
}

// --- criterion 8: nondegeneracy at q=2, degeneration to rank 1 at q=0, and
// the triangularity witness, all for n <= 5.

void check_nondegeneracy(Checker& ck) {
    for (int n = 1; n <= 5; ++n) {
        ck.require(gram_rank_at(n, 2, kPrime) == static_cast<int>(factorial(n)),
                   "rank at q=2 is not n! for n=" + std::to_string(n));
        ck.require(gram_rank_at(n, 0, kPrime) == 1,
                   "rank at q=0 is not 1 for n=" + std::to_string(n));
        TriangularityWitness w = gram_triangularity_witness(n);
        ck.require(w.holds, "triangularity fails at n=" + std::to_string(n) + ": " +
                                w.failure);
    }
}

// --- criterion 9: covers raise the level by one and nonzero pairings sit in
// the expected q-degree, exhaustively for n <= 6.

void check_rank_grading(Checker& ck) {
    IdentityReport r = verify_identity("rank-formula", 6, hardware_jobs());
    ck.require(r.cases_checked > 0, "rank-formula checked nothing");
    ck.require(r.failures.empty(),
               r.failures.empty() ? "" : "rank-formula: " + r.failures.front());
    ck.cases += r.cases_checked;
}

// --- criterion 10: Catalan counts, the rotation-lattice isomorphism, and
// transformation reachability against the restricted order.

void check_tamari(Checker& ck) {
    const std::vector<std::uint64_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) {
        std::uint64_t forests = 0;
        for (const PlanePoset& p : enumerate_plane_posets(n))
            if (is_plane_forest(p))
                ++forests;
        ck.require(forests == catalan[n],
                   "forest count at n=" + std::to_string(n) + " is not Catalan");
    }
    for (int n = 1; n <= 5; ++n)
        ck.require(check_tamari_isomorphism(n),
                   "rotation-lattice mismatch at n=" + std::to_string(n));
    for (int n = 1; n <= 5; ++n) {
        std::vector<PlaneForest> forests;
        for (const PlanePoset& p : enumerate_plane_posets(n))
            if (is_plane_forest(p))
                forests.emplace_back(p);
        std::uint64_t mismatches = 0;
        for (const PlaneForest& f : forests)
            for (const PlaneForest& g : forests) {
                if (reachable_by_transformations(f, g) != leq(f.poset(), g.poset()))
                    ++mismatches;
                ++ck.cases;
            }
        ck.require(mismatches == 0, "reachability vs order mismatch at n=" +
                                        std::to_string(n));
    }
}

struct Criterion {
    int number;
    std::string slug;
    double limit_seconds;  // 0 = no budget pinned
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "bijection-tables", 1.0, check_bijection_tables},
        {2, "enumeration-counts", 5.0, check_enumeration_counts},
        {3, "pairing-tables", 1.0, check_pairing_tables},
        {4, "level-table", 0.0, check_level_table},
        {5, "hasse-figures", 0.0, check_hasse_figures},
        {6, "bruhat-isomorphism", 30.0, check_bruhat_isomorphism},
        {7, "identity-suites", 300.0, check_identity_suites},
        {8, "nondegeneracy", 0.0, check_nondegeneracy},
        {9, "rank-grading", 0.0, check_rank_grading},
        {10, "tamari-forests", 60.0, check_tamari},
    };

    int passed = 0;
    for (const Criterion& c : criteria) {
        Checker ck;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(ck);
        } catch (const std::exception& e) {
            ck.problems.push_back(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
            ck.problems.push_back("exceeded the time budget");

        std::cout << (ck.problems.empty() ? "[PASS]" : "[FAIL]") << " " << c.number
                  << " " << c.slug;
        char buf[64];
        std::snprintf(buf, sizeof buf, " (%.2fs", seconds);
        std::cout << buf;
        if (c.limit_seconds > 0) {
            std::snprintf(buf, sizeof buf, ", limit %.0fs", c.limit_seconds);
            std::cout << buf;
        }
        std::cout << ")";
        for (std::size_t i = 0; i < ck.problems.size() && i < 3; ++i)
            std::cout << (i ? "; " : " — ") << ck.problems[i];
        std::cout << std::endl;
        if (ck.problems.empty())
            ++passed;
    }
    std::cout << "acceptance: " << passed << "/" << criteria.size()
              << " criteria passed\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
