#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pposets/poset.hpp"

// The partial order on plane posets of a fixed cardinality: P <= Q iff the
// h-pair set of Q is contained in that of P.  Through the word bijection it
// coincides with the right weak order on permutations, which is kept around
// as an independently computed oracle.

namespace pposets {

// P <= Q in the order on plane posets.  Throws CardinalityMismatch.
bool leq(const PlanePoset& p, const PlanePoset& q);

// Inversion set of a word by values: (i,j) with i < j and i after j.
// Computed from positions only; deliberately does not touch plane posets.
PairSet inversion_set(const Permutation& sigma);

// sigma <= tau in the right weak order: Inv(sigma) subset of Inv(tau).
bool weak_bruhat_leq(const Permutation& sigma, const Permutation& tau);

// Elements covering p, ordered by the lex-least h-pair whose removal
// produced them.
std::vector<PlanePoset> covers(const PlanePoset& p);

// Same covers through the word route: exchange adjacent word letters that
// ascend.  Retained as a cross-check oracle; results sorted canonically.
std::vector<PlanePoset> covers_via_word(const PlanePoset& p);

// A saturated chain from p up to q, excluding p itself; nullopt unless
// p <= q.  Each step removes the lex-least h-pair whose removal keeps the
// poset valid.
std::optional<std::vector<PlanePoset>> saturated_chain(const PlanePoset& p,
                                                       const PlanePoset& q);

struct HasseGraph {
    int n = 0;
    bool forest_only = false;
    std::vector<PlanePoset> nodes;                // lex word order
    std::vector<std::pair<int, int>> edges;       // indices into nodes, low -> high
};

// Hasse diagram of all plane posets of cardinality n, or of the suborder on
// plane forests (where the Hasse relation is the transitive reduction of the
// restricted order, not the restriction of the full Hasse relation).
HasseGraph hasse(int n, bool forest_only = false, int guard = kDefaultGuard);

std::string hasse_to_dot(const HasseGraph& g);
std::string hasse_to_json(const HasseGraph& g);

}  // namespace pposets
