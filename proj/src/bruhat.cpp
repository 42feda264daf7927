#include "pposets/bruhat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pposets {

namespace {

// Removing h-pair (a,b) keeps the poset valid iff no element between a and b
// is h-between them, and the fresh r-pair (a,b) closes under r-transitivity
// in both directions.  Each condition is the local slice of the full triple
// scan in PlanePoset::validated.
bool removal_keeps_valid(const PlanePoset& p, int a, int b) {
    const PairSet& h = p.h_pairs();
    for (int m = a + 1; m < b; ++m)
        if (h.test(a, m) && h.test(m, b))
            return false;
    for (int k = b + 1; k <= p.size(); ++k)
        if (!h.test(b, k) && h.test(a, k))
            return false;
    for (int i = 1; i < a; ++i)
        if (!h.test(i, a) && h.test(i, b))
            return false;
    return true;
}

}  // namespace

bool leq(const PlanePoset& p, const PlanePoset& q) {
    if (p.size() != q.size())
        throw CardinalityMismatch(p.size(), q.size());
    return p.h_pairs().contains(q.h_pairs());
}

PairSet inversion_set(const Permutation& sigma) {
    std::vector<int> pos = sigma.inverse();
    PairSet inv;
    for (int i = 1; i <= sigma.size(); ++i)
        for (int j = i + 1; j <= sigma.size(); ++j)
            if (pos[i - 1] > pos[j - 1])
                inv.set(i, j);
    return inv;
}

bool weak_bruhat_leq(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw CardinalityMismatch(sigma.size(), tau.size());
    return inversion_set(tau).contains(inversion_set(sigma));
}

std::vector<PlanePoset> covers(const PlanePoset& p) {
    std::vector<PlanePoset> out;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j) {
            if (!p.h_pairs().test(i, j) || !removal_keeps_valid(p, i, j))
                continue;
            PairSet h = p.h_pairs();
            h.reset(i, j);
            out.push_back(PlanePoset::from_parts_unchecked(p.size(), h));
        }
    return out;
}

std::vector<PlanePoset> covers_via_word(const PlanePoset& p) {
    std::vector<int> w = psi_inverse(p).word();
    std::vector<PlanePoset> out;
    for (int pos = 0; pos + 1 < static_cast<int>(w.size()); ++pos) {
        if (w[pos] > w[pos + 1])
            continue;  // only ascents create a new inversion
        std::swap(w[pos], w[pos + 1]);
        out.push_back(psi(Permutation(w)));
        std::swap(w[pos], w[pos + 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<PlanePoset>> saturated_chain(const PlanePoset& p,
                                                       const PlanePoset& q) {
    if (!leq(p, q))
        return std::nullopt;
    std::vector<PlanePoset> chain;
    PlanePoset cur = p;
    while (cur != q) {
        bool stepped = false;
        for (int i = 1; i <= cur.size() && !stepped; ++i)
            for (int j = i + 1; j <= cur.size(); ++j) {
                if (!cur.h_pairs().test(i, j) || q.h_pairs().test(i, j) ||
                    !removal_keeps_valid(cur, i, j))
                    continue;
                PairSet h = cur.h_pairs();
                h.reset(i, j);
                cur = PlanePoset::from_parts_unchecked(cur.size(), h);
                chain.push_back(cur);
                stepped = true;
                break;
            }
        if (!stepped)
            throw std::logic_error("no removable pair on a nontrivial interval");
    }
    return chain;
}

HasseGraph hasse(int n, bool forest_only, int guard) {
    HasseGraph g;
    g.n = n;
    g.forest_only = forest_only;
    std::vector<PlanePoset> all = enumerate_plane_posets(n, guard);
    if (!forest_only) {
        g.nodes = all;
        std::map<std::pair<std::uint64_t, std::uint64_t>, int> index;
        for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
            index[g.nodes[i].h_pairs().key()] = i;
        for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
            for (const PlanePoset& c : covers(g.nodes[i]))
                g.edges.emplace_back(i, index.at(c.h_pairs().key()));
        return g;
    }
    for (const PlanePoset& p : all)
        if (is_plane_forest(p))
            g.nodes.push_back(p);
    // Transitive reduction of the restricted order: strictly-below bitsets,
    // then i -> j is an edge iff nothing lies strictly between.
    int m = static_cast<int>(g.nodes.size());
    std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            lt[i][j] = i != j && leq(g.nodes[i], g.nodes[j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!lt[i][j])
                continue;
            bool reduced = true;
            for (int k = 0; k < m && reduced; ++k)
                if (lt[i][k] && lt[k][j])
                    reduced = false;
            if (reduced)
                g.edges.emplace_back(i, j);
        }
    return g;
}

std::string hasse_to_dot(const HasseGraph& g) {
    std::ostringstream out;
    out << "digraph bruhat_" << g.n << (g.forest_only ? "_forests" : "") << " {\n";
    for (const PlanePoset& p : g.nodes)
        out << "  \"" << p.word_string() << "\";\n";
    for (auto [a, b] : g.edges)
        out << "  \"" << g.nodes[a].word_string() << "\" -> \""
            << g.nodes[b].word_string() << "\";\n";
    out << "}\n";
    return out.str();
}

std::string hasse_to_json(const HasseGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["forest_only"] = g.forest_only;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const PlanePoset& p : g.nodes)
        j["nodes"].push_back(p.word_string());
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges)
        j["edges"].push_back({g.nodes[a].word_string(), g.nodes[b].word_string()});
    return j.dump();
}

}  // namespace pposets
