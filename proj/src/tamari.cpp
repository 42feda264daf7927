#include "pposets/tamari.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "pposets/bruhat.hpp"

namespace pposets {

PlaneForest::PlaneForest(const PlanePoset& p) : poset_(p) {
    if (!is_plane_forest(p))
        throw std::invalid_argument("poset " + p.word_string() +
                                    " is not a plane forest");
    int n = p.size();
    parent_.assign(n, 0);
    children_.assign(n, {});
    for (int v = 1; v <= n; ++v) {
        // The h-downset of v is a chain, so its largest element is the parent.
        for (int u = v - 1; u >= 1; --u)
            if (p.h_pairs().test(u, v)) {
                parent_[v - 1] = u;
                children_[u - 1].push_back(v);
                break;
            }
        if (parent_[v - 1] == 0)
            roots_.push_back(v);
    }
}

std::vector<int> PlaneForest::subtree(int v) const {
    std::vector<int> out{v};
    for (int w = v + 1; w <= size(); ++w)
        if (poset_.h_pairs().test(v, w))
            out.push_back(w);
    // Subtrees are contiguous label intervals.
    assert(out.back() - out.front() + 1 == static_cast<int>(out.size()));
    return out;
}

namespace {

void append_tree(const PlaneForest& f, int v, std::string& out) {
    out += std::to_string(v);
    const std::vector<int>& kids = f.children(v);
    if (kids.empty())
        return;
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0)
            out += ',';
        append_tree(f, kids[i], out);
    }
    out += ')';
}

}  // namespace

std::string PlaneForest::to_tree_string() const {
    std::string out;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (i > 0)
            out += ' ';
        append_tree(*this, roots_[i], out);
    }
    return out;
}

PlaneForest forest_transformation(const PlaneForest& f, int s) {
    if (s < 1 || s > f.size())
        throw std::invalid_argument("vertex " + std::to_string(s) + " out of range");
    const std::vector<int>& kids = f.children(s);
    if (kids.empty())
        throw LeafVertexError(s);
    PairSet h = f.poset().h_pairs();
    for (int w : f.subtree(kids.back()))
        h.reset(s, w);
    return PlaneForest(PlanePoset::from_parts_unchecked(f.size(), h));
}

bool reachable_by_transformations(const PlaneForest& f, const PlaneForest& g) {
    if (f.size() != g.size())
        throw CardinalityMismatch(f.size(), g.size());
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen{f.poset().h_pairs().key()};
    std::queue<PlaneForest> frontier;
    frontier.push(f);
    while (!frontier.empty()) {
        PlaneForest cur = frontier.front();
        frontier.pop();
        if (cur.poset() == g.poset())
            return true;
        for (int s = 1; s <= cur.size(); ++s) {
            if (cur.children(s).empty())
                continue;
            PlaneForest next = forest_transformation(cur, s);
            if (seen.insert(next.poset().h_pairs().key()).second)
                frontier.push(next);
        }
    }
    return false;
}

BinaryTreePtr make_tree(BinaryTreePtr left, BinaryTreePtr right) {
    auto t = std::make_shared<BinaryTree>();
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
}

int tree_size(const BinaryTreePtr& t) {
    return t ? 1 + tree_size(t->left) + tree_size(t->right) : 0;
}

std::string tree_to_parens(const BinaryTreePtr& t) {
    if (!t)
        return "";
    return "(" + tree_to_parens(t->left) + ")" + tree_to_parens(t->right);
}

std::vector<BinaryTreePtr> enumerate_binary_trees(int n) {
    std::vector<std::vector<BinaryTreePtr>> table(n + 1);
    table[0] = {nullptr};
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k)
            for (const BinaryTreePtr& l : table[k])
                for (const BinaryTreePtr& r : table[m - 1 - k])
                    table[m].push_back(make_tree(l, r));
    return table[n];
}

std::vector<BinaryTreePtr> tree_rotations(const BinaryTreePtr& t) {
    std::vector<BinaryTreePtr> out;
    if (!t)
        return out;
    if (t->left)  // (A ^ B) ^ C -> A ^ (B ^ C)
        out.push_back(make_tree(t->left->left, make_tree(t->left->right, t->right)));
    for (const BinaryTreePtr& l : tree_rotations(t->left))
        out.push_back(make_tree(l, t->right));
    for (const BinaryTreePtr& r : tree_rotations(t->right))
        out.push_back(make_tree(t->left, r));
    return out;
}

RotationGraph tamari_oracle(int n, int guard) {
    check_guard(n, guard);
    std::vector<BinaryTreePtr> trees = enumerate_binary_trees(n);
    std::vector<std::pair<std::string, BinaryTreePtr>> sorted;
    sorted.reserve(trees.size());
    for (const BinaryTreePtr& t : trees)
        sorted.emplace_back(tree_to_parens(t), t);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    RotationGraph g;
    std::map<std::string, int> index;
    for (const auto& [s, t] : sorted) {
        index[s] = static_cast<int>(g.nodes.size());
        g.nodes.push_back(s);
    }
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        std::set<int> targets;
        for (const BinaryTreePtr& r : tree_rotations(sorted[i].second))
            targets.insert(index.at(tree_to_parens(r)));
        for (int j : targets)
            g.edges.emplace_back(i, j);
    }
    return g;
}

namespace {

// Iterative color refinement over both graphs at once: a vertex color is
// rehashed from its current color plus the sorted colors of its out- and
// in-neighborhoods.  Sharing one signature table per round keeps the color
// ids comparable between the two graphs.
struct Digraph {
    const std::vector<std::vector<int>>& out;
    const std::vector<std::vector<int>>& in;
    std::vector<int> color;
};

void refine_colors(Digraph& a, Digraph& b) {
    auto signature = [](const Digraph& g, std::size_t v) {
        std::vector<int> sig{g.color[v], -1};
        for (int w : g.out[v])
            sig.push_back(g.color[w]);
        std::sort(sig.begin() + 2, sig.end());
        sig.push_back(-2);
        std::size_t mark = sig.size();
        for (int w : g.in[v])
            sig.push_back(g.color[w]);
        std::sort(sig.begin() + static_cast<long>(mark), sig.end());
        return sig;
    };
    a.color.assign(a.out.size(), 0);
    b.color.assign(b.out.size(), 0);
    for (;;) {
        std::map<std::vector<int>, int> ids;
        auto next_of = [&](const Digraph& g) {
            std::vector<int> next(g.out.size());
            for (std::size_t v = 0; v < g.out.size(); ++v) {
                auto [it, inserted] =
                    ids.emplace(signature(g, v), static_cast<int>(ids.size()));
                next[v] = it->second;
            }
            return next;
        };
        std::vector<int> next_a = next_of(a), next_b = next_of(b);
        if (next_a == a.color && next_b == b.color)
            return;
        a.color = std::move(next_a);
        b.color = std::move(next_b);
    }
}

struct IsoSearch {
    const std::vector<std::vector<bool>>& mat_a;
    const std::vector<std::vector<bool>>& mat_b;
    const std::vector<int>& color_a;
    const std::vector<int>& color_b;
    std::vector<int> order;        // vertices of A in assignment order
    std::vector<int> map_a_to_b;
    std::vector<bool> used_b;

    bool extend(std::size_t depth) {
        if (depth == order.size())
            return true;
        int v = order[depth];
        for (std::size_t w = 0; w < mat_b.size(); ++w) {
            if (used_b[w] || color_b[w] != color_a[v])
                continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                int u = order[d], mu = map_a_to_b[u];
                ok = mat_a[v][u] == mat_b[w][mu] && mat_a[u][v] == mat_b[mu][w];
            }
            if (!ok)
                continue;
            map_a_to_b[v] = static_cast<int>(w);
            used_b[w] = true;
            if (extend(depth + 1))
                return true;
            used_b[w] = false;
        }
        return false;
    }
};

}  // namespace

bool digraphs_isomorphic(const std::vector<std::vector<int>>& adj_a,
                         const std::vector<std::vector<int>>& adj_b) {
    std::size_t n = adj_a.size();
    if (adj_b.size() != n)
        return false;
    auto invert = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<std::vector<int>> in(n);
        for (std::size_t v = 0; v < n; ++v)
            for (int w : adj[v])
                in[w].push_back(static_cast<int>(v));
        return in;
    };
    std::vector<std::vector<int>> in_a = invert(adj_a), in_b = invert(adj_b);
    Digraph da{adj_a, in_a, {}}, db{adj_b, in_b, {}};
    refine_colors(da, db);
    std::vector<int>&color_a = da.color, &color_b = db.color;
    std::vector<int> hist_a = color_a, hist_b = color_b;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b)
        return false;
    auto dense = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (std::size_t v = 0; v < n; ++v)
            for (int w : adj[v])
                m[v][w] = true;
        return m;
    };
    std::vector<std::vector<bool>> mat_a = dense(adj_a), mat_b = dense(adj_b);
    // Assign rare colors first to prune early.
    std::map<int, int> counts;
    for (int c : color_a)
        ++counts[c];
    IsoSearch search{mat_a, mat_b, color_a, color_b, {}, std::vector<int>(n, -1),
                     std::vector<bool>(n, false)};
    search.order.resize(n);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::sort(search.order.begin(), search.order.end(), [&](int x, int y) {
        if (counts[color_a[x]] != counts[color_a[y]])
            return counts[color_a[x]] < counts[color_a[y]];
        return x < y;
    });
    return search.extend(0);
}

bool check_tamari_isomorphism(int n, int guard) {
    HasseGraph forests = hasse(n, true, guard);
    RotationGraph trees = tamari_oracle(n, guard);
    if (forests.nodes.size() != trees.nodes.size() ||
        forests.edges.size() != trees.edges.size())
        return false;
    std::vector<std::vector<int>> adj_a(forests.nodes.size());
    for (auto [a, b] : forests.edges)
        adj_a[a].push_back(b);
    std::vector<std::vector<int>> adj_b(trees.nodes.size());
    for (auto [a, b] : trees.edges)
        adj_b[a].push_back(b);
    return digraphs_isomorphic(adj_a, adj_b);
}

}  // namespace pposets
