#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pposets/poset.hpp"

// Plane forests are the plane posets whose h-Hasse graph is a rooted forest
// (roots at the bottom).  The order restricted to them is checked against an
// independently built Tamari lattice on binary trees with rotation covers.

namespace pposets {

class LeafVertexError : public std::invalid_argument {
public:
    explicit LeafVertexError(int vertex)
        : std::invalid_argument("vertex " + std::to_string(vertex) +
                                " is a leaf; the transformation needs a child") {}
};

class PlaneForest {
public:
    // Throws std::invalid_argument when p is not a plane forest.
    explicit PlaneForest(const PlanePoset& p);

    const PlanePoset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    int parent(int v) const { return parent_[v - 1]; }  // 0 for roots
    const std::vector<int>& children(int v) const { return children_[v - 1]; }
    const std::vector<int>& roots() const { return roots_; }
    // All vertices h-above v, v included: a contiguous label interval.
    std::vector<int> subtree(int v) const;

    // "1(2,3(4)) 5" style: children in parentheses, roots joined by spaces.
    std::string to_tree_string() const;

private:
    PlanePoset poset_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> roots_;
};

// The local move generating the Tamari covers: detach the subtree of the
// rightmost (largest) child of s from s, keeping all labels.  Throws
// LeafVertexError when s has no children.
PlaneForest forest_transformation(const PlaneForest& f, int s);

// Whether g is reachable from f by transformations (BFS over forests).
// Throws CardinalityMismatch on different sizes.
bool reachable_by_transformations(const PlaneForest& f, const PlaneForest& g);

// Binary trees with n internal nodes; the empty tree is a leaf.
struct BinaryTree;
using BinaryTreePtr = std::shared_ptr<const BinaryTree>;
struct BinaryTree {
    BinaryTreePtr left, right;
};

BinaryTreePtr make_tree(BinaryTreePtr left, BinaryTreePtr right);
int tree_size(const BinaryTreePtr& t);
// Balanced-parenthesis form: leaf = "", node = "(" + left + ")" + right.
std::string tree_to_parens(const BinaryTreePtr& t);
std::vector<BinaryTreePtr> enumerate_binary_trees(int n);
// Single right rotations (A ^ B) ^ C -> A ^ (B ^ C) anywhere in t.
std::vector<BinaryTreePtr> tree_rotations(const BinaryTreePtr& t);

struct RotationGraph {
    std::vector<std::string> nodes;           // parenthesis forms, lex sorted
    std::vector<std::pair<int, int>> edges;   // rotation covers, sorted
};

// The Tamari lattice built purely from binary trees and rotations; shares no
// code with the order on plane posets.
RotationGraph tamari_oracle(int n, int guard = kDefaultGuard);

// Digraph isomorphism by refinement plus backtracking.
bool digraphs_isomorphic(const std::vector<std::vector<int>>& adj_a,
                         const std::vector<std::vector<int>>& adj_b);

// Does the Hasse diagram of the forest-restricted order match the Tamari
// lattice of the same size (as abstract digraphs)?
bool check_tamari_isomorphism(int n, int guard = kDefaultGuard);

}  // namespace pposets
