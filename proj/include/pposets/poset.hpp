#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core types for plane posets: a finite set {1..n} carrying two partial
// orders <_h and <_r such that every pair of distinct elements is comparable
// for exactly one of them.  The union of the two orders is the usual total
// order on {1..n}, so a plane poset is determined by which pairs i < j are
// h-related.  That pair set is the whole representation here.

namespace pposets {

inline constexpr int kMaxCardinality = 16;   // hard representation cap
inline constexpr int kDefaultGuard = 9;      // 9! = 362880 elements

class TransitivityViolation : public std::runtime_error {
public:
    TransitivityViolation(int i, int j, int k, char relation);
    int i() const { return i_; }
    int j() const { return j_; }
    int k() const { return k_; }
    char relation() const { return relation_; }  // 'h' or 'r'

private:
    int i_, j_, k_;
    char relation_;
};

class CardinalityMismatch : public std::invalid_argument {
public:
    CardinalityMismatch(int left, int right);
};

class ResourceGuardError : public std::runtime_error {
public:
    ResourceGuardError(int n, int limit);
    int n() const { return n_; }
    int limit() const { return limit_; }

private:
    int n_, limit_;
};

// Throws ResourceGuardError if n exceeds the guard or the representation cap.
void check_guard(int n, int guard);

// Set of index pairs (i,j) with 1 <= i < j <= kMaxCardinality, packed into
// two 64-bit words.  Pairs are indexed (j-1)(j-2)/2 + (i-1), so all pairs
// with j <= k occupy the low k(k-1)/2 bits.
class PairSet {
public:
    static constexpr int pair_index(int i, int j) {
        return (j - 1) * (j - 2) / 2 + (i - 1);
    }

    bool test(int i, int j) const {
        int b = pair_index(i, j);
        return (w_[b >> 6] >> (b & 63)) & 1u;
    }
    void set(int i, int j) {
        int b = pair_index(i, j);
        w_[b >> 6] |= std::uint64_t{1} << (b & 63);
    }
    void reset(int i, int j) {
        int b = pair_index(i, j);
        w_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
    }

    int count() const;
    bool none() const { return w_[0] == 0 && w_[1] == 0; }
    bool intersects(const PairSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }
    bool contains(const PairSet& o) const {
        return (o.w_[0] & ~w_[0]) == 0 && (o.w_[1] & ~w_[1]) == 0;
    }

    PairSet intersect(const PairSet& o) const;
    PairSet unite(const PairSet& o) const;
    PairSet symmetric_difference(const PairSet& o) const;
    PairSet complement_within(int n) const;

    // All pairs within {1..n}.
    static PairSet full(int n);
    // Pairs lying entirely within the prefix {1..k} (a low-bit mask).
    PairSet prefix(int k) const;
    // Pairs lying entirely within the suffix {k+1..n}, relabeled to {1..n-k}.
    PairSet suffix_shifted(int k, int n) const;
    // All pairs relabeled by +offset.
    PairSet shifted(int offset, int n) const;

    std::vector<std::pair<int, int>> pairs(int n) const;  // lex (i,j) order

    bool operator==(const PairSet& o) const { return w_ == o.w_; }
    std::pair<std::uint64_t, std::uint64_t> key() const { return {w_[0], w_[1]}; }

private:
    std::array<std::uint64_t, 2> w_{0, 0};
};

// One-line word on {1..n}; the canonical serialization of a plane poset.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);  // throws std::invalid_argument

    static Permutation identity(int n);
    // Parses "2413" (contiguous digits, n <= 9) or "10,2,1,..." (comma form).
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }
    int letter(int pos) const { return word_[pos - 1]; }  // 1-based position
    const std::vector<int>& word() const { return word_; }
    std::vector<int> inverse() const;  // inverse()[v-1] = position of value v

    std::string to_string() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

class PlanePoset {
public:
    PlanePoset() = default;  // the empty poset (the algebra unit)

    // Checks both transitivity closures; reports the first failing triple in
    // lex order.  Pairs must satisfy 1 <= i < j <= n.
    static PlanePoset validated(int n, const std::vector<std::pair<int, int>>& h_pairs);

    // Caller guarantees the invariants hold (construction paths that already
    // preserve them: psi, products, restriction, pair removal checked
    // elsewhere).
    static PlanePoset from_parts_unchecked(int n, PairSet h);

    int size() const { return n_; }
    const PairSet& h_pairs() const { return h_; }

    bool h_less(int i, int j) const { return i < j && h_.test(i, j); }
    bool r_less(int i, int j) const { return i < j && !h_.test(i, j); }

    std::string word_string() const;

    bool operator==(const PlanePoset& o) const { return n_ == o.n_ && h_ == o.h_; }
    bool operator!=(const PlanePoset& o) const { return !(*this == o); }

private:
    int n_ = 0;
    PairSet h_;
};

// Canonical order: cardinality, then lex order of the permutation words.
bool operator<(const PlanePoset& a, const PlanePoset& b);

// The bijection with permutations: i <_h j iff i < j and i appears before j
// in the word.
PlanePoset psi(const Permutation& sigma);
Permutation psi_inverse(const PlanePoset& p);

// Plane subposet on S (subset of {1..n}), relabeled to {1..|S|}.
PlanePoset restrict_to(const PlanePoset& p, const std::vector<int>& s);

// Exchange of the two partial orders; complements the h-pair set.
PlanePoset iota(const PlanePoset& p);

// Composition: q placed entirely r-above p (Hasse graph concatenation).
PlanePoset compose(const PlanePoset& p, const PlanePoset& q);
// The "under" product: q placed entirely h-above p.
PlanePoset under(const PlanePoset& p, const PlanePoset& q);

// Number of r-pairs; the rank function of the order.
int level(const PlanePoset& p);

// Number of pairs (x,y) in I x J with x <_h y.
int h_count_cross(const PlanePoset& p, const std::vector<int>& i_set,
                  const std::vector<int>& j_set);

bool is_h_ideal(const PlanePoset& p, const std::vector<int>& s);
bool is_r_ideal(const PlanePoset& p, const std::vector<int>& s);
bool is_biideal(const PlanePoset& p, const std::vector<int>& s);

// The n+1 biideals (suffixes of the total order), largest complement first:
// {}, {n}, {n-1,n}, ..., {1..n}.
std::vector<std::vector<int>> biideals(const PlanePoset& p);

// True iff no 3-subset restricts to the pattern with two r-comparable
// elements below a common third; equivalently the h-Hasse graph is a rooted
// forest.
bool is_plane_forest(const PlanePoset& p);

// All n! plane posets in lex order of their words.
std::vector<PlanePoset> enumerate_plane_posets(int n, int guard = kDefaultGuard);

// E-set encoding, e.g. {"n":3,"h":[[1,3],[2,3]]}.
std::string poset_to_json(const PlanePoset& p);
PlanePoset poset_from_json(const std::string& text);
// Accepts either the word form or the JSON form.
PlanePoset parse_poset(const std::string& text);

}  // namespace pposets
