#include "pposets/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace pposets {

namespace {

// Decode tables for packed pair indices.
struct PairTables {
    std::array<std::uint8_t, 120> fst{};
    std::array<std::uint8_t, 120> snd{};
    constexpr PairTables() {
        for (int j = 2; j <= kMaxCardinality; ++j)
            for (int i = 1; i < j; ++i) {
                int b = PairSet::pair_index(i, j);
                fst[b] = static_cast<std::uint8_t>(i);
                snd[b] = static_cast<std::uint8_t>(j);
            }
    }
};
constexpr PairTables kTables;

template <class Fn>
void for_each_pair(const PairSet& s, Fn&& fn) {
    auto [w0, w1] = s.key();
    for (int word = 0; word < 2; ++word) {
        std::uint64_t w = word == 0 ? w0 : w1;
        while (w) {
            int b = std::countr_zero(w) + 64 * word;
            fn(kTables.fst[b], kTables.snd[b]);
            w &= w - 1;
        }
    }
}

std::uint32_t label_mask(int n, const std::vector<int>& s) {
    std::uint32_t m = 0;
    for (int v : s) {
        if (v < 1 || v > n)
            throw std::invalid_argument("label " + std::to_string(v) +
                                        " outside {1.." + std::to_string(n) + "}");
        m |= 1u << (v - 1);
    }
    return m;
}

}  // namespace

TransitivityViolation::TransitivityViolation(int i, int j, int k, char relation)
    : std::runtime_error(std::string(1, relation) + "-transitivity fails on triple (" +
                         std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + ")"),
      i_(i), j_(j), k_(k), relation_(relation) {}

CardinalityMismatch::CardinalityMismatch(int left, int right)
    : std::invalid_argument("cardinality mismatch: " + std::to_string(left) +
                            " vs " + std::to_string(right)) {}

ResourceGuardError::ResourceGuardError(int n, int limit)
    : std::runtime_error("n = " + std::to_string(n) + " exceeds the guard (" +
                         std::to_string(limit) + "); raise it explicitly if intended"),
      n_(n), limit_(limit) {}

void check_guard(int n, int guard) {
    if (n > kMaxCardinality)
        throw ResourceGuardError(n, kMaxCardinality);
    if (n > guard)
        throw ResourceGuardError(n, guard);
}

int PairSet::count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
}

PairSet PairSet::intersect(const PairSet& o) const {
    PairSet r;
    r.w_[0] = w_[0] & o.w_[0];
    r.w_[1] = w_[1] & o.w_[1];
    return r;
}

PairSet PairSet::unite(const PairSet& o) const {
    PairSet r;
    r.w_[0] = w_[0] | o.w_[0];
    r.w_[1] = w_[1] | o.w_[1];
    return r;
}

PairSet PairSet::symmetric_difference(const PairSet& o) const {
    PairSet r;
    r.w_[0] = w_[0] ^ o.w_[0];
    r.w_[1] = w_[1] ^ o.w_[1];
    return r;
}

PairSet PairSet::full(int n) {
    PairSet r;
    int bits = n * (n - 1) / 2;
    if (bits >= 64) {
        r.w_[0] = ~std::uint64_t{0};
        r.w_[1] = bits == 64 ? 0 : (~std::uint64_t{0}) >> (128 - bits);
    } else {
        r.w_[0] = bits == 0 ? 0 : (~std::uint64_t{0}) >> (64 - bits);
    }
    return r;
}

PairSet PairSet::complement_within(int n) const {
    PairSet f = full(n);
    PairSet r;
    r.w_[0] = f.w_[0] & ~w_[0];
    r.w_[1] = f.w_[1] & ~w_[1];
    return r;
}

PairSet PairSet::prefix(int k) const {
    return intersect(full(k));
}

PairSet PairSet::suffix_shifted(int k, int n) const {
    PairSet r;
    for_each_pair(*this, [&](int i, int j) {
        if (i > k)
            r.set(i - k, j - k);
    });
    (void)n;
    return r;
}

PairSet PairSet::shifted(int offset, int n) const {
    PairSet r;
    for_each_pair(*this, [&](int i, int j) {
        assert(i + offset >= 1 && j + offset <= kMaxCardinality);
        r.set(i + offset, j + offset);
    });
    (void)n;
    return r;
}

std::vector<std::pair<int, int>> PairSet::pairs(int n) const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (test(i, j))
                out.emplace_back(i, j);
    return out;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    int n = static_cast<int>(word_.size());
    if (n > kMaxCardinality)
        throw std::invalid_argument("word longer than " + std::to_string(kMaxCardinality));
    std::uint32_t seen = 0;
    for (int v : word_) {
        if (v < 1 || v > n || (seen & (1u << (v - 1))))
            throw std::invalid_argument("not a permutation word of {1.." +
                                        std::to_string(n) + "}");
        seen |= 1u << (v - 1);
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.empty())
        return Permutation();
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument("bad word entry '" + item + "'");
            w.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad word character '" + std::string(1, c) +
                                            "' (use the comma form for n > 9)");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::vector<int> Permutation::inverse() const {
    std::vector<int> pos(word_.size());
    for (int p = 0; p < static_cast<int>(word_.size()); ++p)
        pos[word_[p] - 1] = p + 1;
    return pos;
}

std::string Permutation::to_string() const {
    std::string out;
    bool commas = size() > 9;
    for (int p = 0; p < size(); ++p) {
        if (commas && p > 0)
            out += ',';
        out += std::to_string(word_[p]);
    }
    return out;
}

PlanePoset PlanePoset::validated(int n, const std::vector<std::pair<int, int>>& h_pairs) {
    if (n < 0 || n > kMaxCardinality)
        throw std::invalid_argument("cardinality must be in [0," +
                                    std::to_string(kMaxCardinality) + "]");
    PairSet h;
    for (auto [i, j] : h_pairs) {
        if (i < 1 || j <= i || j > n)
            throw std::invalid_argument("pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") violates 1 <= i < j <= n");
        h.set(i, j);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                if (h.test(i, j) && h.test(j, k) && !h.test(i, k))
                    throw TransitivityViolation(i, j, k, 'h');
                if (!h.test(i, j) && !h.test(j, k) && h.test(i, k))
                    throw TransitivityViolation(i, j, k, 'r');
            }
    return from_parts_unchecked(n, h);
}

PlanePoset PlanePoset::from_parts_unchecked(int n, PairSet h) {
    PlanePoset p;
    p.n_ = n;
    p.h_ = h;
    assert(PairSet::full(n).contains(h));
    return p;
}

std::string PlanePoset::word_string() const {
    return psi_inverse(*this).to_string();
}

namespace {

// Word of a poset without allocation; used by both psi_inverse and the
// canonical comparison.
int word_of(const PlanePoset& p, std::array<int, kMaxCardinality>& out) {
    int n = p.size();
    for (int v = 0; v < n; ++v)
        out[v] = v + 1;
    // i comes before j in the word iff i <_h j (valid posets make this a
    // strict weak ordering).
    std::sort(out.begin(), out.begin() + n, [&](int a, int b) {
        return a < b ? p.h_pairs().test(a, b) : !p.h_pairs().test(b, a);
    });
    return n;
}

}  // namespace

bool operator<(const PlanePoset& a, const PlanePoset& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    if (a.h_pairs() == b.h_pairs())
        return false;
    std::array<int, kMaxCardinality> wa, wb;
    int n = word_of(a, wa);
    word_of(b, wb);
    for (int p = 0; p < n; ++p)
        if (wa[p] != wb[p])
            return wa[p] < wb[p];
    return false;
}

PlanePoset psi(const Permutation& sigma) {
    int n = sigma.size();
    std::vector<int> pos = sigma.inverse();
    PairSet h;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pos[i - 1] < pos[j - 1])
                h.set(i, j);
    return PlanePoset::from_parts_unchecked(n, h);
}

Permutation psi_inverse(const PlanePoset& p) {
    std::array<int, kMaxCardinality> w;
    int n = word_of(p, w);
    return Permutation(std::vector<int>(w.begin(), w.begin() + n));
}

PlanePoset restrict_to(const PlanePoset& p, const std::vector<int>& s) {
    std::vector<int> labels = s;
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("restriction set has repeated labels");
    label_mask(p.size(), labels);  // bounds check
    int m = static_cast<int>(labels.size());
    PairSet h;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (p.h_pairs().test(labels[a], labels[b]))
                h.set(a + 1, b + 1);
    return PlanePoset::from_parts_unchecked(m, h);
}

PlanePoset iota(const PlanePoset& p) {
    return PlanePoset::from_parts_unchecked(p.size(),
                                            p.h_pairs().complement_within(p.size()));
}

PlanePoset compose(const PlanePoset& p, const PlanePoset& q) {
    int n = p.size() + q.size();
    if (n > kMaxCardinality)
        throw ResourceGuardError(n, kMaxCardinality);
    PairSet h = p.h_pairs().unite(q.h_pairs().shifted(p.size(), q.size()));
    return PlanePoset::from_parts_unchecked(n, h);
}

PlanePoset under(const PlanePoset& p, const PlanePoset& q) {
    int n = p.size() + q.size();
    if (n > kMaxCardinality)
        throw ResourceGuardError(n, kMaxCardinality);
    PairSet h = p.h_pairs().unite(q.h_pairs().shifted(p.size(), q.size()));
    for (int i = 1; i <= p.size(); ++i)
        for (int j = p.size() + 1; j <= n; ++j)
            h.set(i, j);
    return PlanePoset::from_parts_unchecked(n, h);
}

int level(const PlanePoset& p) {
    return p.size() * (p.size() - 1) / 2 - p.h_pairs().count();
}

int h_count_cross(const PlanePoset& p, const std::vector<int>& i_set,
                  const std::vector<int>& j_set) {
    label_mask(p.size(), i_set);
    label_mask(p.size(), j_set);
    int count = 0;
    for (int x : i_set)
        for (int y : j_set)
            if (x < y && p.h_pairs().test(x, y))
                ++count;
    return count;
}

bool is_h_ideal(const PlanePoset& p, const std::vector<int>& s) {
    std::uint32_t m = label_mask(p.size(), s);
    for (int x : s)
        for (int y = x + 1; y <= p.size(); ++y)
            if (p.h_pairs().test(x, y) && !(m & (1u << (y - 1))))
                return false;
    return true;
}

bool is_r_ideal(const PlanePoset& p, const std::vector<int>& s) {
    std::uint32_t m = label_mask(p.size(), s);
    for (int x : s)
        for (int y = x + 1; y <= p.size(); ++y)
            if (!p.h_pairs().test(x, y) && !(m & (1u << (y - 1))))
                return false;
    return true;
}

bool is_biideal(const PlanePoset& p, const std::vector<int>& s) {
    return is_h_ideal(p, s) && is_r_ideal(p, s);
}

std::vector<std::vector<int>> biideals(const PlanePoset& p) {
    std::vector<std::vector<int>> out;
    for (int k = p.size(); k >= 0; --k) {
        std::vector<int> s;
        for (int v = k + 1; v <= p.size(); ++v)
            s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

bool is_plane_forest(const PlanePoset& p) {
    for (int k = 3; k <= p.size(); ++k)
        for (int j = 2; j < k; ++j) {
            if (!p.h_pairs().test(j, k))
                continue;
            for (int i = 1; i < j; ++i)
                if (p.h_pairs().test(i, k) && !p.h_pairs().test(i, j))
                    return false;
        }
    return true;
}

std::vector<PlanePoset> enumerate_plane_posets(int n, int guard) {
    check_guard(n, guard);
    std::vector<PlanePoset> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(psi(Permutation(w)));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string poset_to_json(const PlanePoset& p) {
    nlohmann::ordered_json j;
    j["n"] = p.size();
    j["h"] = nlohmann::ordered_json::array();
    for (auto [a, b] : p.h_pairs().pairs(p.size()))
        j["h"].push_back({a, b});
    return j.dump();
}

PlanePoset poset_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("h"))
        throw std::invalid_argument("poset JSON must be {\"n\":..,\"h\":[[i,j],..]}");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j["h"])
        pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return PlanePoset::validated(n, pairs);
}

PlanePoset parse_poset(const std::string& text) {
    if (text.find('{') != std::string::npos)
        return poset_from_json(text);
    return psi(Permutation::parse(text));
}

}  // namespace pposets
