#include "pposets/hopf.hpp"

#include <algorithm>
#include <cassert>

#include "pposets/parallel.hpp"

namespace pposets {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Restriction to {1..k} is a low-bit mask; restriction to {k+1..n} shifts
// labels down.  Crossing h-pairs are whatever is left.
PlanePoset prefix_poset(const PlanePoset& p, int k) {
    return PlanePoset::from_parts_unchecked(k, p.h_pairs().prefix(k));
}

PlanePoset suffix_poset(const PlanePoset& p, int k) {
    return PlanePoset::from_parts_unchecked(p.size() - k,
                                            p.h_pairs().suffix_shifted(k, p.size()));
}

int crossing_h_count(const PlanePoset& p, int k) {
    return p.h_pairs().count() - p.h_pairs().prefix(k).count() -
           p.h_pairs().suffix_shifted(k, p.size()).count();
}

bool splits_at(const PlanePoset& p, int k) {
    // No h-pair may cross the cut; crossing r-pairs are allowed by
    // definition of composition.
    return crossing_h_count(p, k) == 0;
}

}  // namespace

TensorElement delta_q(const PlanePoset& p) {
    TensorElement out;
    for (int k = p.size(); k >= 0; --k)
        out.add_term(prefix_poset(p, k), suffix_poset(p, k),
                     QPolynomial::monomial(crossing_h_count(p, k)));
    return out;
}

TensorElement delta_tilde_q(const PlanePoset& p) {
    if (p.size() == 0)
        throw EmptyPosetError("delta_tilde_q");
    TensorElement out = delta_q(p);
    out -= TensorElement::basis(p, PlanePoset());
    out -= TensorElement::basis(PlanePoset(), p);
    return out;
}

TensorElement delta_prime_q(const PlanePoset& p) {
    TensorElement out;
    for (int k = 0; k <= p.size(); ++k)
        if (splits_at(p, k))
            out.add_term(prefix_poset(p, k), suffix_poset(p, k),
                         QPolynomial::monomial(k * (p.size() - k)));
    return out;
}

int phi(const PlanePoset& p, const PlanePoset& q) {
    if (p.size() != q.size())
        throw CardinalityMismatch(p.size(), q.size());
    return p.h_pairs().symmetric_difference(q.h_pairs()).count();
}

QPolynomial pairing(const PlanePoset& p, const PlanePoset& q) {
    if (p.size() != q.size())
        return QPolynomial();
    if (p.h_pairs().intersects(q.h_pairs()))
        return QPolynomial();
    return QPolynomial::monomial(phi(p, q));
}

QPolynomial pairing(const VectorElement& a, const VectorElement& b) {
    QPolynomial acc;
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) {
            QPolynomial base = pairing(p, q);
            if (!base.is_zero())
                acc += cp * cq * base;
        }
    return acc;
}

QPolynomial pairing_tensor(const PlanePoset& a, const PlanePoset& b,
                           const TensorElement& t) {
    QPolynomial acc;
    for (const auto& [legs, c] : t.terms()) {
        QPolynomial left = pairing(a, legs.first);
        if (left.is_zero())
            continue;
        QPolynomial right = pairing(b, legs.second);
        if (right.is_zero())
            continue;
        acc += c * left * right;
    }
    return acc;
}

std::vector<std::vector<QPolynomial>> gram_matrix(int n, int guard, int jobs) {
    std::vector<PlanePoset> basis = enumerate_plane_posets(n, guard);
    std::size_t m = basis.size();
    std::vector<std::vector<QPolynomial>> rows(m);
    run_chunked(m, jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t r = begin; r < end; ++r) {
            rows[r].resize(m);
            for (std::size_t c = 0; c < m; ++c)
                rows[r][c] = pairing(basis[r], basis[c]);
        }
    });
    return rows;
}

int gram_rank_at(int n, std::uint64_t q_value, std::uint64_t modulus, int guard) {
    std::vector<PlanePoset> basis = enumerate_plane_posets(n, guard);
    std::size_t m = basis.size();
    std::vector<std::vector<std::uint64_t>> mat(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            QPolynomial e = pairing(basis[r], basis[c]);
            if (!e.is_zero())
                mat[r][c] = e.evaluate_mod(q_value % modulus, modulus);
        }
    // Plain Gaussian elimination over Z/modulus (modulus prime).
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && mat[pivot][col] == 0)
            ++pivot;
        if (pivot == m)
            continue;
        std::swap(mat[pivot], mat[row]);
        std::uint64_t inv = 1, base = mat[row][col], e = modulus - 2;
        while (e) {  // Fermat inverse
            if (e & 1)
                inv = mul_mod(inv, base, modulus);
            base = mul_mod(base, base, modulus);
            e >>= 1;
        }
        for (std::size_t c = col; c < m; ++c)
            mat[row][c] = mul_mod(mat[row][c], inv, modulus);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || mat[r][col] == 0)
                continue;
            std::uint64_t f = mat[r][col];
            for (std::size_t c = col; c < m; ++c) {
                std::uint64_t sub = mul_mod(f, mat[row][c], modulus);
                mat[r][c] = (mat[r][c] + modulus - sub) % modulus;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

TriangularityWitness gram_triangularity_witness(int n, int guard) {
    std::vector<PlanePoset> basis = enumerate_plane_posets(n, guard);
    // Descending level is a linear extension of the order on iota images:
    // iota(P_i) < iota(P_j) forces level(P_i) > level(P_j), hence i < j.
    std::stable_sort(basis.begin(), basis.end(),
                     [](const PlanePoset& a, const PlanePoset& b) {
                         return level(a) > level(b);
                     });
    QPolynomial diag = QPolynomial::monomial(n * (n - 1) / 2);
    TriangularityWitness w;
    w.holds = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            QPolynomial v = pairing(basis[i], iota(basis[j]));
            bool ok = i == j ? v == diag : (i < j || v.is_zero());
            if (!ok) {
                w.holds = false;
                w.failure = "entry (" + basis[i].word_string() + ", iota(" +
                            basis[j].word_string() + ")) = " + v.to_string();
                return w;
            }
        }
    return w;
}

}  // namespace pposets
