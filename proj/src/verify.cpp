#include "pposets/verify.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "json.hpp"
#include "pposets/bruhat.hpp"
#include "pposets/hopf.hpp"
#include "pposets/parallel.hpp"

namespace pposets {

namespace {

constexpr std::size_t kMaxRecordedFailures = 100;

std::vector<std::vector<PlanePoset>> basis_by_size(int n_max, int guard) {
    std::vector<std::vector<PlanePoset>> basis(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        basis[n] = enumerate_plane_posets(n, guard);
    return basis;
}

std::string label(const PlanePoset& p) {
    return p.size() == 0 ? "1" : p.word_string();
}

// Per-chunk accumulator; chunks merge in order, so reports are
// deterministic regardless of jobs.
struct ChunkResult {
    std::uint64_t cases = 0;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        if (failures.size() < kMaxRecordedFailures)
            failures.push_back(std::move(msg));
    }
};

IdentityReport merge(std::string name, int n_max, std::vector<ChunkResult> chunks) {
    IdentityReport r;
    r.identity = std::move(name);
    r.n_max = n_max;
    for (ChunkResult& c : chunks) {
        r.cases_checked += c.cases;
        for (std::string& f : c.failures)
            if (r.failures.size() < kMaxRecordedFailures)
                r.failures.push_back(std::move(f));
            else
                break;
    }
    if (r.failures.size() == kMaxRecordedFailures)
        r.failures.push_back("(further failures suppressed)");
    return r;
}

using Key3 = std::tuple<PlanePoset, PlanePoset, PlanePoset>;
using Tensor3 = std::map<Key3, QPolynomial>;

void add3(Tensor3& t, const PlanePoset& a, const PlanePoset& b, const PlanePoset& c,
          const QPolynomial& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = t.emplace(Key3{a, b, c}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            t.erase(it);
    }
}

using Coproduct = TensorElement (*)(const PlanePoset&);

bool coassociative_for(const PlanePoset& p, Coproduct delta) {
    Tensor3 lhs, rhs;
    const TensorElement dp = delta(p);
    for (const auto& [legs, c] : dp.terms()) {
        const TensorElement second = delta(legs.second), first = delta(legs.first);
        for (const auto& [inner, d] : second.terms())
            add3(lhs, legs.first, inner.first, inner.second, c * d);
        for (const auto& [inner, d] : first.terms())
            add3(rhs, inner.first, inner.second, legs.second, c * d);
    }
    return lhs == rhs;
}

IdentityReport check_coassoc(int n_max, int jobs, int guard) {
    auto basis = basis_by_size(n_max, guard);
    std::vector<PlanePoset> flat;
    for (const auto& level_set : basis)
        flat.insert(flat.end(), level_set.begin(), level_set.end());
    std::vector<ChunkResult> chunks(std::max(jobs, 1));
    run_chunked(flat.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t c) {
        for (std::size_t i = b; i < e; ++i) {
            if (!coassociative_for(flat[i], &delta_q))
                chunks[c].fail("delta_q not coassociative at " + label(flat[i]));
            if (!coassociative_for(flat[i], &delta_prime_q))
                chunks[c].fail("delta_prime_q not coassociative at " + label(flat[i]));
            chunks[c].cases += 2;
        }
    });
    return merge("coassoc", n_max, std::move(chunks));
}

std::vector<std::pair<PlanePoset, PlanePoset>> basis_pairs(
    const std::vector<std::vector<PlanePoset>>& basis, int n_max) {
    std::vector<std::pair<PlanePoset, PlanePoset>> out;
    for (int a = 0; a <= n_max; ++a)
        for (int b = 0; a + b <= n_max; ++b)
            for (const PlanePoset& x : basis[a])
                for (const PlanePoset& y : basis[b])
                    out.emplace_back(x, y);
    return out;
}

// The two compatibility laws between delta_q and the products.  For the
// composition product the coproduct is a `q-infinitesimal' morphism:
//   delta_q(xy) = delta_q(x)(1 (x) y) + (x (x) 1)delta_q(y) - x (x) y.
// For the under product each leg that absorbs y (resp. keeps a piece of y)
// picks up a power of q counting the pairs forced under the other leg:
//   delta_q(x|>y) = sum q^(|x1||y|) x1 (x) (x2|>y)
//                 + sum q^(|x||y2|) (x|>y1) (x) y2 - q^(|x||y|) x (x) y.
IdentityReport check_infinitesimal(bool under_product, int n_max, int jobs, int guard) {
    auto basis = basis_by_size(n_max, guard);
    auto pairs = basis_pairs(basis, n_max);
    std::vector<ChunkResult> chunks(std::max(jobs, 1));
    run_chunked(pairs.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t ci) {
        for (std::size_t i = b; i < e; ++i) {
            const auto& [x, y] = pairs[i];
            TensorElement lhs, rhs;
            const TensorElement dx = delta_q(x), dy = delta_q(y);
            if (!under_product) {
                lhs = delta_q(compose(x, y));
                for (const auto& [legs, c] : dx.terms())
                    rhs.add_term(legs.first, compose(legs.second, y), c);
                for (const auto& [legs, c] : dy.terms())
                    rhs.add_term(compose(x, legs.first), legs.second, c);
                rhs.add_term(x, y, QPolynomial(-1));
            } else {
                lhs = delta_q(under(x, y));
                for (const auto& [legs, c] : dx.terms())
                    rhs.add_term(legs.first, under(legs.second, y),
                                 c * QPolynomial::monomial(legs.first.size() * y.size()));
                for (const auto& [legs, c] : dy.terms())
                    rhs.add_term(under(x, legs.first), legs.second,
                                 c * QPolynomial::monomial(x.size() * legs.second.size()));
                rhs.add_term(x, y, -QPolynomial::monomial(x.size() * y.size()));
            }
            if (!(lhs == rhs))
                chunks[ci].fail(std::string(under_product ? "infinitesimal-under"
                                                          : "infinitesimal-m") +
                                " fails at x=" + label(x) + " y=" + label(y));
            ++chunks[ci].cases;
        }
    });
    return merge(under_product ? "infinitesimal-under" : "infinitesimal-m", n_max,
                 std::move(chunks));
}

IdentityReport check_pairing_symmetric(int n_max, int jobs, int guard) {
    auto basis = basis_by_size(n_max, guard);
    std::vector<std::tuple<int, int, int>> work;  // (n, i, j), i <= j
    for (int n = 0; n <= n_max; ++n)
        for (int i = 0; i < static_cast<int>(basis[n].size()); ++i)
            for (int j = i; j < static_cast<int>(basis[n].size()); ++j)
                work.emplace_back(n, i, j);
    std::vector<ChunkResult> chunks(std::max(jobs, 1));
    run_chunked(work.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t ci) {
        for (std::size_t w = b; w < e; ++w) {
            auto [n, i, j] = work[w];
            const PlanePoset &p = basis[n][i], &q = basis[n][j];
            if (!(pairing(p, q) == pairing(q, p)))
                chunks[ci].fail("pairing not symmetric at P=" + label(p) +
                                " Q=" + label(q));
            ++chunks[ci].cases;
        }
    });
    return merge("pairing-symmetric", n_max, std::move(chunks));
}

// Adjunction of one product with the matching coproduct:
//   <PQ, R>    = <P (x) Q, delta_q(R)>        (composition / delta_q)
//   <P |> Q, R> = <P (x) Q, delta_prime_q(R)>  (under / delta_prime_q)
IdentityReport check_adjunction(bool under_product, int n_max, int jobs, int guard) {
    auto basis = basis_by_size(n_max, guard);
    std::vector<PlanePoset> flat;
    for (const auto& level_set : basis)
        flat.insert(flat.end(), level_set.begin(), level_set.end());
    std::vector<ChunkResult> chunks(std::max(jobs, 1));
    run_chunked(flat.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t ci) {
        for (std::size_t w = b; w < e; ++w) {
            const PlanePoset& r = flat[w];
            TensorElement dr = under_product ? delta_prime_q(r) : delta_q(r);
            for (int a = 0; a <= r.size(); ++a)
                for (const PlanePoset& p : basis[a])
                    for (const PlanePoset& q : basis[r.size() - a]) {
                        QPolynomial lhs =
                            pairing(under_product ? under(p, q) : compose(p, q), r);
                        QPolynomial rhs = pairing_tensor(p, q, dr);
                        if (!(lhs == rhs))
                            chunks[ci].fail(
                                std::string(under_product ? "pairing-adjoint-under"
                                                          : "pairing-hopf-m") +
                                " fails at P=" + label(p) + " Q=" + label(q) +
                                " R=" + label(r));
                        ++chunks[ci].cases;
                    }
        }
    });
    return merge(under_product ? "pairing-adjoint-under" : "pairing-hopf-m", n_max,
                 std::move(chunks));
}

// q = 0 degenerations: the coproduct collapses to the sum over composition
// splits, and the pairing collapses to the antichain point mass.
IdentityReport check_delta0(int n_max, int jobs, int guard) {
    auto basis = basis_by_size(n_max, guard);
    std::vector<PlanePoset> flat;
    for (const auto& level_set : basis)
        flat.insert(flat.end(), level_set.begin(), level_set.end());
    std::vector<ChunkResult> chunks(std::max(jobs, 1));
    run_chunked(flat.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t ci) {
        for (std::size_t w = b; w < e; ++w) {
            const PlanePoset& p = flat[w];
            TensorElement at_zero, splits;
            const TensorElement dq = delta_q(p), dprime = delta_prime_q(p);
            for (const auto& [legs, c] : dq.terms())
                at_zero.add_term(legs.first, legs.second,
                                 QPolynomial(c.constant_term()));
            for (const auto& term : dprime.terms())
                splits.add_term(term.first.first, term.first.second, QPolynomial(1));
            if (!(at_zero == splits))
                chunks[ci].fail("delta_q at q=0 is not the split sum at " + label(p));
            ++chunks[ci].cases;
            for (const PlanePoset& q : basis[p.size()]) {
                bool nonzero = pairing(p, q).constant_term() != 0;
                bool antichains = p.h_pairs().none() && q.h_pairs().none();
                if (nonzero != antichains)
                    chunks[ci].fail("pairing at q=0 wrong at P=" + label(p) +
                                    " Q=" + label(q));
                ++chunks[ci].cases;
            }
        }
    });
    return merge("delta0-splits", n_max, std::move(chunks));
}

IdentityReport check_rank_formula(int n_max, int jobs, int guard) {
    std::vector<ChunkResult> chunks(1);
    ChunkResult& out = chunks[0];
    for (int n = 0; n <= n_max; ++n) {
        HasseGraph g = hasse(n, false, guard);
        for (auto [a, b] : g.edges) {
            if (level(g.nodes[b]) != level(g.nodes[a]) + 1)
                out.fail("cover " + label(g.nodes[a]) + " -> " + label(g.nodes[b]) +
                         " is not a level step");
            ++out.cases;
        }
        // Exponent of every nonzero pairing against the grading (chunked:
        // this double loop is the bulk of the suite).
        const std::vector<PlanePoset>& basis = g.nodes;
        std::vector<ChunkResult> inner(std::max(jobs, 1));
        run_chunked(basis.size(), jobs, [&](std::size_t lo, std::size_t hi,
                                            std::size_t ci) {
            for (std::size_t i = lo; i < hi; ++i)
                for (const PlanePoset& q : basis) {
                    QPolynomial v = pairing(basis[i], q);
                    if (!v.is_zero()) {
                        bool monic = v.is_monomial() && v.coefficient(v.degree()) == 1;
                        int expected = n * (n - 1) - level(basis[i]) - level(q);
                        if (!monic || v.degree() != expected)
                            inner[ci].fail("pairing exponent wrong at P=" +
                                           label(basis[i]) + " Q=" + label(q));
                    }
                    ++inner[ci].cases;
                }
        });
        for (ChunkResult& c : inner) {
            out.cases += c.cases;
            for (std::string& f : c.failures)
                out.fail(std::move(f));
        }
    }
    return merge("rank-formula", n_max, std::move(chunks));
}

// Factorization of the order through the products: with R cut after a into
// prefix R1 and suffix R2 (so |R1| = |P|),
//   P |> Q <= R        iff  P <= R1 and Q <= R2
//   PQ <= R            iff  R = R1 R2 splits and P <= R1 and Q <= R2
//   iota(PQ) <= R      iff  iota(R1) <= P and iota(R2) <= Q
//   iota(P |> Q) <= R  iff  R = R1 R2 splits and iota(R1) <= P and iota(R2) <= Q
IdentityReport check_lemma22(bool under_product, int n_max, int jobs, int guard) {
    auto basis = basis_by_size(n_max, guard);
    std::vector<PlanePoset> flat;
    for (const auto& level_set : basis)
        flat.insert(flat.end(), level_set.begin(), level_set.end());
    std::vector<ChunkResult> chunks(std::max(jobs, 1));
    run_chunked(flat.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t ci) {
        for (std::size_t w = b; w < e; ++w) {
            const PlanePoset& r = flat[w];
            for (int a = 0; a <= r.size(); ++a) {
                std::vector<int> lo(a), hi(r.size() - a);
                std::iota(lo.begin(), lo.end(), 1);
                std::iota(hi.begin(), hi.end(), a + 1);
                PlanePoset r1 = restrict_to(r, lo), r2 = restrict_to(r, hi);
                bool splits =
                    r.h_pairs().count() == r1.h_pairs().count() + r2.h_pairs().count();
                PlanePoset ir1 = iota(r1), ir2 = iota(r2);
                for (const PlanePoset& p : basis[a])
                    for (const PlanePoset& q : basis[r.size() - a]) {
                        bool plain, twisted;
                        if (under_product) {
                            plain = leq(under(p, q), r) ==
                                    (leq(p, r1) && leq(q, r2));
                            twisted = leq(iota(under(p, q)), r) ==
                                      (splits && leq(ir1, p) && leq(ir2, q));
                        } else {
                            plain = leq(compose(p, q), r) ==
                                    (splits && leq(p, r1) && leq(q, r2));
                            twisted = leq(iota(compose(p, q)), r) ==
                                      (leq(ir1, p) && leq(ir2, q));
                        }
                        if (!plain)
                            chunks[ci].fail(std::string("factorization (") +
                                            (under_product ? "under" : "m") +
                                            ") fails at P=" + label(p) +
                                            " Q=" + label(q) + " R=" + label(r));
                        if (!twisted)
                            chunks[ci].fail(std::string("iota-twisted factorization (") +
                                            (under_product ? "under" : "m") +
                                            ") fails at P=" + label(p) +
                                            " Q=" + label(q) + " R=" + label(r));
                        chunks[ci].cases += 2;
                    }
            }
        }
    });
    return merge(under_product ? "lemma22-under" : "lemma22-m", n_max,
                 std::move(chunks));
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "coassoc",          "infinitesimal-m",       "infinitesimal-under",
        "pairing-symmetric", "pairing-hopf-m",       "pairing-adjoint-under",
        "delta0-splits",    "rank-formula",          "lemma22-under",
        "lemma22-m",
    };
    return names;
}

IdentityReport verify_identity(const std::string& name, int n_max, int jobs,
                               int guard) {
    check_guard(n_max, guard);
    if (name == "coassoc")
        return check_coassoc(n_max, jobs, guard);
    if (name == "infinitesimal-m")
        return check_infinitesimal(false, n_max, jobs, guard);
    if (name == "infinitesimal-under")
        return check_infinitesimal(true, n_max, jobs, guard);
    if (name == "pairing-symmetric")
        return check_pairing_symmetric(n_max, jobs, guard);
    if (name == "pairing-hopf-m")
        return check_adjunction(false, n_max, jobs, guard);
    if (name == "pairing-adjoint-under")
        return check_adjunction(true, n_max, jobs, guard);
    if (name == "delta0-splits")
        return check_delta0(n_max, jobs, guard);
    if (name == "rank-formula")
        return check_rank_formula(n_max, jobs, guard);
    if (name == "lemma22-under")
        return check_lemma22(true, n_max, jobs, guard);
    if (name == "lemma22-m")
        return check_lemma22(false, n_max, jobs, guard);
    throw UnknownIdentityError(name);
}

std::string report_to_json(const IdentityReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["n_max"] = report.n_max;
    j["cases_checked"] = report.cases_checked;
    j["failures"] = report.failures;
    return j.dump();
}

}  // namespace pposets
