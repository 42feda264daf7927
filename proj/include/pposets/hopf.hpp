#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pposets/linear.hpp"
#include "pposets/poset.hpp"
#include "pposets/qpoly.hpp"

// The q-deformed coalgebra structure and the Hopf pairing.
//
// delta_q cuts along biideals (suffixes): the term for the cut after k
// carries q^c where c counts h-pairs crossing from the prefix into the
// suffix.  delta_prime_q sums over composition splits P = P1 P2 with weight
// q^(|P1|*|P2|).  The pairing of P and Q is q^|E(P) xor E(Q)| when the
// h-pair sets are disjoint and 0 otherwise.

namespace pposets {

class EmptyPosetError : public std::invalid_argument {
public:
    explicit EmptyPosetError(const std::string& op)
        : std::invalid_argument(op + " is undefined on the empty poset") {}
};

TensorElement delta_q(const PlanePoset& p);
// delta_q minus the two unit legs; only for nonempty posets.
TensorElement delta_tilde_q(const PlanePoset& p);
TensorElement delta_prime_q(const PlanePoset& p);

// Size of the symmetric difference of the h-pair sets.
int phi(const PlanePoset& p, const PlanePoset& q);

QPolynomial pairing(const PlanePoset& p, const PlanePoset& q);
QPolynomial pairing(const VectorElement& a, const VectorElement& b);
// <a (x) b, t> with the pairing applied leg by leg.
QPolynomial pairing_tensor(const PlanePoset& a, const PlanePoset& b,
                           const TensorElement& t);

// Pairings of all basis pairs of cardinality n, rows and columns in lex word
// order.
std::vector<std::vector<QPolynomial>> gram_matrix(int n, int guard = kDefaultGuard,
                                                  int jobs = 1);

// Rank of the Gram matrix with q evaluated at q_value, over Z/modulus.
int gram_rank_at(int n, std::uint64_t q_value, std::uint64_t modulus,
                 int guard = kDefaultGuard);

struct TriangularityWitness {
    bool holds = false;
    std::string failure;  // first offending entry when !holds
};

// Orders the basis by descending level (so images under iota are sorted by
// ascending order rank) and checks that [ <P_i, iota(P_j)> ] is upper
// triangular with diagonal q^(n(n-1)/2).
TriangularityWitness gram_triangularity_witness(int n, int guard = kDefaultGuard);

}  // namespace pposets
