#pragma once

#include <map>
#include <string>
#include <utility>

#include "pposets/poset.hpp"
#include "pposets/qpoly.hpp"

// Formal linear combinations of plane posets and of elementary tensors, with
// QPolynomial coefficients.  Keys iterate in the canonical poset order
// (cardinality, then word lex), so serialization is reproducible.

namespace pposets {

class VectorElement {
public:
    using Terms = std::map<PlanePoset, QPolynomial>;

    VectorElement() = default;
    static VectorElement basis(const PlanePoset& p);

    // Zero-pruning accumulation.  All keys must share one cardinality;
    // mixing degrees throws.
    void add_term(const PlanePoset& p, const QPolynomial& c);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    VectorElement& operator+=(const VectorElement& o);
    VectorElement& operator-=(const VectorElement& o);
    VectorElement operator+(const VectorElement& o) const;
    VectorElement operator-(const VectorElement& o) const;
    VectorElement operator*(const QPolynomial& scalar) const;
    bool operator==(const VectorElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

// Bilinear extensions of the two products on basis elements.
VectorElement product_m(const VectorElement& a, const VectorElement& b);
VectorElement product_under(const VectorElement& a, const VectorElement& b);

class TensorElement {
public:
    using Key = std::pair<PlanePoset, PlanePoset>;
    using Terms = std::map<Key, QPolynomial>;

    TensorElement() = default;
    static TensorElement basis(const PlanePoset& left, const PlanePoset& right);

    void add_term(const PlanePoset& left, const PlanePoset& right,
                  const QPolynomial& c);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    // Terms as "coeff*(left ⊗ right)"; the empty poset renders as 1.
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace pposets
