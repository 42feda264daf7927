#include "pposets/linear.hpp"

#include <sstream>
#include <stdexcept>

namespace pposets {

namespace {

std::string basis_label(const PlanePoset& p) {
    return p.size() == 0 ? "1" : p.word_string();
}

std::string coeff_prefix(const QPolynomial& c) {
    if (c == QPolynomial(1))
        return "";
    std::string s = c.to_string();
    if (c.is_monomial() && c.terms().begin()->second > 0)
        return s + "*";
    return "(" + s + ")*";
}

}  // namespace

VectorElement VectorElement::basis(const PlanePoset& p) {
    VectorElement v;
    v.add_term(p, QPolynomial(1));
    return v;
}

void VectorElement::add_term(const PlanePoset& p, const QPolynomial& c) {
    if (c.is_zero())
        return;
    if (!terms_.empty() && terms_.begin()->first.size() != p.size())
        throw std::invalid_argument("mixed cardinalities in one linear combination");
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

VectorElement& VectorElement::operator+=(const VectorElement& o) {
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

VectorElement& VectorElement::operator-=(const VectorElement& o) {
    for (const auto& [p, c] : o.terms_)
        add_term(p, -c);
    return *this;
}

VectorElement VectorElement::operator+(const VectorElement& o) const {
    VectorElement r = *this;
    r += o;
    return r;
}

VectorElement VectorElement::operator-(const VectorElement& o) const {
    VectorElement r = *this;
    r -= o;
    return r;
}

VectorElement VectorElement::operator*(const QPolynomial& scalar) const {
    VectorElement r;
    for (const auto& [p, c] : terms_)
        r.add_term(p, c * scalar);
    return r;
}

std::string VectorElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << coeff_prefix(c) << basis_label(p);
    }
    return out.str();
}

VectorElement product_m(const VectorElement& a, const VectorElement& b) {
    VectorElement r;
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms())
            r.add_term(compose(p, q), cp * cq);
    return r;
}

VectorElement product_under(const VectorElement& a, const VectorElement& b) {
    VectorElement r;
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms())
            r.add_term(under(p, q), cp * cq);
    return r;
}

TensorElement TensorElement::basis(const PlanePoset& left, const PlanePoset& right) {
    TensorElement t;
    t.add_term(left, right, QPolynomial(1));
    return t;
}

void TensorElement::add_term(const PlanePoset& left, const PlanePoset& right,
                             const QPolynomial& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    r += o;
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement r = *this;
    r -= o;
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << coeff_prefix(c) << "(" << basis_label(k.first) << " ⊗ "
            << basis_label(k.second) << ")";
    }
    return out.str();
}

}  // namespace pposets
