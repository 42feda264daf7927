#include "pposets/qpoly.hpp"

#include <sstream>

namespace pposets {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

QPolynomial QPolynomial::monomial(int exponent, Coeff coefficient) {
    QPolynomial p;
    p.add(exponent, coefficient);
    return p;
}

Coeff QPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void QPolynomial::add(int exponent, const Coeff& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    QPolynomial r = *this;
    r += o;
    return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    QPolynomial r = *this;
    r -= o;
    return r;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    QPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add(e1 + e2, c1 * c2);
    return r;
}

Coeff QPolynomial::evaluate(const Coeff& q) const {
    // Horner over the sparse exponent gaps.
    Coeff acc = 0;
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0)
            for (int e = prev; e > it->first; --e)
                acc *= q;
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int e = prev; e > 0; --e)
            acc *= q;
    return acc;
}

std::uint64_t QPolynomial::evaluate_mod(std::uint64_t q, std::uint64_t modulus) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        Coeff reduced = c % static_cast<long long>(modulus);
        if (reduced < 0)
            reduced += static_cast<long long>(modulus);
        std::uint64_t term = mul_mod(reduced.convert_to<std::uint64_t>(),
                                     pow_mod(q, static_cast<std::uint64_t>(e), modulus),
                                     modulus);
        acc = (acc + term) % modulus;
    }
    return acc;
}

std::string QPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Coeff c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else if (c < 0) {
            out << " - ";
            c = -c;
        } else {
            out << " + ";
        }
        int e = it->first;
        if (e == 0)
            out << c.str();
        else {
            if (c != 1)
                out << c.str() << "*";
            out << "q";
            if (e != 1)
                out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace pposets
