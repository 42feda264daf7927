#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// Polynomials in one variable q with arbitrary-precision integer
// coefficients.  Sparse map representation; zero coefficients are never
// stored.

namespace pposets {

using Coeff = boost::multiprecision::cpp_int;

class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(int constant) { add(0, constant); }           // NOLINT(google-explicit-constructor)
    QPolynomial(const Coeff& constant) { add(0, constant); }  // NOLINT(google-explicit-constructor)

    static QPolynomial monomial(int exponent, Coeff coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Coeff coefficient(int exponent) const;
    Coeff constant_term() const { return coefficient(0); }
    const std::map<int, Coeff>& terms() const { return terms_; }

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator-() const;
    QPolynomial operator*(const QPolynomial& o) const;
    bool operator==(const QPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPolynomial& o) const { return terms_ != o.terms_; }

    Coeff evaluate(const Coeff& q) const;
    std::uint64_t evaluate_mod(std::uint64_t q, std::uint64_t modulus) const;

    // "0", "1", "q", "q^3", "2*q^2 + q", with exponents descending and
    // negative coefficients folded into " - " separators.
    std::string to_string() const;

private:
    void add(int exponent, const Coeff& c);

    std::map<int, Coeff> terms_;
};

}  // namespace pposets
