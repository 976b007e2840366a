#pragma once

#include <string>
#include <vector>

#include "chromapoly/base.hpp"

namespace chromapoly {

// Polynomial in q with exact integer coefficients, stored ascending by power
// and kept free of trailing zeros (so degree is the vector size minus one).
class IntPolynomial {
  public:
    IntPolynomial() = default;  // the zero polynomial
    explicit IntPolynomial(std::vector<BigInt> ascending_coefficients);

    static IntPolynomial monomial(int power, BigInt coefficient = 1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int power) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt operator()(const BigInt& q) const;
    Rational operator()(const Rational& q) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& c, IntPolynomial p);
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // "q^3 - 3 q^2 + 2 q" style; "0" for the zero polynomial.
    std::string to_text(const std::string& variable = "q") const;

  private:
    void trim();

    std::vector<BigInt> coeffs_;
};

}  // namespace chromapoly
