#include "chromapoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chromapoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int power, BigInt coefficient) {
    if (power < 0) throw std::invalid_argument("negative power");
    IntPolynomial p;
    if (coefficient == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, 0);
    p.coeffs_.back() = std::move(coefficient);
    return p;
}

const BigInt& IntPolynomial::coeff(int power) const {
    static const BigInt zero = 0;
    if (power < 0 || power > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(power)];
}

BigInt IntPolynomial::operator()(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Rational IntPolynomial::operator()(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    p.trim();
    return p;
}

IntPolynomial operator*(const BigInt& c, IntPolynomial p) {
    for (BigInt& x : p.coeffs_) x *= c;
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial p = *this;
    for (BigInt& x : p.coeffs_) x = -x;
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_text(const std::string& variable) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) out << mag.str();
        if (k > 0) {
            if (mag != 1) out << " ";
            out << variable;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace chromapoly
