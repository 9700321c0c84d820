/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Rat, ascending-degree storage.
 */
#pragma once

#include <exactcore/rat.hpp>

#include <vector>

namespace exactcore {

class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (c != 0) coeffs_.push_back(c); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // x^k with k >= 0
    static Poly monomial(const Rat& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return (long)coeffs_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

    Poly scaled(const Rat& c) const;

    // quotient and remainder; throws DivisionByZero on zero divisor
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

    // monic gcd; gcd(0,0) = 0
    static Poly gcd(const Poly& a, const Poly& b);

    Rat eval(const Rat& x) const;

    // comma-separated ascending coefficient list, "0" for the zero polynomial
    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

} // namespace exactcore
