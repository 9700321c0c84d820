/**
 * @file ratfunc.hpp
 * @brief Rational functions in the formal indeterminate u, with q := u^2.
 *
 * Canonical form: gcd(num, den) = 1 and den monic. Half-integer powers
 * of q are polynomial in u; negative powers live in the denominator.
 */
#pragma once

#include <exactcore/poly.hpp>

namespace exactcore {

struct PoleAtPoint : std::domain_error {
    explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

// raised when a value is requested at u = sqrt(q0) but the function is
// not a rational function of u^2
struct OddPowerResidue : std::domain_error {
    explicit OddPowerResidue(const std::string& what) : std::domain_error(what) {}
};

class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFunc(const Poly& num, const Poly& den);

    // u^k for any integer k
    static RatFunc upow(long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(Rat(1)) && den_ == Poly(Rat(1)); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
    RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

    Rat eval(const Rat& u0) const;

    // value at u = sqrt(q0): requires num and den to have a common parity
    // so that the value is rational; throws OddPowerResidue otherwise
    Rat eval_at_q(const Rat& q0) const;

    // "(num coeffs)/(den coeffs)", ascending degree
    std::string to_string() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

} // namespace exactcore
