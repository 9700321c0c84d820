#include <exactcore/poly.hpp>

namespace exactcore {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t k) {
    if (c == 0) return Poly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
    std::vector<Rat> v = a.coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& c) const {
    std::vector<Rat> v = coeffs_;
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw DivisionByZero("Poly::divmod: zero divisor");
    std::vector<Rat> rem = a.coeffs_;
    long db = b.degree();
    Rat lead = b.leading();
    std::vector<Rat> quot;
    if ((long)rem.size() - 1 >= db) quot.assign(rem.size() - db, Rat(0));
    while ((long)rem.size() - 1 >= db) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if ((long)rem.size() - 1 < db) break;
        std::size_t k = rem.size() - 1 - db;
        Rat c = rem.back() / lead;
        quot[k] = c;
        for (long i = 0; i <= db; ++i) rem[k + i] -= c * b.coeffs_[i];
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rat(1) / x.leading());
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += rat_str(coeffs_[i]);
    }
    return s;
}

} // namespace exactcore
