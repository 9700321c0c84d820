#include <exactcore/ratfunc.hpp>

namespace exactcore {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        den_ = den_.scaled(Rat(1) / lead);
        num_ = num_.scaled(Rat(1) / lead);
    }
}

RatFunc RatFunc::upow(long k) {
    RatFunc f;
    if (k >= 0) {
        f.num_ = Poly::monomial(Rat(1), (std::size_t)k);
        f.den_ = Poly(Rat(1));
    } else {
        f.num_ = Poly(Rat(1));
        f.den_ = Poly::monomial(Rat(1), (std::size_t)(-k));
    }
    return f;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFunc::eval(const Rat& u0) const {
    Rat d = den_.eval(u0);
    if (d == 0) throw PoleAtPoint("RatFunc::eval: pole at point");
    return num_.eval(u0) / d;
}

namespace {

// f(u) = e(u^2) + u*o(u^2); returns (e(q0), o(q0))
std::pair<Rat, Rat> parity_eval(const Poly& f, const Rat& q0) {
    Rat e(0), o(0);
    Rat qe(1), qo(1);
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 0) {
            e += c[i] * qe;
            qe *= q0;
        } else {
            o += c[i] * qo;
            qo *= q0;
        }
    }
    return {e, o};
}

} // namespace

Rat RatFunc::eval_at_q(const Rat& q0) const {
    auto [a, b] = parity_eval(num_, q0);
    auto [c, d] = parity_eval(den_, q0);
    Rat denom = c * c - q0 * d * d;
    if (denom == 0) throw PoleAtPoint("RatFunc::eval_at_q: pole at point");
    if (b * c != a * d)
        throw OddPowerResidue("RatFunc::eval_at_q: value involves sqrt(q)");
    return (a * c - q0 * b * d) / denom;
}

std::string RatFunc::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace exactcore
