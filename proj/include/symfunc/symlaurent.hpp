/**
 * @file symlaurent.hpp
 * @brief S_n-invariant Laurent polynomials over RatFunc, stored as
 *        monomial-symmetric orbit sums keyed by dominant exponent vectors.
 */
#pragma once

#include <exactcore/ratfunc.hpp>

#include <map>
#include <vector>

namespace symfunc {

using exactcore::Rat;
using exactcore::RatFunc;

// exponent vector; dominant means weakly decreasing
using Exps = std::vector<long>;

struct BadShape : std::invalid_argument {
    explicit BadShape(const std::string& what) : std::invalid_argument(what) {}
};
struct NotSymmetric : std::domain_error {
    explicit NotSymmetric(const std::string& what) : std::domain_error(what) {}
};
struct NotInSpan : std::logic_error {
    explicit NotInSpan(const std::string& what) : std::logic_error(what) {}
};

bool is_dominant(const Exps& lam);
long weight(const Exps& lam);

// all distinct permutations of a dominant vector
std::vector<Exps> orbit_of(const Exps& lam);

class SymLaurentPoly {
public:
    explicit SymLaurentPoly(int rank) : rank_(rank) {
        if (rank < 1) throw BadShape("SymLaurentPoly: rank must be >= 1");
    }

    int rank() const { return rank_; }
    const std::map<Exps, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // adds c * m_lam; lam must be dominant of length rank
    void add_term(const Exps& lam, const RatFunc& c);

    friend SymLaurentPoly operator+(const SymLaurentPoly& a, const SymLaurentPoly& b);
    friend SymLaurentPoly operator-(const SymLaurentPoly& a, const SymLaurentPoly& b);
    friend SymLaurentPoly operator*(const SymLaurentPoly& a, const SymLaurentPoly& b);
    friend SymLaurentPoly operator*(const RatFunc& c, const SymLaurentPoly& a);
    friend bool operator==(const SymLaurentPoly& a, const SymLaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymLaurentPoly& a, const SymLaurentPoly& b) {
        return !(a == b);
    }

    // full monomial expansion (every orbit member listed)
    std::map<Exps, RatFunc> expand_monomials() const;

    // multiplied by (Z_1...Z_n)^k
    SymLaurentPoly shifted(long k) const;

    // smallest last entry over all keys (0 for the zero polynomial)
    long min_exponent() const;

    std::string to_string() const;

private:
    int rank_;
    std::map<Exps, RatFunc> terms_;
};

// orbit sum with coefficient 1 on lam
SymLaurentPoly monomial_sym(const Exps& lam, int rank);

// Hall-Littlewood polynomial P_lam(x_1..x_n; t), monic in m_lam,
// homogeneous of degree |lam|; lam must be a partition (entries >= 0)
SymLaurentPoly hall_littlewood(const Exps& lam, int rank, const RatFunc& t);

// coefficients c_mu with p = sum c_mu P_mu(.;t); requires polynomial keys
std::map<Exps, RatFunc> expand_in_hall_littlewood(const SymLaurentPoly& p,
                                                  const RatFunc& t);

} // namespace symfunc
