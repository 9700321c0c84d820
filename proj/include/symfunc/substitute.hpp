/**
 * @file substitute.hpp
 * @brief Scaled-monomial substitution homomorphisms into one or two
 *        groups of target variables, with group-wise symmetry checking.
 */
#pragma once

#include <symfunc/symlaurent.hpp>

namespace symfunc {

// image of one source variable: scalar * (target variable)^power
struct VarImage {
    RatFunc scalar;
    int group;   // 0 = first target group, 1 = second
    int index;   // variable index within the group
    long power;
};

// tensor of orbit sums over two symmetric variable groups; rank_b = 0
// degenerates to a single group (second key component is empty)
class SymTensor {
public:
    SymTensor(int rank_a, int rank_b) : rank_a_(rank_a), rank_b_(rank_b) {
        if (rank_a < 1 || rank_b < 0) throw BadShape("SymTensor: bad ranks");
    }

    int rank_a() const { return rank_a_; }
    int rank_b() const { return rank_b_; }
    const std::map<std::pair<Exps, Exps>, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // adds c * (m_la (x) m_mu); both keys must be dominant of matching ranks
    void add_term(const Exps& la, const Exps& mu, const RatFunc& c);

    friend SymTensor operator+(const SymTensor& a, const SymTensor& b);
    friend SymTensor operator-(const SymTensor& a, const SymTensor& b);
    friend SymTensor operator*(const SymTensor& a, const SymTensor& b);
    friend SymTensor operator*(const RatFunc& c, const SymTensor& a);
    friend bool operator==(const SymTensor& a, const SymTensor& b) {
        return a.rank_a_ == b.rank_a_ && a.rank_b_ == b.rank_b_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymTensor& a, const SymTensor& b) { return !(a == b); }

    std::string to_string() const;

private:
    int rank_a_;
    int rank_b_;
    std::map<std::pair<Exps, Exps>, RatFunc> terms_;
};

// applies spec[i] to Z_{i+1}; the image must be invariant under the
// product of symmetric groups of the two target groups, else NotSymmetric
SymTensor substitute_scaled(const SymLaurentPoly& p, const std::vector<VarImage>& spec,
                            int rank_a, int rank_b);

} // namespace symfunc
