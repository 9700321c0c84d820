/**
 * @file lattice.hpp
 * @brief Lattices over the p-adic integers of F or E in canonical column
 *        Hermite normal form, with bounded-window enumeration, relative
 *        position (elementary divisors), duals and self-dual enumeration.
 *
 * Canonical form: an integral upper-triangular basis with p-power diagonal
 * p^{a_i}, entries right of the pivot reduced mod p^{a_i} (components in
 * [0, p^{a_i}) as integers), together with a minimal scale s so that the
 * lattice is p^{-s} times the stored integral lattice. Each lattice has
 * exactly one representative.
 */
#pragma once

#include <localfield/localfield.hpp>

namespace lattice {

using exactcore::Rat;
using localfield::Ext;
using localfield::HermMat;
using localfield::LocalCfg;
using localfield::Mat;
using localfield::Vec;

struct GuardExceeded : std::invalid_argument {
    explicit GuardExceeded(const std::string& what) : std::invalid_argument(what) {}
};

enum class Ring { OF, OE };

class LatticeRep {
public:
    // canonicalizes an arbitrary invertible basis (columns span the lattice)
    static LatticeRep from_basis(Ring ring, const Mat<Ext>& basis, const LocalCfg& cfg);
    static LatticeRep standard(Ring ring, int n, const LocalCfg& cfg);

    Ring ring() const { return ring_; }
    int rank() const { return n_; }
    long p() const { return cfg_.p; }
    const LocalCfg& cfg() const { return cfg_; }

    // actual basis (columns), p^{-scale} times the stored integral HNF
    Mat<Ext> basis() const;
    long scale() const { return scale_; }
    const Mat<Ext>& stored() const { return stored_; }

    // elementary divisor exponents relative to the standard lattice,
    // weakly decreasing
    std::vector<long> relative_position() const;

    // valuation of det(basis); the coset sign is (-1)^index_valuation
    long index_valuation() const;

    // minimal M with p^M O^n inside Lambda inside p^-M O^n
    long window_needed() const;

    bool contains(const Vec<Ext>& v) const;

    friend bool operator==(const LatticeRep& a, const LatticeRep& b) {
        return a.ring_ == b.ring_ && a.n_ == b.n_ && a.scale_ == b.scale_ &&
               a.stored_ == b.stored_;
    }
    friend bool operator!=(const LatticeRep& a, const LatticeRep& b) { return !(a == b); }
    friend bool operator<(const LatticeRep& a, const LatticeRep& b);

    std::string to_string() const;

private:
    LatticeRep(Ring ring, int n, const LocalCfg& cfg) : ring_(ring), n_(n), cfg_(cfg) {}

    Ring ring_;
    int n_;
    LocalCfg cfg_;
    long scale_ = 0;
    Mat<Ext> stored_; // integral canonical HNF of p^scale * Lambda
};

// every lattice with p^M O^n inside Lambda inside p^-M O^n, exactly once,
// in deterministic (lexicographic) order; guard n <= 3, M <= 4
std::vector<LatticeRep> enumerate_window(Ring ring, int n, long M, const LocalCfg& cfg);

// exactly the lattices with the given relative position
std::vector<LatticeRep> enumerate_position(Ring ring, int n, const std::vector<long>& lam,
                                           const LocalCfg& cfg);

// dual with respect to a nondegenerate Hermitian form
LatticeRep dual_lattice(const LatticeRep& lam, const HermMat& form);

// all self-dual lattices in the window
std::vector<LatticeRep> enumerate_selfdual(int n, const HermMat& form, long M,
                                           const LocalCfg& cfg);

} // namespace lattice
