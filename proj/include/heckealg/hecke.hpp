/**
 * @file hecke.hpp
 * @brief Spherical Hecke algebra elements for GL_n over the base field and
 *        its unramified quadratic extension, plus the Satake transform,
 *        base change and the two-block restriction morphism.
 *
 * Coefficients live in the u-ring with q = u^2; the extension side has
 * residue cardinality q^2 = u^4. Basis elements 1_lam are indexed by
 * weakly decreasing integer vectors (negative entries = det twists).
 */
#pragma once

#include <symfunc/substitute.hpp>

#include <json.hpp>

namespace heckealg {

using exactcore::Rat;
using exactcore::RatFunc;
using symfunc::Exps;
using symfunc::SymLaurentPoly;
using symfunc::SymTensor;

enum class Side { F, E };

struct SideMismatch : std::invalid_argument {
    explicit SideMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// sum_i lam_i * (n + 1 - 2i), i starting at 1
long rho_pairing(const Exps& lam);

class HeckeElt {
public:
    HeckeElt(Side side, int rank) : side_(side), rank_(rank) {
        if (rank < 1) throw symfunc::BadShape("HeckeElt: rank must be >= 1");
    }

    static HeckeElt unit(Side side, int rank);
    static HeckeElt basis(Side side, int rank, const Exps& lam);

    Side side() const { return side_; }
    int rank() const { return rank_; }
    const std::map<Exps, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& lam, const RatFunc& c);

    friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b);
    friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b);
    friend HeckeElt operator*(const RatFunc& c, const HeckeElt& a);
    friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
        return a.side_ == b.side_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

    nlohmann::json to_json() const;

private:
    Side side_;
    int rank_;
    std::map<Exps, RatFunc> terms_;
};

// finite sum of 1_alpha (x) 1_beta over a fixed side and pair of ranks
class HeckeTensor {
public:
    HeckeTensor(Side side, int rank_a, int rank_b)
        : side_(side), rank_a_(rank_a), rank_b_(rank_b) {}

    Side side() const { return side_; }
    int rank_a() const { return rank_a_; }
    int rank_b() const { return rank_b_; }
    const std::map<std::pair<Exps, Exps>, RatFunc>& terms() const { return terms_; }

    void add_term(const Exps& la, const Exps& mu, const RatFunc& c);

    friend HeckeTensor operator+(const HeckeTensor& a, const HeckeTensor& b);
    friend HeckeTensor operator-(const HeckeTensor& a, const HeckeTensor& b);
    friend bool operator==(const HeckeTensor& a, const HeckeTensor& b) {
        return a.side_ == b.side_ && a.rank_a_ == b.rank_a_ &&
               a.rank_b_ == b.rank_b_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeTensor& a, const HeckeTensor& b) {
        return !(a == b);
    }

    nlohmann::json to_json() const;

private:
    Side side_;
    int rank_a_;
    int rank_b_;
    std::map<std::pair<Exps, Exps>, RatFunc> terms_;
};

SymLaurentPoly satake(const HeckeElt& h);
HeckeElt satake_inv(const SymLaurentPoly& p, Side side, int rank);

HeckeElt convolve(const HeckeElt& a, const HeckeElt& b);
HeckeTensor convolve(const HeckeTensor& a, const HeckeTensor& b);

// extension side rank n -> base side rank n (Satake parameters square)
HeckeElt bc_morphism(const HeckeElt& h);

// restriction morphism to the block pair (a, b), a + b = rank
HeckeTensor xi_ab(const HeckeElt& h, int a, int b);

// sum of 1_lam over partitions of d with at most n parts (extension side)
HeckeElt unit_ball_sum(long d, int n);

struct VerifyReport {
    bool ok;
    std::string lhs;
    std::string rhs;
};

VerifyReport verify_sft_special(int n, long d);
VerifyReport verify_xi_identity(int n, int a, int b, long d);

} // namespace heckealg
