/**
 * @file orbitgeo.hpp
 * @brief Orbit invariants, regularity tests, transfer factors, matching
 *        predicates, contraction maps, and the rank-2 stable-class data with
 *        its sign character.
 */
#pragma once

#include <localfield/localfield.hpp>

#include <json.hpp>
#include <optional>

namespace orbitgeo {

using exactcore::Rat;
using localfield::Ext;
using localfield::HermMat;
using localfield::LocalCfg;
using localfield::Mat;
using localfield::Vec;

struct NotRational : std::domain_error {
    explicit NotRational(const std::string& what) : std::domain_error(what) {}
};
struct SingularFrame : std::domain_error {
    explicit SingularFrame(const std::string& what) : std::domain_error(what) {}
};
struct IrregularInvariants : std::domain_error {
    explicit IrregularInvariants(const std::string& what) : std::domain_error(what) {}
};
struct UnsupportedClassType : std::invalid_argument {
    explicit UnsupportedClassType(const std::string& what)
        : std::invalid_argument(what) {}
};

// block form of an (n+1)x(n+1) matrix over the base field
struct JRElement {
    Mat<Rat> A;  // n x n
    Vec<Rat> b;  // column
    Vec<Rat> c;  // row
    Rat d;

    int rank() const { return (int)A.size(); }
};

// Hermitian element with last row the pairing against b
struct HermJRElement {
    HermMat A;   // rank n
    Vec<Ext> b;  // column; last row of the full matrix is b-conj-transpose
    Rat d;

    int rank() const { return A.rank(); }
    // validates Hermitian symmetry of the assembled (n+1)x(n+1) matrix
    static HermJRElement from(const HermMat& A, const Vec<Ext>& b, const Rat& d);
};

// invariant vector (a_1..a_n, b_0..b_{n-1}, d)
struct Invariants {
    Vec<Rat> a;
    Vec<Rat> b;
    Rat d;

    int rank() const { return (int)a.size(); }
    // center-insensitive invariants a_i / a_1^i; requires a_1 != 0
    Vec<Rat> z_invariants() const;
    nlohmann::json to_json() const;

    friend bool operator==(const Invariants& x, const Invariants& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

// off-diagonal piece of the symmetric pair, with the two Hermitian forms
struct RelElement {
    Mat<Ext> X;
    HermMat form1;
    HermMat form2;

    int rank() const { return (int)X.size(); }
};

Invariants invariants_jr(const JRElement& x);
Invariants invariants_jr(const HermJRElement& y);

bool is_regular_ss(const JRElement& x);
bool is_regular_ss(const HermJRElement& y);

bool is_z_regular(const JRElement& x);
bool is_z_regular(const HermJRElement& y);

// eta of det[e_{n+1} | X e_{n+1} | ... | X^n e_{n+1}]
int transfer_factor_omega(const JRElement& x, const LocalCfg& cfg);

bool match_jr(const JRElement& x, const HermJRElement& y);

// explicit section of the invariant map: companion A, b = e_n, c solved
JRElement section_from_invariants(const Invariants& inv);

// X X^tau (side 1) or X^tau X (side 2), X^tau = form2^-1 X-conj-t form1
HermMat contraction_r(const RelElement& delta, int side);

// conjugation by diag(h, 1)
JRElement conjugate(const JRElement& x, const Mat<Rat>& h);

// the two rational classes in the stable class of a split regular rank-2
// Hermitian element, labeled by the eigenline sign; the input carries +1
std::vector<std::pair<HermMat, int>> stable_class_reps(const HermMat& y,
                                                       const LocalCfg& cfg);

// character value on the class of `other` relative to `base`
int kappa_sign(const HermMat& base, const HermMat& other, const LocalCfg& cfg,
               std::pair<int, int> datum = {1, 1});

// eta-class of the alpha-eigenline pairing; alpha is the larger root
int eigenline_sign(const HermMat& y, const LocalCfg& cfg);

// exact rational square root; nullopt if not a square
std::optional<Rat> rat_sqrt(const Rat& x);

} // namespace orbitgeo
