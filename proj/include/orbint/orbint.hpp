/**
 * @file orbint.hpp
 * @brief Exact orbital-integral engines by lattice counting, spherical
 *        evaluation on the Hermitian symmetric space, and the top-level
 *        fundamental-lemma verifiers.
 *
 * All measures give maximal compacts volume 1, so every integral below is a
 * finite lattice count with exact rational bookkeeping. Window soundness is
 * certified by shell emptiness: if a contributing lattice needs the full
 * window, the engine refuses rather than returning a possibly-truncated sum.
 */
#pragma once

#include <heckealg/hecke.hpp>
#include <lattice/lattice.hpp>
#include <orbitgeo/orbitgeo.hpp>

namespace orbint {

using exactcore::Rat;
using heckealg::HeckeElt;
using lattice::LatticeRep;
using localfield::Ext;
using localfield::HermMat;
using localfield::LocalCfg;
using localfield::Mat;
using localfield::Vec;
using orbitgeo::HermJRElement;
using orbitgeo::JRElement;
using orbitgeo::RelElement;

struct BoundaryContribution : std::runtime_error {
    explicit BoundaryContribution(const std::string& what) : std::runtime_error(what) {}
};
struct NoncompactCentralizer : std::domain_error {
    explicit NoncompactCentralizer(const std::string& what) : std::domain_error(what) {}
};
struct IrregularElement : std::domain_error {
    explicit IrregularElement(const std::string& what) : std::domain_error(what) {}
};

// Ad-invariant test functions used by the engines
enum class TestKind {
    GlIndicator,    // unit ball of the full (n+1)x(n+1) matrix algebra over O_F
    HermIndicator,  // integral Hermitian elements of the augmented space
    EndIndicator,   // integral endomorphisms of the standard O_E-lattice
};

struct TestFn {
    TestKind kind;
    static TestFn gl() { return {TestKind::GlIndicator}; }
    static TestFn herm() { return {TestKind::HermIndicator}; }
    static TestFn end() { return {TestKind::EndIndicator}; }
};

struct OrbReport {
    std::string check;
    nlohmann::json params;
    Rat lhs{0};
    Rat rhs{0};
    int factor = 1;
    std::string status; // pass | fail | boundary

    nlohmann::json to_json() const;
};

bool all_pass(const std::vector<OrbReport>& reports);

// eta-twisted GL_n(F)-orbital integral of the matrix-algebra indicator at the
// block element X; cosets hK <-> O_F-lattices in the window
Rat orb_gl_eta(const TestFn& f, const JRElement& x, long window, bool eta_on,
               const LocalCfg& cfg);

// GL_1(F)-conjugation orbital of an F-side Hecke function at x in GL_2(F);
// the k-range is grown until the summand provably vanishes on both ends
Rat orb_gl_eta_group(const HeckeElt& f, const Mat<Rat>& x, bool eta_on,
                     const LocalCfg& cfg);

// unitary orbital integral as a sum over self-dual lattices
Rat orb_unitary(const TestFn& f, const HermJRElement& y, long window,
                const LocalCfg& cfg);

// (phi * 1_0)(y) for an E-side Hecke element phi and y in the symmetric space
Rat eval_spherical_conv(const HeckeElt& phi, const HermMat& y, const LocalCfg& cfg);

// #{self-dual Xi : X Xi inside the standard lattice}, the contraction
// pushforward of the endomorphism-ball indicator evaluated at X X^tau
Rat r_shriek(const RelElement& delta, long window, const LocalCfg& cfg);

// relative orbital integral by direct pair counting over (Xi_1, Xi_2)
Rat relative_orbital(const RelElement& delta, long window, const LocalCfg& cfg);

// the same integral computed from the contraction y alone via Gram matrices;
// works for rank 1 and for split regular rank 2 (compact centralizers only)
Rat relative_orbital_herm(const HermMat& y, long window, const LocalCfg& cfg);

// signed sum of relative orbitals over the two classes in the stable class
Rat kappa_orbital(const HermMat& y, long window, const LocalCfg& cfg);

// ---- fundamental-lemma verifiers; one report per sample ----

std::vector<OrbReport> verify_jr_fl(int n, int samples, int vanishing, unsigned seed,
                                    long window, const LocalCfg& cfg);

std::vector<OrbReport> verify_hecke_fl(const HeckeElt& phi, int samples, int vanishing,
                                       unsigned seed, const LocalCfg& cfg);

std::vector<OrbReport> verify_relative_fl(int samples, int mismatched, unsigned seed,
                                          const LocalCfg& cfg);

std::vector<OrbReport> verify_split_transfer(int n, int samples, unsigned seed,
                                             const LocalCfg& cfg);

// contraction identities: spherical convolution vs self-dual counting, and
// the determinant-valuation support constraint
std::vector<OrbReport> verify_contraction_ids(int samples, unsigned seed,
                                              const LocalCfg& cfg);

} // namespace orbint
