/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance gate: one pass/fail line per criterion.
 *
 * Exits nonzero if any criterion fails. Every equality below is exact
 * rational or exact symbolic; there are no tolerances anywhere.
 */
#include <cli/cli.hpp>

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using exactcore::Rat;
using exactcore::RatFunc;
using heckealg::HeckeElt;
using heckealg::Side;
using localfield::LocalCfg;
using localfield::Mat;
using orbint::OrbReport;

namespace {

int failures = 0;

void line(int idx, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what << "\n";
    if (!ok) ++failures;
}

bool clean(const std::vector<OrbReport>& reps, int expected_rows) {
    if ((int)reps.size() != expected_rows) return false;
    for (const auto& r : reps)
        if (r.status != "pass") return false;
    return true;
}

int count_branch(const std::vector<OrbReport>& reps, const char* branch) {
    int c = 0;
    for (const auto& r : reps)
        if (r.params.contains("branch") && r.params["branch"] == branch) ++c;
    return c;
}

} // namespace

int main() {
    // 1. special Satake values of unit-ball sums, full symbolic grid
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (long d = 0; d <= 5; ++d) ok = ok && heckealg::verify_sft_special(n, d).ok;
        line(1, "Satake special-value identity, n <= 4, d <= 5", ok);
    }

    // 2. two-block restriction of unit-ball sums, full symbolic grid
    {
        bool ok = true;
        for (int n = 2; n <= 4; ++n)
            for (int a = 1; a < n; ++a)
                for (long d = 0; d <= 4; ++d)
                    ok = ok && heckealg::verify_xi_identity(n, a, n - a, d).ok;
        line(2, "two-block restriction identity, n <= 4, a+b=n, d <= 4", ok);
    }

    // 3. Hall-Littlewood degeneration at t = 1 to the monomial basis
    {
        bool ok = true;
        RatFunc one(1);
        for (int n = 1; n <= 3; ++n)
            for (long d = 0; d <= 4; ++d)
                for (const auto& lam : [&] {
                         std::vector<symfunc::Exps> out;
                         // partitions of d with at most n parts
                         symfunc::Exps cur(n, 0);
                         std::function<void(long, long, int)> rec = [&](long rest, long maxp,
                                                                        int i) {
                             if (rest == 0) { out.push_back(cur); return; }
                             if (i == n) return;
                             for (long v = std::min(rest, maxp); v >= 1; --v) {
                                 cur[i] = v;
                                 rec(rest - v, v, i + 1);
                                 cur[i] = 0;
                             }
                         };
                         rec(d, d, 0);
                         if (d == 0) out.push_back(cur);
                         return out;
                     }())
                    ok = ok && symfunc::hall_littlewood(lam, n, one) ==
                                   symfunc::monomial_sym(lam, n);
        line(3, "Hall-Littlewood at t=1 equals monomial basis, |lam| <= 4, n <= 3", ok);
    }

    // 4. rank-1 lattice-count fundamental lemma, both residue characteristics
    {
        bool ok = true;
        for (long p : {3L, 5L}) {
            LocalCfg cfg = LocalCfg::make(p, p == 3 ? -1 : 2);
            auto reps = orbint::verify_jr_fl(1, 48, 16, 11, 4, cfg);
            ok = ok && clean(reps, 64) && count_branch(reps, "vanishing") == 16;
        }
        line(4, "unit-element matching, n=1, 64 samples each at p=3 and p=5, "
                "16 vanishing, window 4, no boundary flags", ok);
    }

    // 5. rank-2 lattice-count fundamental lemma
    {
        LocalCfg cfg = LocalCfg::make(3, -1);
        auto reps = orbint::verify_jr_fl(2, 8, 0, 6, 2, cfg);
        line(5, "unit-element matching, n=2, 8 samples at p=3, window 2, "
                "no boundary flags", clean(reps, 8));
    }

    // 6. Hecke-operator matching through base change
    {
        LocalCfg cfg = LocalCfg::make(3, -1);
        bool ok = true;
        for (const auto& lam : std::vector<symfunc::Exps>{{0, 0}, {1, 0}, {1, 1}, {2, 0}}) {
            auto reps = orbint::verify_hecke_fl(HeckeElt::basis(Side::E, 2, lam), 8, 4,
                                                2024, cfg);
            ok = ok && clean(reps, 12) && count_branch(reps, "vanishing") == 4;
        }
        line(6, "Hecke-operator matching for the four degree <= 2 basis elements, "
                "8 samples + 4 vanishing each", ok);
    }

    // 7. signed-class comparison on the split rank-2 symmetric space
    {
        LocalCfg cfg = LocalCfg::make(3, -1);
        auto reps = orbint::verify_relative_fl(8, 4, 2024, cfg);
        bool ok = clean(reps, 12) && count_branch(reps, "vanishing") == 4;
        // one consistent calibration sign across all matched samples: the
        // reported factor is delta*cal, so nonzero rows must all satisfy
        // lhs == rhs exactly with the single sign chosen on the first sample
        line(7, "stable/signed orbital comparison, 8 matched + 4 mismatched samples, "
                "consistent calibration", ok);
    }

    // 8. contraction compatibilities of the two counting engines
    {
        LocalCfg cfg = LocalCfg::make(3, -1);
        auto reps = orbint::verify_contraction_ids(10, 7, cfg);
        line(8, "contraction pushforward identities, 10 samples each", clean(reps, 20));
    }

    // 9. property suites: sign equivariance, conjugation invariance,
    //    window stability, split-orbit transfer
    {
        LocalCfg cfg = LocalCfg::make(3, -1);
        std::mt19937 rng(17);
        std::uniform_int_distribution<long> c(-4, 4);
        bool ok = true;
        int done = 0;
        while (done < 10) {
            orbint::JRElement x;
            x.A = Mat<Rat>(1, std::vector<Rat>(1, Rat(c(rng))));
            x.b = {Rat(c(rng))};
            x.c = {Rat(c(rng))};
            x.d = Rat(c(rng));
            if (!orbitgeo::is_regular_ss(x)) continue;
            ++done;
            int w;
            try {
                w = orbitgeo::transfer_factor_omega(x, cfg);
            } catch (const orbitgeo::SingularFrame&) {
                --done;
                continue;
            }
            // sign equivariance under a determinant of odd valuation: the
            // transfer factor and the twisted count flip together, so their
            // product is a conjugation invariant
            Mat<Rat> h3{{Rat(3)}};
            orbint::JRElement x3 = orbitgeo::conjugate(x, h3);
            ok = ok && orbitgeo::transfer_factor_omega(x3, cfg) == -w;
            try {
                Rat v3 = orbint::orb_gl_eta(orbint::TestFn::gl(), x, 3, true, cfg);
                ok = ok &&
                     orbint::orb_gl_eta(orbint::TestFn::gl(), x3, 4, true, cfg) == -v3;
                // invariance under unit conjugation, and window stability
                Mat<Rat> h2{{Rat(2)}};
                Rat v4 = orbint::orb_gl_eta(orbint::TestFn::gl(), x, 4, true, cfg);
                Rat vc = orbint::orb_gl_eta(orbint::TestFn::gl(),
                                            orbitgeo::conjugate(x, h2), 3, true, cfg);
                ok = ok && v3 == v4 && v3 == vc;
            } catch (const orbint::BoundaryContribution&) {
                --done; // refused sample; draw another
            }
        }
        auto reps = orbint::verify_split_transfer(1, 8, 17, cfg);
        ok = ok && clean(reps, 17);
        line(9, "property suite: equivariance, invariance, window stability, "
                "split-orbit transfer", ok);
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
