#include <doctest.h>

#include <lattice/lattice.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace lattice;
using exactcore::rat;
using exactcore::rat_pow;

namespace {

Mat<Ext> of_mat(const std::vector<std::vector<Rat>>& m, long eps) {
    Mat<Ext> r;
    for (const auto& row : m) {
        std::vector<Ext> er;
        for (const Rat& x : row) er.emplace_back(x, eps);
        r.push_back(er);
    }
    return r;
}

Mat<Ext> random_basis(std::mt19937& rng, int n, long p, long eps, bool quadratic) {
    std::uniform_int_distribution<long> c(-6, 6);
    std::uniform_int_distribution<int> sh(-1, 1);
    while (true) {
        Mat<Ext> b(n, std::vector<Ext>(n, Ext(Rat(0), eps)));
        for (auto& row : b)
            for (Ext& x : row) {
                Rat s = rat_pow(Rat(p), sh(rng));
                x = Ext(Rat(c(rng)) * s, quadratic ? Rat(c(rng)) * s : Rat(0), eps);
            }
        bool singular = false;
        try {
            if (localfield::mat_det(b).is_zero()) singular = true;
        } catch (...) {
            singular = true;
        }
        if (!singular) return b;
    }
}

} // namespace

TEST_CASE("rank-1 windows") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    auto w0 = enumerate_window(Ring::OF, 1, 0, cfg);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0] == LatticeRep::standard(Ring::OF, 1, cfg));

    auto w1 = enumerate_window(Ring::OF, 1, 1, cfg);
    REQUIRE(w1.size() == 3);
    std::set<long> scales;
    for (const auto& l : w1) {
        scales.insert(-l.relative_position()[0]);
        CHECK(l.window_needed() <= 1);
    }
    CHECK(scales == std::set<long>{-1, 0, 1});

    CHECK_THROWS_AS(enumerate_window(Ring::OF, 4, 1, cfg), GuardExceeded);
    CHECK_THROWS_AS(enumerate_window(Ring::OF, 2, 5, cfg), GuardExceeded);
}

TEST_CASE("canonicalization is basis independent") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    long eps = cfg.epsilon;
    // the same lattice from two different bases
    Mat<Ext> b1 = of_mat({{Rat(3), Rat(1)}, {Rat(0), Rat(1)}}, eps);
    Mat<Ext> b2 = of_mat({{Rat(3), Rat(4)}, {Rat(0), Rat(1)}}, eps); // col1 += col0
    CHECK(LatticeRep::from_basis(Ring::OF, b1, cfg) ==
          LatticeRep::from_basis(Ring::OF, b2, cfg));

    // unit column scaling does not change the lattice
    Mat<Ext> b3 = of_mat({{Rat(6), Rat(1)}, {Rat(0), Rat(1)}}, eps); // col0 *= 2
    CHECK(LatticeRep::from_basis(Ring::OF, b1, cfg) ==
          LatticeRep::from_basis(Ring::OF, b3, cfg));

    // scale strip: p * (p^-1 lattice) is stored at minimal scale
    Mat<Ext> b4 = of_mat({{rat(1, 3), Rat(0)}, {Rat(0), rat(1, 3)}}, eps);
    LatticeRep l4 = LatticeRep::from_basis(Ring::OF, b4, cfg);
    CHECK(l4.scale() == 1);
    CHECK(l4.stored() == localfield::ext_identity(2, eps));

    Mat<Ext> singular = of_mat({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, eps);
    CHECK_THROWS_AS(LatticeRep::from_basis(Ring::OF, singular, cfg),
                    localfield::ZeroArgument);
    CHECK_THROWS_AS(
        LatticeRep::from_basis(Ring::OF, {{Ext(Rat(1), Rat(1), eps)}}, cfg),
        localfield::DimensionMismatch);
}

TEST_CASE("relative position via minors") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    long eps = cfg.epsilon;
    // HNF [[p^2, 1], [0, p]]: divisors 1 and p^3
    Mat<Ext> b = of_mat({{Rat(9), Rat(1)}, {Rat(0), Rat(3)}}, eps);
    LatticeRep l = LatticeRep::from_basis(Ring::OF, b, cfg);
    CHECK(l.relative_position() == std::vector<long>{3, 0});
    CHECK(l.index_valuation() == 3);
    CHECK(l.window_needed() == 3);

    Mat<Ext> diag = of_mat({{rat(1, 3), Rat(0)}, {Rat(0), Rat(9)}}, eps);
    LatticeRep l2 = LatticeRep::from_basis(Ring::OF, diag, cfg);
    CHECK(l2.relative_position() == std::vector<long>{2, -1});
    CHECK(l2.index_valuation() == 1);

    CHECK(LatticeRep::standard(Ring::OE, 3, cfg).relative_position() ==
          std::vector<long>{0, 0, 0});
}

TEST_CASE("index-p sublattices, with direct construction cross-check") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    long eps = cfg.epsilon;
    auto subs = enumerate_position(Ring::OF, 2, {1, 0}, cfg);
    CHECK(subs.size() == 4); // p + 1

    std::set<LatticeRep> expected;
    for (long k = 0; k < 3; ++k)
        expected.insert(LatticeRep::from_basis(
            Ring::OF, of_mat({{Rat(1), Rat(0)}, {Rat(k), Rat(3)}}, eps), cfg));
    expected.insert(LatticeRep::from_basis(
        Ring::OF, of_mat({{Rat(3), Rat(0)}, {Rat(0), Rat(1)}}, eps), cfg));
    CHECK(std::set<LatticeRep>(subs.begin(), subs.end()) == expected);
}

TEST_CASE("index-q hyperplane count (q^n - 1)/(q - 1)") {
    for (long p : {3L, 5L}) {
        LocalCfg cfg = LocalCfg::make(p, p == 3 ? -1 : 2);
        for (int n = 1; n <= 3; ++n) {
            std::vector<long> lam(n, 0);
            lam[0] = 1;
            long expected = 0;
            for (int i = 0; i < n; ++i) expected = expected * p + 1;
            CHECK((long)enumerate_position(Ring::OF, n, lam, cfg).size() == expected);
        }
    }
    // over the quadratic extension the residue field has q = p^2 elements
    LocalCfg cfg = LocalCfg::make(3, -1);
    CHECK(enumerate_position(Ring::OE, 2, {1, 0}, cfg).size() == 10); // 9 + 1
}

TEST_CASE("window enumeration partitions by position, no duplicates") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    auto win = enumerate_window(Ring::OE, 2, 1, cfg);
    std::set<LatticeRep> distinct(win.begin(), win.end());
    CHECK(distinct.size() == win.size());

    std::map<std::vector<long>, long> by_pos;
    for (const auto& l : win) {
        CHECK(l.window_needed() <= 1);
        ++by_pos[l.relative_position()];
    }
    for (const auto& [lam, count] : by_pos)
        CHECK((long)enumerate_position(Ring::OE, 2, lam, cfg).size() == count);

    // membership: each window lattice contains p^M times the standard basis
    long eps = cfg.epsilon;
    for (const auto& l : win) {
        CHECK(l.contains({Ext(Rat(3), eps), Ext(Rat(0), eps)}));
        CHECK(l.contains({Ext(Rat(0), eps), Ext(Rat(0), Rat(3), eps)}));
        CHECK_THROWS_AS(l.contains({Ext(Rat(1), eps)}), localfield::DimensionMismatch);
    }
}

TEST_CASE("dual is an involution") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    long eps = cfg.epsilon;
    HermMat I2 = HermMat::from(localfield::ext_identity(2, eps));
    Mat<Ext> d = localfield::ext_identity(2, eps);
    d[0][1] = Ext(Rat(1), Rat(2), eps);
    d[1][0] = d[0][1].conj();
    d[1][1] = Ext(Rat(6), eps);
    HermMat skew = HermMat::from(d);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        LatticeRep l = LatticeRep::from_basis(
            Ring::OE, random_basis(rng, 2, cfg.p, eps, true), cfg);
        for (const HermMat& form : {I2, skew}) {
            LatticeRep dl = dual_lattice(l, form);
            CHECK(dual_lattice(dl, form) == l);
            // duality reverses the index sign
            CHECK(dl.index_valuation() == -l.index_valuation());
        }
    }
    CHECK(dual_lattice(LatticeRep::standard(Ring::OE, 2, cfg), I2) ==
          LatticeRep::standard(Ring::OE, 2, cfg));
}

TEST_CASE("self-dual enumeration") {
    LocalCfg cfg = LocalCfg::make(3, -1);
    long eps = cfg.epsilon;

    // rank 1, unit form: only the standard lattice is self-dual
    HermMat one = HermMat::from(localfield::ext_identity(1, eps));
    auto sd1 = enumerate_selfdual(1, one, 2, cfg);
    REQUIRE(sd1.size() == 1);
    CHECK(sd1[0] == LatticeRep::standard(Ring::OE, 1, cfg));

    // rank 1, form scaled by p: no self-dual lattice exists
    HermMat pform = HermMat::from(Mat<Ext>{{Ext(Rat(3), eps)}});
    CHECK(enumerate_selfdual(1, pform, 2, cfg).empty());

    // rank 2, unit form: agrees with a direct filter of the window
    HermMat I2 = HermMat::from(localfield::ext_identity(2, eps));
    auto sd2 = enumerate_selfdual(2, I2, 1, cfg);
    long direct = 0;
    for (const auto& l : enumerate_window(Ring::OE, 2, 1, cfg))
        if (dual_lattice(l, I2) == l) ++direct;
    CHECK((long)sd2.size() == direct);
    for (const auto& l : sd2) CHECK(l.index_valuation() == 0);
    bool has_standard = false;
    for (const auto& l : sd2)
        if (l == LatticeRep::standard(Ring::OE, 2, cfg)) has_standard = true;
    CHECK(has_standard);
}
