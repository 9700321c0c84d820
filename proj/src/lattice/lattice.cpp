#include <lattice/lattice.hpp>

#include <algorithm>

namespace lattice {

namespace {

constexpr long kInfVal = 1L << 40;

Ext ext_zero(const LocalCfg& cfg) { return Ext(Rat(0), cfg.epsilon); }
Ext ext_one(const LocalCfg& cfg) { return Ext(Rat(1), cfg.epsilon); }

long val_or_inf(const Ext& x, long p) {
    return x.is_zero() ? kInfVal : localfield::valuation(x, p);
}

Rat p_power(long p, long e) { return exactcore::rat_pow(Rat(p), e); }

// canonical integer representative of a p-integral rational mod p^a
Rat mod_reduce(const Rat& x, long p, long a) {
    if (a <= 0) return Rat(0);
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), mpz_class(p).get_mpz_t(), (unsigned long)a);
    mpz_class num = x.get_num() % m, den = x.get_den() % m, dinv;
    if (num < 0) num += m;
    if (den < 0) den += m;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw localfield::ZeroArgument("mod_reduce: non-integral entry");
    return Rat(num * dinv % m);
}

Ext mod_reduce(const Ext& x, long p, long a) {
    return Ext(mod_reduce(x.a(), p, a), mod_reduce(x.b(), p, a), x.epsilon());
}

} // namespace

LatticeRep LatticeRep::from_basis(Ring ring, const Mat<Ext>& basis, const LocalCfg& cfg) {
    int n = (int)basis.size();
    if (n == 0) throw localfield::DimensionMismatch("from_basis: empty basis");
    for (const auto& row : basis)
        if ((int)row.size() != n)
            throw localfield::DimensionMismatch("from_basis: not square");
    if (ring == Ring::OF)
        for (const auto& row : basis)
            for (const Ext& x : row)
                if (x.b() != 0)
                    throw localfield::DimensionMismatch(
                        "from_basis: base-ring lattice with extension entries");

    long p = cfg.p;
    // scale into the integers
    long m = 0;
    for (const auto& row : basis)
        for (const Ext& x : row)
            if (!x.is_zero()) m = std::max(m, -localfield::valuation(x, p));
    Mat<Ext> c = basis;
    Rat pm = p_power(p, m);
    Ext scale_elt(pm, cfg.epsilon);
    for (auto& row : c)
        for (Ext& x : row) x = x * scale_elt;

    // column Hermite normal form over the local ring
    for (int i = n - 1; i >= 0; --i) {
        int piv = -1;
        long best = kInfVal;
        for (int j = 0; j <= i; ++j) {
            long v = val_or_inf(c[i][j], p);
            if (v < best) { best = v; piv = j; }
        }
        if (piv < 0 || best >= kInfVal)
            throw localfield::ZeroArgument("from_basis: singular basis");
        for (int r = 0; r < n; ++r) std::swap(c[r][piv], c[r][i]);
        Ext unit = Ext(p_power(p, best), cfg.epsilon) / c[i][i];
        for (int r = 0; r < n; ++r) c[r][i] = c[r][i] * unit;
        for (int j = 0; j < i; ++j) {
            Ext f = c[i][j] / c[i][i];
            for (int r = 0; r < n; ++r) c[r][j] = c[r][j] - f * c[r][i];
        }
        for (int j = i + 1; j < n; ++j) {
            Ext rep = mod_reduce(c[i][j], p, best);
            Ext f = (c[i][j] - rep) / c[i][i];
            for (int r = 0; r < n; ++r) c[r][j] = c[r][j] - f * c[r][i];
        }
    }

    // minimal scale: strip common p factors
    auto all_divisible = [&]() {
        for (const auto& row : c)
            for (const Ext& x : row)
                if (!x.is_zero() && localfield::valuation(x, p) < 1) return false;
        return true;
    };
    Ext pinv(Rat(1) / Rat(p), cfg.epsilon);
    while (m > -kInfVal && all_divisible()) {
        for (auto& row : c)
            for (Ext& x : row) x = x * pinv;
        --m;
    }

    LatticeRep out(ring, n, cfg);
    out.scale_ = m;
    out.stored_ = c;
    return out;
}

LatticeRep LatticeRep::standard(Ring ring, int n, const LocalCfg& cfg) {
    return from_basis(ring, localfield::ext_identity(n, cfg.epsilon), cfg);
}

Mat<Ext> LatticeRep::basis() const {
    Mat<Ext> b = stored_;
    Ext f(p_power(cfg_.p, -scale_), cfg_.epsilon);
    for (auto& row : b)
        for (Ext& x : row) x = x * f;
    return b;
}

std::vector<long> LatticeRep::relative_position() const {
    Mat<Ext> b = basis();
    int n = n_;
    std::vector<long> mins(n + 1, 0);
    // valuation gcd of k x k minors
    for (int k = 1; k <= n; ++k) {
        long best = kInfVal;
        std::vector<int> rows(k), cols(k);
        for (int i = 0; i < k; ++i) rows[i] = i;
        auto next_comb = [n, k](std::vector<int>& comb) {
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) return false;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        };
        do {
            for (int i = 0; i < k; ++i) cols[i] = i;
            do {
                Mat<Ext> minor(k, std::vector<Ext>(k, ext_zero(cfg_)));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) minor[i][j] = b[rows[i]][cols[j]];
                Ext d = localfield::mat_det(minor);
                best = std::min(best, val_or_inf(d, cfg_.p));
            } while (next_comb(cols));
        } while (next_comb(rows));
        mins[k] = best;
    }
    std::vector<long> exps(n);
    for (int k = 1; k <= n; ++k) exps[k - 1] = mins[k] - mins[k - 1];
    // minor valuations give divisors in weakly increasing order
    std::reverse(exps.begin(), exps.end());
    return exps;
}

long LatticeRep::index_valuation() const {
    long s = 0;
    for (int i = 0; i < n_; ++i) s += localfield::valuation(stored_[i][i], cfg_.p);
    return s - (long)n_ * scale_;
}

long LatticeRep::window_needed() const {
    std::vector<long> lam = relative_position();
    return std::max({lam.front(), -lam.back(), 0L});
}

bool LatticeRep::contains(const Vec<Ext>& v) const {
    if ((int)v.size() != n_) throw localfield::DimensionMismatch("contains: bad vector");
    Mat<Ext> inv = localfield::mat_inv(basis(), ext_one(cfg_));
    Vec<Ext> x = localfield::mat_vec(inv, v);
    for (const Ext& c : x)
        if (!localfield::is_integral(c, cfg_.p)) return false;
    return true;
}

bool operator<(const LatticeRep& a, const LatticeRep& b) {
    if (a.scale_ != b.scale_) return a.scale_ < b.scale_;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            const Ext& x = a.stored_[i][j];
            const Ext& y = b.stored_[i][j];
            if (x.a() != y.a()) return x.a() < y.a();
            if (x.b() != y.b()) return x.b() < y.b();
        }
    return false;
}

std::string LatticeRep::to_string() const {
    std::string s = "p^-" + std::to_string(scale_) + " * [";
    for (int i = 0; i < n_; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += stored_[i][j].to_string();
        }
    }
    return s + "]";
}

std::vector<LatticeRep> enumerate_window(Ring ring, int n, long M, const LocalCfg& cfg) {
    if (n < 1 || n > 3 || M < 0 || M > 4)
        throw GuardExceeded("enumerate_window: guard n <= 3, M <= 4");
    long p = cfg.p;
    long D = 2 * M;
    Rat pD = p_power(p, D);

    std::vector<LatticeRep> out;
    std::vector<long> diag(n, 0);
    auto next_diag = [&]() {
        for (int i = n - 1; i >= 0; --i) {
            if (diag[i] < D) { ++diag[i]; for (int j = i + 1; j < n; ++j) diag[j] = 0; return true; }
        }
        return false;
    };

    do {
        // digit positions (i, j), i < j, range over residues mod p^{diag[i]}
        std::vector<std::pair<int, int>> pos;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
        long ncomp = ring == Ring::OE ? 2 : 1;
        std::vector<std::vector<long>> digits(pos.size(), std::vector<long>(ncomp, 0));
        auto digit_bound = [&](std::size_t k) {
            mpz_class b;
            mpz_pow_ui(b.get_mpz_t(), mpz_class(p).get_mpz_t(),
                       (unsigned long)diag[pos[k].first]);
            return b.get_si();
        };
        auto next_digits = [&]() {
            for (long k = (long)pos.size() - 1; k >= 0; --k) {
                long bound = digit_bound((std::size_t)k);
                for (long c = ncomp - 1; c >= 0; --c) {
                    if (digits[k][c] + 1 < bound) {
                        ++digits[k][c];
                        for (long c2 = c + 1; c2 < ncomp; ++c2) digits[k][c2] = 0;
                        for (std::size_t k2 = k + 1; k2 < pos.size(); ++k2)
                            digits[k2].assign(ncomp, 0);
                        return true;
                    }
                    digits[k][c] = 0;
                }
            }
            return false;
        };

        bool more = true;
        while (more) {
            Mat<Ext> c(n, std::vector<Ext>(n, ext_zero(cfg)));
            for (int i = 0; i < n; ++i) c[i][i] = Ext(p_power(p, diag[i]), cfg.epsilon);
            for (std::size_t k = 0; k < pos.size(); ++k)
                c[pos[k].first][pos[k].second] =
                    Ext(Rat(digits[k][0]), ncomp == 2 ? Rat(digits[k][1]) : Rat(0),
                        cfg.epsilon);
            // containment p^D O^n in the integral lattice
            Mat<Ext> inv = localfield::mat_inv(c, ext_one(cfg));
            bool ok = true;
            for (const auto& row : inv)
                for (const Ext& x : row)
                    if (!localfield::is_integral(Ext(x.a() * pD, x.b() * pD, cfg.epsilon),
                                                 p)) {
                        ok = false;
                        break;
                    }
            if (ok) {
                Mat<Ext> shifted = c;
                Ext f(p_power(p, -M), cfg.epsilon);
                for (auto& row : shifted)
                    for (Ext& x : row) x = x * f;
                out.push_back(LatticeRep::from_basis(ring, shifted, cfg));
            }
            more = next_digits();
        }
    } while (next_diag());
    return out;
}

std::vector<LatticeRep> enumerate_position(Ring ring, int n, const std::vector<long>& lam,
                                           const LocalCfg& cfg) {
    if ((int)lam.size() != n)
        throw localfield::DimensionMismatch("enumerate_position: bad length");
    long M = std::max({lam.front(), -lam.back(), 0L});
    long spread = 0;
    for (long e : lam) spread += std::abs(e);
    if (spread > 8) throw GuardExceeded("enumerate_position: position too large");
    std::vector<LatticeRep> out;
    for (LatticeRep& l : enumerate_window(ring, n, M, cfg))
        if (l.relative_position() == lam) out.push_back(std::move(l));
    return out;
}

LatticeRep dual_lattice(const LatticeRep& lam, const HermMat& form) {
    Mat<Ext> hb = localfield::mat_mul(form.entries, lam.basis());
    // transpose
    int n = lam.rank();
    Mat<Ext> t(n, std::vector<Ext>(n, Ext(Rat(0), lam.cfg().epsilon)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = hb[j][i];
    Mat<Ext> inv = localfield::mat_inv(t, Ext(Rat(1), lam.cfg().epsilon));
    for (auto& row : inv)
        for (Ext& x : row) x = x.conj();
    return LatticeRep::from_basis(lam.ring(), inv, lam.cfg());
}

std::vector<LatticeRep> enumerate_selfdual(int n, const HermMat& form, long M,
                                           const LocalCfg& cfg) {
    std::vector<LatticeRep> out;
    for (LatticeRep& l : enumerate_window(Ring::OE, n, M, cfg))
        if (dual_lattice(l, form) == l) out.push_back(std::move(l));
    return out;
}

} // namespace lattice
