#include <orbitgeo/orbitgeo.hpp>

#include <exactcore/rat.hpp>

#include <algorithm>
#include <cstdlib>

namespace orbitgeo {

namespace {

// e_i = (-1)^i c[n-i] for the ascending monic charpoly c of A
template <class T>
std::vector<T> wedge_traces(const std::vector<T>& cp) {
    std::size_t n = cp.size() - 1;
    std::vector<T> e;
    for (std::size_t i = 1; i <= n; ++i)
        e.push_back(i % 2 ? -cp[n - i] : cp[n - i]);
    return e;
}

Rat to_rational(const Ext& x, const char* where) {
    if (!x.is_rational()) throw NotRational(std::string(where) + ": not in base field");
    return x.a();
}

Vec<Rat> moment_b(const Mat<Rat>& A, const Vec<Rat>& b, const Vec<Rat>& c, int count) {
    Vec<Rat> w = b, out;
    for (int j = 0; j < count; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * w[i];
        out.push_back(s);
        if (j + 1 < count) w = localfield::mat_vec(A, w);
    }
    return out;
}

Vec<Rat> moment_b(const HermMat& A, const Vec<Ext>& b, int count) {
    Vec<Ext> w = b;
    Vec<Rat> out;
    for (int j = 0; j < count; ++j) {
        Ext s(Rat(0), b[0].epsilon());
        for (std::size_t i = 0; i < b.size(); ++i) s += b[i].conj() * w[i];
        out.push_back(to_rational(s, "invariants"));
        if (j + 1 < count) w = localfield::mat_vec(A.entries, w);
    }
    return out;
}

// Hankel matrix (b_{i+j}) from the first 2n-1 pairing values
template <class B>
Rat moment_det(const B& moments, int n) {
    Mat<Rat> h(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = moments[i + j];
    return localfield::mat_det(h);
}

} // namespace

HermJRElement HermJRElement::from(const HermMat& A, const Vec<Ext>& b, const Rat& d) {
    int n = A.rank();
    if ((int)b.size() != n)
        throw localfield::DimensionMismatch("HermJRElement: shape mismatch");
    long eps = b.empty() ? -1 : b[0].epsilon();
    Mat<Ext> full(n + 1, std::vector<Ext>(n + 1, Ext(Rat(0), eps)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) full[i][j] = A.entries[i][j];
    for (int i = 0; i < n; ++i) {
        full[i][n] = b[i];
        full[n][i] = b[i].conj();
    }
    full[n][n] = Ext(d, eps);
    HermMat::from(full); // validates the assembled matrix
    return HermJRElement{A, b, d};
}

Vec<Rat> Invariants::z_invariants() const {
    if (a.empty() || a[0] == 0)
        throw IrregularInvariants("z_invariants: vanishing trace");
    Vec<Rat> out;
    Rat pw(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        pw *= a[0];
        out.push_back(a[i] / pw);
    }
    return out;
}

nlohmann::json Invariants::to_json() const {
    nlohmann::json ja = nlohmann::json::array(), jb = nlohmann::json::array();
    for (const Rat& x : a) ja.push_back(exactcore::rat_str(x));
    for (const Rat& x : b) jb.push_back(exactcore::rat_str(x));
    return nlohmann::json{{"a", ja}, {"b", jb}, {"d", exactcore::rat_str(d)}};
}

Invariants invariants_jr(const JRElement& x) {
    int n = x.rank();
    Invariants inv;
    inv.a = wedge_traces(localfield::charpoly(x.A));
    inv.b = moment_b(x.A, x.b, x.c, n);
    inv.d = x.d;
    return inv;
}

Invariants invariants_jr(const HermJRElement& y) {
    int n = y.rank();
    Invariants inv;
    for (const Ext& e : wedge_traces(localfield::charpoly(y.A.entries)))
        inv.a.push_back(to_rational(e, "invariants"));
    inv.b = moment_b(y.A, y.b, n);
    inv.d = y.d;
    return inv;
}

bool is_regular_ss(const JRElement& x) {
    int n = x.rank();
    return moment_det(moment_b(x.A, x.b, x.c, 2 * n - 1), n) != 0;
}

bool is_regular_ss(const HermJRElement& y) {
    int n = y.rank();
    return moment_det(moment_b(y.A, y.b, 2 * n - 1), n) != 0;
}

namespace {

template <class X>
bool z_regular_impl(const X& x, const Rat& tr, const Rat& d) {
    return tr != 0 && d != 0 && is_regular_ss(x);
}

} // namespace

bool is_z_regular(const JRElement& x) {
    Rat tr(0);
    for (int i = 0; i < x.rank(); ++i) tr += x.A[i][i];
    return z_regular_impl(x, tr, x.d);
}

bool is_z_regular(const HermJRElement& y) {
    Ext tr(Rat(0), y.b.empty() ? -1 : y.b[0].epsilon());
    for (int i = 0; i < y.rank(); ++i) tr += y.A.entries[i][i];
    return z_regular_impl(y, to_rational(tr, "is_z_regular"), y.d);
}

int transfer_factor_omega(const JRElement& x, const LocalCfg& cfg) {
    int n = x.rank(), m = n + 1;
    Mat<Rat> full(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) full[i][j] = x.A[i][j];
    for (int i = 0; i < n; ++i) {
        full[i][n] = x.b[i];
        full[n][i] = x.c[i];
    }
    full[n][n] = x.d;

    Mat<Rat> frame(m, std::vector<Rat>(m, Rat(0)));
    Vec<Rat> v(m, Rat(0));
    v[n] = Rat(1);
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) frame[i][k] = v[i];
        if (k + 1 < m) v = localfield::mat_vec(full, v);
    }
    Rat det = localfield::mat_det(frame);
    if (det == 0) throw SingularFrame("transfer_factor_omega: singular frame");
    return localfield::eta(det, cfg);
}

bool match_jr(const JRElement& x, const HermJRElement& y) {
    return invariants_jr(x) == invariants_jr(y);
}

JRElement section_from_invariants(const Invariants& inv) {
    int n = inv.rank();
    if (n == 0 || (int)inv.b.size() != n)
        throw localfield::DimensionMismatch("section_from_invariants: bad shape");
    // monic charpoly coefficients from the wedge traces
    Vec<Rat> cp(n + 1, Rat(0));
    cp[n] = Rat(1);
    for (int i = 1; i <= n; ++i) cp[n - i] = i % 2 ? -inv.a[i - 1] : inv.a[i - 1];

    JRElement x;
    x.A = Mat<Rat>(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 1; i < n; ++i) x.A[i][i - 1] = Rat(1);
    for (int i = 0; i < n; ++i) x.A[i][n - 1] = -cp[i];
    x.b = Vec<Rat>(n, Rat(0));
    x.b[n - 1] = Rat(1);
    x.d = inv.d;

    // Krylov matrix K = [b | Ab | ... | A^{n-1}b]; solve c K = (b_0..b_{n-1})
    Mat<Rat> k(n, std::vector<Rat>(n, Rat(0)));
    Vec<Rat> w = x.b;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) k[i][j] = w[i];
        if (j + 1 < n) w = localfield::mat_vec(x.A, w);
    }
    Mat<Rat> kinv;
    try {
        kinv = localfield::mat_inv(k, Rat(1));
    } catch (const localfield::ZeroArgument&) {
        throw IrregularInvariants("section_from_invariants: singular Krylov matrix");
    }
    x.c = Vec<Rat>(n, Rat(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) x.c[j] += inv.b[i] * kinv[i][j];

    if (!is_regular_ss(x))
        throw IrregularInvariants("section_from_invariants: singular moment matrix");
    return x;
}

HermMat contraction_r(const RelElement& delta, int side) {
    if (side != 1 && side != 2)
        throw localfield::DimensionMismatch("contraction_r: side must be 1 or 2");
    long eps = delta.X[0][0].epsilon();
    Mat<Ext> tau = localfield::mat_mul(
        localfield::mat_inv(delta.form2.entries, Ext(Rat(1), eps)),
        localfield::mat_mul(localfield::conj_transpose(delta.X), delta.form1.entries));
    Mat<Ext> r = side == 1 ? localfield::mat_mul(delta.X, tau)
                           : localfield::mat_mul(tau, delta.X);
    return HermMat::from(r);
}

JRElement conjugate(const JRElement& x, const Mat<Rat>& h) {
    Mat<Rat> hinv = localfield::mat_inv(h, Rat(1));
    JRElement out;
    out.A = localfield::mat_mul(h, localfield::mat_mul(x.A, hinv));
    out.b = localfield::mat_vec(h, x.b);
    out.c = Vec<Rat>(x.c.size(), Rat(0));
    for (std::size_t j = 0; j < x.c.size(); ++j)
        for (std::size_t i = 0; i < x.c.size(); ++i) out.c[j] += x.c[i] * hinv[i][j];
    out.d = x.d;
    return out;
}

std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(mpq_class(rn) / mpq_class(rd));
}

namespace {

// split eigenvalues alpha > beta; throws if not split regular over the base
std::pair<Rat, Rat> split_roots(const HermMat& y) {
    if (y.rank() != 2) throw UnsupportedClassType("stable class: rank must be 2");
    auto cp = localfield::charpoly(y.entries);
    Rat det = to_rational(cp[0], "stable class"), ntr = to_rational(cp[1], "stable class");
    Rat tr = -ntr;
    auto s = rat_sqrt(tr * tr - 4 * det);
    if (!s || *s == 0)
        throw UnsupportedClassType("stable class: characteristic polynomial not split"
                                   " with distinct roots");
    return {(tr + *s) / 2, (tr - *s) / 2};
}

} // namespace

int eigenline_sign(const HermMat& y, const LocalCfg& cfg) {
    auto [alpha, beta] = split_roots(y);
    long eps = cfg.epsilon;
    Ext betaE(beta, eps);
    // an alpha-eigenvector spans the image of y - beta
    for (int j = 0; j < 2; ++j) {
        Vec<Ext> v{y.entries[0][j], y.entries[1][j]};
        v[j] -= betaE;
        if (v[0].is_zero() && v[1].is_zero()) continue;
        Rat pair = v[0].norm() + v[1].norm();
        if (pair == 0)
            throw UnsupportedClassType("stable class: isotropic eigenline");
        return localfield::eta(pair, cfg);
    }
    throw UnsupportedClassType("stable class: scalar element");
}

std::vector<std::pair<HermMat, int>> stable_class_reps(const HermMat& y,
                                                       const LocalCfg& cfg) {
    auto [alpha, beta] = split_roots(y);
    long eps = cfg.epsilon;
    int base_sign = eigenline_sign(y, cfg);
    int target = -base_sign;

    // smallest integral v with eta(<v,v>) opposite to the base class; the
    // companion line w is automatically orthogonal with the same pairing
    for (long box = 1; box <= 6; ++box)
        for (long x1 = -box; x1 <= box; ++x1)
            for (long y1 = -box; y1 <= box; ++y1)
                for (long x2 = -box; x2 <= box; ++x2)
                    for (long y2 = -box; y2 <= box; ++y2) {
                        if (std::max({std::abs(x1), std::abs(y1), std::abs(x2),
                                      std::abs(y2)}) != box)
                            continue;
                        Ext v1(Rat(x1), Rat(y1), eps), v2(Rat(x2), Rat(y2), eps);
                        Rat r = v1.norm() + v2.norm();
                        if (r == 0 || localfield::eta(r, cfg) != target) continue;
                        Vec<Ext> v{v1, v2};
                        Vec<Ext> w{-v2.conj(), v1.conj()};
                        Mat<Ext> twin(2, std::vector<Ext>(2, Ext(Rat(0), eps)));
                        for (int i = 0; i < 2; ++i)
                            for (int j = 0; j < 2; ++j)
                                twin[i][j] =
                                    (Ext(alpha, eps) * v[i] * v[j].conj() +
                                     Ext(beta, eps) * w[i] * w[j].conj()) /
                                    Ext(r, eps);
                        HermMat rep = HermMat::from(twin);
                        if (eigenline_sign(rep, cfg) != target)
                            throw UnsupportedClassType(
                                "stable class: twin construction failed");
                        return {{y, 1}, {rep, -1}};
                    }
    throw UnsupportedClassType("stable class: no twin representative found");
}

int kappa_sign(const HermMat& base, const HermMat& other, const LocalCfg& cfg,
               std::pair<int, int> datum) {
    if (datum != std::pair<int, int>{1, 1})
        throw UnsupportedClassType("kappa_sign: only the (1,1) datum is supported");
    auto rb = split_roots(base), ro = split_roots(other);
    if (rb != ro)
        throw UnsupportedClassType("kappa_sign: elements not in one stable class");
    return eigenline_sign(base, cfg) * eigenline_sign(other, cfg);
}

} // namespace orbitgeo
