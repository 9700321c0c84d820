#include <localfield/localfield.hpp>

namespace localfield {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(long x, long p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}

bool is_residue(long x, long p) {
    long r = mod_pos(x, p);
    for (long a = 0; a < p; ++a)
        if (a * a % p == r) return true;
    return false;
}

} // namespace

LocalCfg LocalCfg::make(long p, long epsilon) {
    if (p == 2) throw ConfigError("LocalCfg: p = 2 is not supported");
    if (!is_prime(p)) throw ConfigError("LocalCfg: p must be an odd prime");
    if (mod_pos(epsilon, p) == 0 || is_residue(epsilon, p))
        throw ConfigError("LocalCfg: epsilon must be a non-residue mod p");
    return LocalCfg{p, epsilon};
}

LocalCfg LocalCfg::from_json(const nlohmann::json& j) {
    if (!j.contains("p") || !j.contains("epsilon"))
        throw ConfigError("LocalCfg: config needs fields p and epsilon");
    return make(j.at("p").get<long>(), j.at("epsilon").get<long>());
}

long valuation(const Rat& x, long p) {
    if (x == 0) throw ZeroArgument("valuation: zero argument");
    long v = 0;
    mpz_class num = x.get_num(), den = x.get_den(), q, r;
    mpz_class P(p);
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t());
        if (r != 0) break;
        num = q;
        ++v;
    }
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
        if (r != 0) break;
        den = q;
        --v;
    }
    return v;
}

bool is_integral(const Rat& x, long p) { return x == 0 || valuation(x, p) >= 0; }

int eta(const Rat& x, const LocalCfg& cfg) {
    return valuation(x, cfg.p) % 2 ? -1 : 1;
}

int norm_class(const Rat& x, const LocalCfg& cfg) {
    long v = valuation(x, cfg.p);
    if (v % 2) return -1;
    // unit part mod p
    Rat unit = x / exactcore::rat_pow(Rat(cfg.p), v);
    mpz_class num = unit.get_num(), den = unit.get_den(), P(cfg.p);
    mpz_class ni = num % P, di = den % P, dinv;
    if (ni < 0) ni += P;
    if (di < 0) di += P;
    if (mpz_invert(dinv.get_mpz_t(), di.get_mpz_t(), P.get_mpz_t()) == 0)
        throw ZeroArgument("norm_class: internal unit reduction failed");
    long target = mpz_class(ni * dinv % P).get_si();
    // residue-field norm equation a^2 - eps b^2 = target; Hensel lifts for odd p
    long eps = ((cfg.epsilon % cfg.p) + cfg.p) % cfg.p;
    for (long a = 0; a < cfg.p; ++a)
        for (long b = 0; b < cfg.p; ++b)
            if (((a * a - eps * b * b) % cfg.p + cfg.p) % cfg.p == target) return 1;
    return -1;
}

Ext operator+(const Ext& x, const Ext& y) {
    return Ext(x.a_ + y.a_, x.b_ + y.b_, x.eps_);
}

Ext operator-(const Ext& x, const Ext& y) {
    return Ext(x.a_ - y.a_, x.b_ - y.b_, x.eps_);
}

Ext operator*(const Ext& x, const Ext& y) {
    return Ext(x.a_ * y.a_ + Rat(x.eps_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_,
               x.eps_);
}

Ext operator/(const Ext& x, const Ext& y) {
    Rat n = y.norm();
    if (n == 0) throw ZeroArgument("Ext: division by zero");
    Ext z = x * y.conj();
    return Ext(z.a_ / n, z.b_ / n, x.eps_);
}

std::string Ext::to_string() const {
    return exactcore::rat_str(a_) + "+" + exactcore::rat_str(b_) + "w";
}

long valuation(const Ext& x, long p) {
    if (x.is_zero()) throw ZeroArgument("valuation: zero argument");
    if (x.a() == 0) return valuation(x.b(), p);
    if (x.b() == 0) return valuation(x.a(), p);
    return std::min(valuation(x.a(), p), valuation(x.b(), p));
}

bool is_integral(const Ext& x, long p) {
    return is_integral(x.a(), p) && is_integral(x.b(), p);
}

HermMat HermMat::from(const Mat<Ext>& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("HermMat: not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m[j][i] != m[i][j].conj())
                throw DimensionMismatch("HermMat: not Hermitian");
    return HermMat{m};
}

Mat<Ext> conj_transpose(const Mat<Ext>& m) {
    std::size_t n = m.size(), k = m.empty() ? 0 : m[0].size();
    Mat<Ext> r(k, std::vector<Ext>(n, Ext(Rat(0), 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) r[j][i] = m[i][j].conj();
    return r;
}

namespace {

// Faddeev-LeVerrier; T is a commutative Q-algebra
template <class T>
std::vector<T> charpoly_impl(const Mat<T>& a, const T& one) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("charpoly: not square");
    T zero = one - one;
    std::vector<T> c(n + 1, zero);
    c[n] = one;
    Mat<T> m(n, std::vector<T>(n, zero));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
    for (std::size_t k = 1; k <= n; ++k) {
        m = mat_mul(a, m);
        T tr = zero;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        T kk = zero;
        for (std::size_t i = 0; i < k; ++i) kk += one;
        T ck = -(tr / kk);
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m[i][i] += ck;
    }
    return c;
}

} // namespace

std::vector<Rat> charpoly(const Mat<Rat>& m) { return charpoly_impl(m, Rat(1)); }

std::vector<Ext> charpoly(const Mat<Ext>& m) {
    if (m.empty()) throw DimensionMismatch("charpoly: empty matrix");
    return charpoly_impl(m, Ext(Rat(1), m[0][0].epsilon()));
}

Ext hermitian_pair(const HermMat& x, const Vec<Ext>& v, const Vec<Ext>& w) {
    std::size_t n = x.entries.size();
    if (v.size() != n || w.size() != n)
        throw DimensionMismatch("hermitian_pair: dimension mismatch");
    Ext acc(Rat(0), v[0].epsilon());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += v[i].conj() * x.entries[i][j] * w[j];
    return acc;
}

bool unitary_membership(const Mat<Ext>& g, const HermMat& x) {
    if (g.size() != x.entries.size())
        throw DimensionMismatch("unitary_membership: dimension mismatch");
    return mat_mul(conj_transpose(g), mat_mul(x.entries, g)) == x.entries;
}

Mat<Ext> ext_identity(int n, long epsilon) {
    Mat<Ext> m(n, std::vector<Ext>(n, Ext(Rat(0), epsilon)));
    for (int i = 0; i < n; ++i) m[i][i] = Ext(Rat(1), epsilon);
    return m;
}

Mat<Rat> rat_identity(int n) {
    Mat<Rat> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

} // namespace localfield
