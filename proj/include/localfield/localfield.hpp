/**
 * @file localfield.hpp
 * @brief Exact model of a p-adic base field F and its unramified quadratic
 *        extension E = F(w), w^2 = epsilon.
 *
 * Field elements are exact rationals; only finitely many valuations of
 * rational expressions matter for any check in scope, so there is no
 * precision truncation anywhere.
 */
#pragma once

#include <exactcore/rat.hpp>

#include <json.hpp>
#include <vector>

namespace localfield {

using exactcore::Rat;

struct ZeroArgument : std::domain_error {
    explicit ZeroArgument(const std::string& what) : std::domain_error(what) {}
};
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct LocalCfg {
    long p;
    long epsilon;

    // validates: p odd prime, epsilon a quadratic non-residue mod p
    static LocalCfg make(long p, long epsilon);
    static LocalCfg from_json(const nlohmann::json& j);
};

// exact p-adic valuation; throws ZeroArgument at 0
long valuation(const Rat& x, long p);

bool is_integral(const Rat& x, long p);

// unramified quadratic character: (-1)^valuation
int eta(const Rat& x, const LocalCfg& cfg);

// +1 iff x is a norm from E^x; decided independently of eta by solving
// a^2 - eps*b^2 = unit(x) over the residue field
int norm_class(const Rat& x, const LocalCfg& cfg);

// element a + b*w of E; carries epsilon so arithmetic is self-contained
class Ext {
public:
    Ext(const Rat& a, const Rat& b, long epsilon) : a_(a), b_(b), eps_(epsilon) {}
    explicit Ext(const Rat& a, long epsilon) : a_(a), b_(0), eps_(epsilon) {}

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long epsilon() const { return eps_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Ext conj() const { return Ext(a_, -b_, eps_); }
    Rat norm() const { return a_ * a_ - Rat(eps_) * b_ * b_; }
    Rat trace() const { return 2 * a_; }

    friend Ext operator+(const Ext& x, const Ext& y);
    friend Ext operator-(const Ext& x, const Ext& y);
    friend Ext operator-(const Ext& x) { return Ext(-x.a_, -x.b_, x.eps_); }
    friend Ext operator*(const Ext& x, const Ext& y);
    friend Ext operator/(const Ext& x, const Ext& y);
    friend bool operator==(const Ext& x, const Ext& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Ext& x, const Ext& y) { return !(x == y); }

    Ext& operator+=(const Ext& y) { *this = *this + y; return *this; }
    Ext& operator-=(const Ext& y) { *this = *this - y; return *this; }
    Ext& operator*=(const Ext& y) { *this = *this * y; return *this; }

    std::string to_string() const;

private:
    Rat a_;
    Rat b_;
    long eps_;
};

// w has valuation 0, so v(a + b*w) = min(v(a), v(b))
long valuation(const Ext& x, long p);
bool is_integral(const Ext& x, long p);

template <class T>
using Mat = std::vector<std::vector<T>>;
template <class T>
using Vec = std::vector<T>;

// Hermitian matrix over E: entries[j][i] = conj(entries[i][j])
struct HermMat {
    Mat<Ext> entries;

    int rank() const { return (int)entries.size(); }
    static HermMat from(const Mat<Ext>& m); // validates Hermitian symmetry
};

// ---- generic dense matrix helpers (T = Rat or Ext) ----

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
    std::size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
    if (x.empty() || x[0].size() != k)
        throw DimensionMismatch("mat_mul: inner dimensions differ");
    Mat<T> r(n, std::vector<T>(m, x[0][0] - x[0][0]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) r[i][j] += x[i][l] * y[l][j];
    return r;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& x, const Vec<T>& v) {
    if (x.empty() || x[0].size() != v.size())
        throw DimensionMismatch("mat_vec: dimensions differ");
    Vec<T> r(x.size(), v[0] - v[0]);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += x[i][j] * v[j];
    return r;
}

template <class T>
T mat_det(Mat<T> m) {
    std::size_t n = m.size();
    if (n == 0) throw DimensionMismatch("mat_det: empty matrix");
    T zero = m[0][0] - m[0][0];
    bool neg = false;
    T result = zero;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == zero) ++piv;
        if (piv == n) return zero;
        if (piv != col) { std::swap(m[piv], m[col]); neg = !neg; }
        result = col == 0 ? m[0][0] : result * m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            T f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return neg ? -result : result;
}

template <class T>
Mat<T> mat_inv(Mat<T> m, const T& one) {
    std::size_t n = m.size();
    T zero = one - one;
    Mat<T> inv(n, std::vector<T>(n, zero));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == zero) ++piv;
        if (piv == n) throw ZeroArgument("mat_inv: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        T d = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] = m[col][c] / d;
            inv[col][c] = inv[col][c] / d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            T f = m[r][col];
            if (f == zero) continue;
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

// conjugate transpose over E
Mat<Ext> conj_transpose(const Mat<Ext>& m);

// ascending monic characteristic polynomial coefficients, c[n] = 1
std::vector<Rat> charpoly(const Mat<Rat>& m);
std::vector<Ext> charpoly(const Mat<Ext>& m);

// tv-conj . x . w
Ext hermitian_pair(const HermMat& x, const Vec<Ext>& v, const Vec<Ext>& w);

// tests tg-conj . x . g == x
bool unitary_membership(const Mat<Ext>& g, const HermMat& x);

Mat<Ext> ext_identity(int n, long epsilon);
Mat<Rat> rat_identity(int n);

} // namespace localfield
