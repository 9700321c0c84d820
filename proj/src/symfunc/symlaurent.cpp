#include <symfunc/symlaurent.hpp>

#include <algorithm>
#include <mutex>

namespace symfunc {

bool is_dominant(const Exps& lam) {
    for (std::size_t i = 1; i < lam.size(); ++i)
        if (lam[i - 1] < lam[i]) return false;
    return true;
}

long weight(const Exps& lam) {
    long w = 0;
    for (long e : lam) w += e;
    return w;
}

std::vector<Exps> orbit_of(const Exps& lam) {
    Exps v = lam;
    std::sort(v.begin(), v.end());
    std::vector<Exps> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

void SymLaurentPoly::add_term(const Exps& lam, const RatFunc& c) {
    if ((int)lam.size() != rank_) throw BadShape("add_term: wrong length");
    if (!is_dominant(lam)) throw BadShape("add_term: key not weakly decreasing");
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
        terms_.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymLaurentPoly operator+(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    if (a.rank_ != b.rank_) throw BadShape("operator+: rank mismatch");
    SymLaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

SymLaurentPoly operator-(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    if (a.rank_ != b.rank_) throw BadShape("operator-: rank mismatch");
    SymLaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
}

SymLaurentPoly operator*(const RatFunc& c, const SymLaurentPoly& a) {
    SymLaurentPoly r(a.rank_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
}

std::map<Exps, RatFunc> SymLaurentPoly::expand_monomials() const {
    std::map<Exps, RatFunc> out;
    for (const auto& [k, c] : terms_)
        for (const Exps& e : orbit_of(k)) out.emplace(e, c);
    return out;
}

SymLaurentPoly operator*(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    if (a.rank_ != b.rank_) throw BadShape("operator*: rank mismatch");
    auto ea = a.expand_monomials();
    auto eb = b.expand_monomials();
    std::map<Exps, RatFunc> conv;
    for (const auto& [ka, ca] : ea)
        for (const auto& [kb, cb] : eb) {
            Exps k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            auto [it, fresh] = conv.emplace(k, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    SymLaurentPoly r(a.rank_);
    // the product is symmetric, so the dominant representative carries
    // the orbit coefficient
    for (const auto& [k, c] : conv)
        if (is_dominant(k) && !c.is_zero()) r.terms_.emplace(k, c);
    return r;
}

SymLaurentPoly SymLaurentPoly::shifted(long k) const {
    SymLaurentPoly r(rank_);
    for (const auto& [key, c] : terms_) {
        Exps e = key;
        for (long& x : e) x += k;
        r.terms_.emplace(e, c);
    }
    return r;
}

long SymLaurentPoly::min_exponent() const {
    long m = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.back() < m) m = k.back();
        first = false;
    }
    return m;
}

std::string SymLaurentPoly::to_string() const {
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*m[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k[i]);
        }
        s += "]";
    }
    return s.empty() ? "0" : s;
}

SymLaurentPoly monomial_sym(const Exps& lam, int rank) {
    if ((int)lam.size() != rank) throw BadShape("monomial_sym: wrong length");
    if (!is_dominant(lam)) throw BadShape("monomial_sym: not weakly decreasing");
    SymLaurentPoly r(rank);
    r.add_term(lam, RatFunc(1));
    return r;
}

namespace {

// dense-enough multivariate scratch polynomials, full exponent keys
using MPoly = std::map<Exps, RatFunc>;

void mpoly_add_term(MPoly& p, const Exps& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// multiply by (x_i + s * x_j)
MPoly mpoly_mul_linear(const MPoly& p, int i, int j, const RatFunc& s) {
    MPoly out;
    for (const auto& [k, c] : p) {
        Exps a = k;
        a[i] += 1;
        mpoly_add_term(out, a, c);
        Exps b = k;
        b[j] += 1;
        mpoly_add_term(out, b, c * s);
    }
    return out;
}

// exact division by (x_i - x_j); the quotient must be polynomial
MPoly mpoly_div_diff(MPoly p, int i, int j) {
    // order with exponent of x_i most significant
    auto less = [i](const Exps& a, const Exps& b) {
        if (a[i] != b[i]) return a[i] < b[i];
        return a < b;
    };
    MPoly q;
    while (!p.empty()) {
        auto lead = p.begin();
        for (auto it = std::next(p.begin()); it != p.end(); ++it)
            if (less(lead->first, it->first)) lead = it;
        if (lead->first[i] == 0)
            throw NotInSpan("hall_littlewood: inexact Vandermonde division");
        Exps k = lead->first;
        RatFunc c = lead->second;
        k[i] -= 1;
        mpoly_add_term(q, k, c);
        p.erase(lead);
        Exps kj = k;
        kj[j] += 1;
        mpoly_add_term(p, kj, c);
    }
    return q;
}

int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

} // namespace

SymLaurentPoly hall_littlewood(const Exps& lam, int rank, const RatFunc& t) {
    if ((int)lam.size() > rank) throw BadShape("hall_littlewood: too many parts");
    if (!is_dominant(lam)) throw BadShape("hall_littlewood: not a partition");
    for (long e : lam)
        if (e < 0) throw BadShape("hall_littlewood: negative part");

    static std::mutex cache_mutex;
    static std::map<std::tuple<Exps, int, std::string>, SymLaurentPoly> cache;
    Exps key = lam;
    key.resize(rank, 0);
    std::tuple<Exps, int, std::string> ck{key, rank, t.to_string()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(ck);
        if (it != cache.end()) return it->second;
    }

    int n = rank;
    // f = x^lam * prod_{i<j} (x_i - t x_j)
    MPoly f;
    f.emplace(key, RatFunc(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f = mpoly_mul_linear(f, i, j, -t);

    // antisymmetrize
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    MPoly anti;
    std::sort(perm.begin(), perm.end());
    do {
        int sgn = permutation_sign(perm);
        for (const auto& [k, c] : f) {
            Exps pk(n);
            for (int i = 0; i < n; ++i) pk[perm[i]] = k[i];
            mpoly_add_term(anti, pk, sgn < 0 ? -c : c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // divide by the Vandermonde determinant
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) anti = mpoly_div_diff(anti, i, j);

    SymLaurentPoly out(rank);
    for (const auto& [k, c] : anti)
        if (is_dominant(k)) out.add_term(k, c);

    auto it = out.terms().find(key);
    if (it == out.terms().end())
        throw NotInSpan("hall_littlewood: top coefficient vanished");
    RatFunc top = it->second;
    out = (RatFunc(1) / top) * out;

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(ck, out);
    return out;
}

std::map<Exps, RatFunc> expand_in_hall_littlewood(const SymLaurentPoly& p,
                                                  const RatFunc& t) {
    for (const auto& [k, c] : p.terms())
        if (k.back() < 0)
            throw NotInSpan("expand_in_hall_littlewood: negative exponent");

    SymLaurentPoly rem = p;
    std::map<Exps, RatFunc> out;
    auto bigger = [](const Exps& a, const Exps& b) {
        long wa = weight(a), wb = weight(b);
        if (wa != wb) return wa > wb;
        return a > b;
    };
    while (!rem.is_zero()) {
        const Exps* top = nullptr;
        for (const auto& [k, c] : rem.terms())
            if (!top || bigger(k, *top)) top = &k;
        Exps mu = *top;
        RatFunc c = rem.terms().at(mu);
        out[mu] = c;
        rem = rem - c * hall_littlewood(mu, p.rank(), t);
        // triangularity: mu must be gone and nothing larger introduced
        for (const auto& [k, cc] : rem.terms())
            if (!bigger(mu, k))
                throw NotInSpan("expand_in_hall_littlewood: lost triangularity");
    }
    return out;
}

} // namespace symfunc
