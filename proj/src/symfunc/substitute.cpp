#include <symfunc/substitute.hpp>

#include <algorithm>

namespace symfunc {

namespace {

RatFunc rf_pow(const RatFunc& f, long e) {
    if (e == 0) return RatFunc(1);
    if (f.is_zero()) throw NotSymmetric("substitute_scaled: zero scalar image");
    RatFunc base = e < 0 ? RatFunc(1) / f : f;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    RatFunc acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

} // namespace

void SymTensor::add_term(const Exps& la, const Exps& mu, const RatFunc& c) {
    if ((int)la.size() != rank_a_ || (int)mu.size() != rank_b_)
        throw BadShape("SymTensor::add_term: wrong key lengths");
    if (!is_dominant(la) || !is_dominant(mu))
        throw BadShape("SymTensor::add_term: key not weakly decreasing");
    if (c.is_zero()) return;
    std::pair<Exps, Exps> key{la, mu};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymTensor operator+(const SymTensor& a, const SymTensor& b) {
    if (a.rank_a_ != b.rank_a_ || a.rank_b_ != b.rank_b_)
        throw BadShape("SymTensor operator+: rank mismatch");
    SymTensor r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

SymTensor operator-(const SymTensor& a, const SymTensor& b) {
    if (a.rank_a_ != b.rank_a_ || a.rank_b_ != b.rank_b_)
        throw BadShape("SymTensor operator-: rank mismatch");
    SymTensor r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

SymTensor operator*(const RatFunc& c, const SymTensor& a) {
    SymTensor r(a.rank_a_, a.rank_b_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
}

SymTensor operator*(const SymTensor& a, const SymTensor& b) {
    if (a.rank_a_ != b.rank_a_ || a.rank_b_ != b.rank_b_)
        throw BadShape("SymTensor operator*: rank mismatch");
    std::map<std::pair<Exps, Exps>, RatFunc> ea, eb, conv;
    for (const auto& [k, c] : a.terms_)
        for (const Exps& x : orbit_of(k.first))
            for (const Exps& y : orbit_of(k.second)) ea.emplace(std::make_pair(x, y), c);
    for (const auto& [k, c] : b.terms_)
        for (const Exps& x : orbit_of(k.first))
            for (const Exps& y : orbit_of(k.second)) eb.emplace(std::make_pair(x, y), c);
    for (const auto& [ka, ca] : ea)
        for (const auto& [kb, cb] : eb) {
            Exps x(ka.first.size()), y(ka.second.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = ka.first[i] + kb.first[i];
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = ka.second[i] + kb.second[i];
            auto [it, fresh] = conv.emplace(std::make_pair(x, y), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    SymTensor r(a.rank_a_, a.rank_b_);
    for (const auto& [k, c] : conv)
        if (is_dominant(k.first) && is_dominant(k.second) && !c.is_zero())
            r.terms_.emplace(k, c);
    return r;
}

std::string SymTensor::to_string() const {
    auto vec = [](const Exps& k) {
        std::string s = "[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(k[i]);
        }
        return s + "]";
    };
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*m" + vec(k.first) + "(x)m" + vec(k.second);
    }
    return s.empty() ? "0" : s;
}

SymTensor substitute_scaled(const SymLaurentPoly& p, const std::vector<VarImage>& spec,
                            int rank_a, int rank_b) {
    if ((int)spec.size() != p.rank())
        throw BadShape("substitute_scaled: spec length != rank");
    for (const VarImage& im : spec) {
        int bound = im.group == 0 ? rank_a : rank_b;
        if (im.group < 0 || im.group > 1 || im.index < 0 || im.index >= bound)
            throw BadShape("substitute_scaled: image out of range");
    }

    std::map<std::pair<Exps, Exps>, RatFunc> raw;
    for (const auto& [key, c] : p.expand_monomials()) {
        RatFunc coeff = c;
        Exps xa(rank_a, 0), xb(rank_b, 0);
        for (int i = 0; i < p.rank(); ++i) {
            const VarImage& im = spec[i];
            coeff *= rf_pow(im.scalar, key[i]);
            (im.group == 0 ? xa : xb)[im.index] += im.power * key[i];
        }
        auto [it, fresh] = raw.emplace(std::make_pair(xa, xb), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) raw.erase(it);
        }
    }

    // collect orbits and verify S_a x S_b invariance
    SymTensor out(rank_a, rank_b);
    std::map<std::pair<Exps, Exps>, RatFunc> seen = raw;
    while (!seen.empty()) {
        auto [key, c] = *seen.begin();
        Exps da = key.first, db = key.second;
        std::sort(da.begin(), da.end(), std::greater<long>());
        std::sort(db.begin(), db.end(), std::greater<long>());
        for (const Exps& x : orbit_of(da))
            for (const Exps& y : orbit_of(db)) {
                auto it = seen.find(std::make_pair(x, y));
                if (it == seen.end() || it->second != c)
                    throw NotSymmetric("substitute_scaled: image not group-wise symmetric");
                seen.erase(it);
            }
        out.add_term(da, db, c);
    }
    return out;
}

} // namespace symfunc
