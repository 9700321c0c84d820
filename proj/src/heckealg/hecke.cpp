#include <heckealg/hecke.hpp>

#include <algorithm>

namespace heckealg {

namespace {

RatFunc u(long k) { return RatFunc::upow(k); }

int side_scale(Side s) { return s == Side::F ? 1 : 2; }

std::string exps_str(const Exps& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + "]";
}

nlohmann::json exps_json(const Exps& k) {
    nlohmann::json a = nlohmann::json::array();
    for (long e : k) a.push_back(e);
    return a;
}

std::vector<Exps> partitions_of(long d, int n) {
    std::vector<Exps> out;
    Exps cur;
    auto rec = [&](auto&& self, long rem, long maxpart) -> void {
        if (rem == 0) {
            Exps padded = cur;
            padded.resize(n, 0);
            out.push_back(padded);
            return;
        }
        if ((int)cur.size() == n) return;
        for (long p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

} // namespace

long rho_pairing(const Exps& lam) {
    long n = (long)lam.size();
    long s = 0;
    for (long i = 1; i <= n; ++i) s += lam[i - 1] * (n + 1 - 2 * i);
    return s;
}

HeckeElt HeckeElt::unit(Side side, int rank) {
    return basis(side, rank, Exps(rank, 0));
}

HeckeElt HeckeElt::basis(Side side, int rank, const Exps& lam) {
    HeckeElt h(side, rank);
    h.add_term(lam, RatFunc(1));
    return h;
}

void HeckeElt::add_term(const Exps& lam, const RatFunc& c) {
    if ((int)lam.size() != rank_) throw symfunc::BadShape("HeckeElt: wrong length");
    if (!symfunc::is_dominant(lam))
        throw symfunc::BadShape("HeckeElt: key not weakly decreasing");
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
        terms_.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
    if (a.side_ != b.side_ || a.rank_ != b.rank_)
        throw SideMismatch("HeckeElt operator+: side/rank mismatch");
    HeckeElt r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) {
    if (a.side_ != b.side_ || a.rank_ != b.rank_)
        throw SideMismatch("HeckeElt operator-: side/rank mismatch");
    HeckeElt r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
}

HeckeElt operator*(const RatFunc& c, const HeckeElt& a) {
    HeckeElt r(a.side_, a.rank_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
}

nlohmann::json HeckeElt::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
        terms.push_back({{"lambda", exps_json(k)}, {"coeff", c.to_string()}});
    return {{"side", side_ == Side::F ? "F" : "E"}, {"rank", rank_}, {"terms", terms}};
}

void HeckeTensor::add_term(const Exps& la, const Exps& mu, const RatFunc& c) {
    if ((int)la.size() != rank_a_ || (int)mu.size() != rank_b_)
        throw symfunc::BadShape("HeckeTensor: wrong key lengths");
    if (!symfunc::is_dominant(la) || !symfunc::is_dominant(mu))
        throw symfunc::BadShape("HeckeTensor: key not weakly decreasing");
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

HeckeTensor operator+(const HeckeTensor& a, const HeckeTensor& b) {
    if (a.side_ != b.side_ || a.rank_a_ != b.rank_a_ || a.rank_b_ != b.rank_b_)
        throw SideMismatch("HeckeTensor operator+: side/rank mismatch");
    HeckeTensor r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

HeckeTensor operator-(const HeckeTensor& a, const HeckeTensor& b) {
    if (a.side_ != b.side_ || a.rank_a_ != b.rank_a_ || a.rank_b_ != b.rank_b_)
        throw SideMismatch("HeckeTensor operator-: side/rank mismatch");
    HeckeTensor r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

nlohmann::json HeckeTensor::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
        terms.push_back({{"lambda_a", exps_json(k.first)},
                         {"lambda_b", exps_json(k.second)},
                         {"coeff", c.to_string()}});
    return {{"side", side_ == Side::F ? "F" : "E"},
            {"rank_a", rank_a_},
            {"rank_b", rank_b_},
            {"terms", terms}};
}

SymLaurentPoly satake(const HeckeElt& h) {
    int n = h.rank();
    int s = side_scale(h.side());
    RatFunc t = u(-2 * s);
    SymLaurentPoly out(n);
    for (const auto& [lam, c] : h.terms()) {
        long k = std::max(0L, -lam.back());
        Exps mu = lam;
        for (long& e : mu) e += k;
        SymLaurentPoly p = symfunc::hall_littlewood(mu, n, t);
        out = out + (c * u(s * rho_pairing(lam))) * p.shifted(-k);
    }
    return out;
}

HeckeElt satake_inv(const SymLaurentPoly& p, Side side, int rank) {
    int s = side_scale(side);
    RatFunc t = u(-2 * s);
    long k = std::max(0L, -p.min_exponent());
    auto coeffs = symfunc::expand_in_hall_littlewood(p.shifted(k), t);
    HeckeElt h(side, rank);
    for (const auto& [mu, c] : coeffs) {
        Exps lam = mu;
        for (long& e : lam) e -= k;
        h.add_term(lam, c * u(-s * rho_pairing(lam)));
    }
    return h;
}

HeckeElt convolve(const HeckeElt& a, const HeckeElt& b) {
    if (a.side() != b.side() || a.rank() != b.rank())
        throw SideMismatch("convolve: side/rank mismatch");
    return satake_inv(satake(a) * satake(b), a.side(), a.rank());
}

HeckeTensor convolve(const HeckeTensor& a, const HeckeTensor& b) {
    if (a.side() != b.side() || a.rank_a() != b.rank_a() || a.rank_b() != b.rank_b())
        throw SideMismatch("convolve: tensor side/rank mismatch");
    HeckeTensor out(a.side(), a.rank_a(), a.rank_b());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            HeckeElt fa = convolve(HeckeElt::basis(a.side(), a.rank_a(), ka.first),
                                   HeckeElt::basis(a.side(), a.rank_a(), kb.first));
            HeckeElt fb = convolve(HeckeElt::basis(a.side(), a.rank_b(), ka.second),
                                   HeckeElt::basis(a.side(), a.rank_b(), kb.second));
            RatFunc c = ca * cb;
            for (const auto& [x, cx] : fa.terms())
                for (const auto& [y, cy] : fb.terms())
                    out.add_term(x, y, c * cx * cy);
        }
    return out;
}

HeckeElt bc_morphism(const HeckeElt& h) {
    if (h.side() != Side::E)
        throw SideMismatch("bc_morphism: extension-side input required");
    int n = h.rank();
    std::vector<symfunc::VarImage> spec;
    for (int i = 0; i < n; ++i) spec.push_back({RatFunc(1), 0, i, 2});
    SymTensor img = symfunc::substitute_scaled(satake(h), spec, n, 0);
    SymLaurentPoly w(n);
    for (const auto& [k, c] : img.terms()) w.add_term(k.first, c);
    return satake_inv(w, Side::F, n);
}

namespace {

// expands a two-group symmetric tensor in the product basis
// Sat(1_alpha) (x) Sat(1_beta), extension side
HeckeTensor tensor_satake_inv(const SymTensor& p, Side side) {
    int s = side_scale(side);
    RatFunc t = u(-2 * s);
    int a = p.rank_a(), b = p.rank_b();

    long ka = 0, kb = 0;
    for (const auto& [k, c] : p.terms()) {
        ka = std::max(ka, -k.first.back());
        kb = std::max(kb, -k.second.back());
    }

    std::map<std::pair<Exps, Exps>, RatFunc> rem;
    for (const auto& [k, c] : p.terms()) {
        Exps x = k.first, y = k.second;
        for (long& e : x) e += ka;
        for (long& e : y) e += kb;
        rem.emplace(std::make_pair(x, y), c);
    }

    auto bigger = [](const std::pair<Exps, Exps>& x, const std::pair<Exps, Exps>& y) {
        long wx = symfunc::weight(x.first) + symfunc::weight(x.second);
        long wy = symfunc::weight(y.first) + symfunc::weight(y.second);
        if (wx != wy) return wx > wy;
        return x > y;
    };

    HeckeTensor out(side, a, b);
    while (!rem.empty()) {
        auto top = rem.begin();
        for (auto it = std::next(rem.begin()); it != rem.end(); ++it)
            if (bigger(it->first, top->first)) top = it;
        auto [mu_a, mu_b] = top->first;
        RatFunc c = top->second;

        SymLaurentPoly pa = symfunc::hall_littlewood(mu_a, a, t);
        SymLaurentPoly pb = symfunc::hall_littlewood(mu_b, b, t);
        for (const auto& [x, cx] : pa.terms())
            for (const auto& [y, cy] : pb.terms()) {
                std::pair<Exps, Exps> key{x, y};
                RatFunc delta = c * cx * cy;
                auto it = rem.find(key);
                if (it == rem.end()) {
                    rem.emplace(key, -delta);
                } else {
                    it->second -= delta;
                    if (it->second.is_zero()) rem.erase(it);
                }
            }
        for (const auto& [k, cc] : rem)
            if (!bigger(top->first, k) && k != top->first)
                throw symfunc::NotInSpan("tensor_satake_inv: lost triangularity");

        Exps la = mu_a, lb = mu_b;
        for (long& e : la) e -= ka;
        for (long& e : lb) e -= kb;
        out.add_term(la, lb,
                     c * u(-s * (rho_pairing(la) + rho_pairing(lb))));
    }
    return out;
}

} // namespace

HeckeTensor xi_ab(const HeckeElt& h, int a, int b) {
    if (h.side() != Side::E)
        throw SideMismatch("xi_ab: extension-side input required");
    if (a < 1 || b < 1 || a + b != h.rank())
        throw symfunc::BadShape("xi_ab: need a, b >= 1 with a + b = rank");
    std::vector<symfunc::VarImage> spec;
    for (int i = 0; i < a; ++i) spec.push_back({u(-2 * b), 0, i, 1});
    for (int i = 0; i < b; ++i) spec.push_back({u(-2 * a), 1, i, 1});
    SymTensor img = symfunc::substitute_scaled(satake(h), spec, a, b);
    return tensor_satake_inv(img, Side::E);
}

HeckeElt unit_ball_sum(long d, int n) {
    if (d < 0) throw symfunc::BadShape("unit_ball_sum: d must be >= 0");
    HeckeElt h(Side::E, n);
    for (const Exps& lam : partitions_of(d, n)) h.add_term(lam, RatFunc(1));
    return h;
}

VerifyReport verify_sft_special(int n, long d) {
    SymLaurentPoly lhs = satake(unit_ball_sum(d, n));
    SymLaurentPoly rhs(n);
    for (const Exps& lam : partitions_of(d, n))
        rhs = rhs + u(2 * d * (n - 1)) * symfunc::monomial_sym(lam, n);
    return {lhs == rhs, lhs.to_string(), rhs.to_string()};
}

VerifyReport verify_xi_identity(int n, int a, int b, long d) {
    HeckeTensor lhs = xi_ab(unit_ball_sum(d, n), a, b);
    HeckeTensor rhs(Side::E, a, b);
    for (long da = 0; da <= d; ++da) {
        HeckeElt ha = unit_ball_sum(da, a);
        HeckeElt hb = unit_ball_sum(d - da, b);
        for (const auto& [x, cx] : ha.terms())
            for (const auto& [y, cy] : hb.terms()) rhs.add_term(x, y, cx * cy);
    }
    return {lhs == rhs, lhs.to_json().dump(), rhs.to_json().dump()};
}

} // namespace heckealg
