/**
 * @file cli.cpp
 * @brief Check orchestration: catalog, config validation, seeded sampling
 *        dump and parallel report generation.
 */
#include <cli/cli.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <random>
#include <thread>

namespace cli {

namespace {

using exactcore::Rat;
using heckealg::HeckeElt;
using heckealg::Side;
using localfield::Ext;
using localfield::HermMat;
using localfield::Mat;
using localfield::Vec;
using nlohmann::json;

json row_from_report(const orbint::OrbReport& r, unsigned seed) {
    json j = r.to_json();
    j["seed"] = seed;
    return j;
}

json row_symbolic(const std::string& check, json params, const heckealg::VerifyReport& r,
                  unsigned seed) {
    return json{{"check", check}, {"params", std::move(params)},
                {"lhs", r.lhs},   {"rhs", r.rhs},
                {"factor", 1},    {"status", r.ok ? "pass" : "fail"},
                {"seed", seed}};
}

std::vector<json> run_sft(const RunConfig& cfg) {
    std::vector<json> rows;
    for (int n = 1; n <= cfg.n_max; ++n)
        for (long d = 1; d <= cfg.d_max; ++d)
            rows.push_back(row_symbolic("sft_special", json{{"n", n}, {"d", d}},
                                        heckealg::verify_sft_special(n, d), cfg.seed));
    return rows;
}

std::vector<json> run_xi(const RunConfig& cfg) {
    std::vector<json> rows;
    for (int n = 2; n <= cfg.n_max; ++n)
        for (int a = 1; a < n; ++a)
            for (long d = 0; d <= cfg.d_max; ++d)
                rows.push_back(row_symbolic(
                    "xi_identity", json{{"n", n}, {"a", a}, {"b", n - a}, {"d", d}},
                    heckealg::verify_xi_identity(n, a, n - a, d), cfg.seed));
    return rows;
}

std::vector<json> rows_from(const std::vector<orbint::OrbReport>& reps, unsigned seed) {
    std::vector<json> rows;
    rows.reserve(reps.size());
    for (const auto& r : reps) rows.push_back(row_from_report(r, seed));
    return rows;
}

std::vector<json> run_check(const std::string& id, const RunConfig& cfg) {
    LocalCfg lf = LocalCfg::make(cfg.p, cfg.epsilon);
    if (id == "sft_special") return run_sft(cfg);
    if (id == "xi_identity") return run_xi(cfg);
    if (id == "jr_fl") {
        long window = cfg.window ? cfg.window : (cfg.n == 1 ? 4 : 2);
        return rows_from(orbint::verify_jr_fl(cfg.n, cfg.samples, cfg.vanishing,
                                              cfg.seed, window, lf),
                         cfg.seed);
    }
    if (id == "hecke_fl") {
        std::vector<json> rows;
        for (const auto& lam : std::vector<symfunc::Exps>{{0, 0}, {1, 0}, {1, 1}, {2, 0}}) {
            HeckeElt phi = HeckeElt::basis(Side::E, 2, lam);
            for (json& r : rows_from(
                     orbint::verify_hecke_fl(phi, cfg.samples, cfg.vanishing, cfg.seed, lf),
                     cfg.seed))
                rows.push_back(std::move(r));
        }
        return rows;
    }
    if (id == "relative_fl")
        return rows_from(
            orbint::verify_relative_fl(cfg.samples, cfg.vanishing, cfg.seed, lf), cfg.seed);
    if (id == "split_transfer")
        return rows_from(orbint::verify_split_transfer(cfg.n, cfg.samples, cfg.seed, lf),
                         cfg.seed);
    if (id == "property_suite") {
        std::vector<json> rows =
            rows_from(orbint::verify_contraction_ids(cfg.samples, cfg.seed, lf), cfg.seed);
        for (json& r :
             rows_from(orbint::verify_split_transfer(1, cfg.samples, cfg.seed, lf), cfg.seed))
            rows.push_back(std::move(r));
        return rows;
    }
    throw ConfigError("run: unknown check id " + id);
}

// ---- seeded element dumps; these mirror the verifier sample streams ----

json ext_json(const Ext& e) {
    return json::array({exactcore::rat_str(e.a()), exactcore::rat_str(e.b())});
}

std::vector<json> dump_jr(const RunConfig& cfg) {
    LocalCfg lf = LocalCfg::make(cfg.p, cfg.epsilon);
    long eps = lf.epsilon;
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<long> c(-4, 4);
    auto rnd_ext = [&]() {
        std::uniform_int_distribution<long> cb(-3, 3);
        Rat a = Rat(cb(rng)), b = Rat(cb(rng));
        return Ext(a, b, eps);
    };
    std::vector<json> rows;
    int n = cfg.n;
    for (int i = 0; i < cfg.samples; ++i) {
        orbint::HermJRElement y;
        while (true) {
            Mat<Ext> a(n, std::vector<Ext>(n, Ext(Rat(0), eps)));
            for (int r = 0; r < n; ++r) a[r][r] = Ext(Rat(c(rng)), eps);
            for (int r = 0; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    a[r][s] = rnd_ext();
                    a[s][r] = a[r][s].conj();
                }
            Vec<Ext> b;
            for (int r = 0; r < n; ++r) b.push_back(rnd_ext());
            orbint::HermJRElement cand =
                orbint::HermJRElement::from(HermMat::from(a), b, Rat(c(rng)));
            if (!orbitgeo::is_regular_ss(cand)) continue;
            Ext det = localfield::mat_det(a);
            if (det.is_zero() || localfield::valuation(det, lf.p) != 0) continue;
            y = cand;
            break;
        }
        json am = json::array(), bm = json::array();
        for (int r = 0; r < n; ++r) {
            json arow = json::array();
            for (int s = 0; s < n; ++s) arow.push_back(ext_json(y.A.entries[r][s]));
            am.push_back(arow);
            bm.push_back(ext_json(y.b[r]));
        }
        rows.push_back(json{{"check", "jr_fl"},
                            {"sample", i},
                            {"n", n},
                            {"A", am},
                            {"b", bm},
                            {"d", exactcore::rat_str(y.d)}});
    }
    return rows;
}

std::vector<json> dump_hecke(const RunConfig& cfg) {
    LocalCfg lf = LocalCfg::make(cfg.p, cfg.epsilon);
    long eps = lf.epsilon;
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<long> c(-4, 4);
    std::vector<json> rows;
    for (int i = 0; i < cfg.samples; ++i) {
        Rat y11, y22;
        Ext w(Rat(0), eps);
        while (true) {
            y11 = Rat(c(rng));
            y22 = Rat(c(rng));
            std::uniform_int_distribution<long> cb(-3, 3);
            Rat wa = Rat(cb(rng)), wb = Rat(cb(rng));
            w = Ext(wa, wb, eps);
            if (!w.is_zero() && w.norm() != 0 && y11 * y22 - w.norm() != 0) break;
        }
        rows.push_back(json{{"check", "hecke_fl"},
                            {"sample", i},
                            {"y11", exactcore::rat_str(y11)},
                            {"y22", exactcore::rat_str(y22)},
                            {"w", ext_json(w)}});
    }
    return rows;
}

std::vector<json> dump_relative(const RunConfig& cfg) {
    LocalCfg lf = LocalCfg::make(cfg.p, cfg.epsilon);
    std::mt19937 rng(cfg.seed);
    std::vector<Rat> pool{Rat(1),          Rat(2), Rat(4), Rat(5), Rat(7),
                          Rat(lf.p * lf.p), Rat(2 * lf.p * lf.p),
                          exactcore::rat(1, lf.p * lf.p)};
    std::vector<json> rows;
    for (int i = 0; i < cfg.samples; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        Rat alpha = pool[pick(rng)], beta = pool[pick(rng)];
        if (alpha == beta) { --i; continue; }
        rows.push_back(json{{"check", "relative_fl"},
                            {"sample", i},
                            {"alpha", exactcore::rat_str(alpha)},
                            {"beta", exactcore::rat_str(beta)},
                            {"class", "+1"}});
    }
    return rows;
}

template <typename T>
void read_field(const json& j, const char* key, T& into) {
    if (j.contains(key)) into = j.at(key).get<T>();
}

} // namespace

RunConfig RunConfig::from_json(const json& j) {
    RunConfig c;
    read_field(j, "p", c.p);
    read_field(j, "epsilon", c.epsilon);
    read_field(j, "checks", c.checks);
    read_field(j, "n", c.n);
    read_field(j, "n_max", c.n_max);
    read_field(j, "d_max", c.d_max);
    read_field(j, "window", c.window);
    read_field(j, "samples", c.samples);
    read_field(j, "vanishing", c.vanishing);
    read_field(j, "seed", c.seed);
    read_field(j, "jobs", c.jobs);
    read_field(j, "emit_csv", c.emit_csv);
    return c;
}

void RunConfig::validate() const {
    LocalCfg::make(p, epsilon); // p odd prime, epsilon a non-residue
    if (n < 1 || n > 2) throw ConfigError("RunConfig: enumerative rank n must be 1 or 2");
    if (n_max < 1 || n_max > 4)
        throw ConfigError("RunConfig: symbolic grid bound n_max must be in [1, 4]");
    if (d_max < 0) throw ConfigError("RunConfig: d_max must be >= 0");
    if (window < 0) throw ConfigError("RunConfig: window must be >= 0");
    if (samples < 0 || vanishing < 0)
        throw ConfigError("RunConfig: sample counts must be >= 0");
    if (jobs < 1) throw ConfigError("RunConfig: jobs must be >= 1");
    for (const std::string& id : checks) {
        bool known = false;
        for (const auto& [cid, anchor] : list_checks()) known |= (cid == id);
        if (!known) throw ConfigError("RunConfig: unknown check id " + id);
    }
}

const std::vector<std::pair<std::string, std::string>>& list_checks() {
    static const std::vector<std::pair<std::string, std::string>> catalog{
        {"sft_special", "(eqn: sft special)"},
        {"xi_identity", "(eqn: local goal)"},
        {"jr_fl", "Theorem: (Jacquet-Rallis fundamental lemma)"},
        {"hecke_fl", "Theorem: (JR fundamental lemma for algebra)"},
        {"relative_fl", "Theorem: (Relative fundamental lemma)"},
        {"split_transfer", "Proposition: (split transfer)"},
        {"property_suite", "Lemma: (orbital reduction); Lemma: (elementary lemma)"},
    };
    return catalog;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.validate();
    std::vector<std::string> selected;
    for (const auto& [id, anchor] : list_checks())
        if (cfg.checks.empty() ||
            std::find(cfg.checks.begin(), cfg.checks.end(), id) != cfg.checks.end())
            selected.push_back(id);

    // fan the checks out to workers; rows are gathered into fixed slots so
    // parallel and serial runs emit identical output
    std::vector<std::vector<json>> slots(selected.size());
    std::vector<std::string> errors(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            try {
                slots[i] = run_check(selected[i], cfg);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    int nw = std::min<int>(cfg.jobs, (int)selected.size());
    if (nw <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    long pass = 0, fail = 0, boundary = 0;
    std::ofstream csv;
    if (!cfg.emit_csv.empty()) {
        csv.open(cfg.emit_csv);
        csv << "check,status,lhs,rhs,factor\n";
    }
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (!errors[i].empty()) {
            json row{{"check", selected[i]}, {"params", json::object()},
                     {"lhs", "0"},           {"rhs", "0"},
                     {"factor", 1},          {"status", "fail"},
                     {"seed", cfg.seed},     {"error", errors[i]}};
            out << row.dump() << "\n";
            ++fail;
            continue;
        }
        for (const json& row : slots[i]) {
            out << row.dump() << "\n";
            const std::string& st = row.at("status").get_ref<const std::string&>();
            if (st == "pass") ++pass;
            else if (st == "boundary") ++boundary;
            else ++fail;
            if (csv.is_open())
                csv << row.at("check").get<std::string>() << ','
                    << st << ',' << row.at("lhs").get<std::string>() << ','
                    << row.at("rhs").get<std::string>() << ','
                    << row.at("factor").get<long>() << '\n';
        }
    }
    err << "checks=" << selected.size() << " pass=" << pass << " fail=" << fail
        << " boundary=" << boundary << "\n";
    return (fail == 0 && boundary == 0) ? 0 : 1;
}

void sample_dump(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    auto want = [&](const char* id) {
        return cfg.checks.empty() ||
               std::find(cfg.checks.begin(), cfg.checks.end(), id) != cfg.checks.end();
    };
    std::vector<json> rows;
    if (want("jr_fl"))
        for (json& r : dump_jr(cfg)) rows.push_back(std::move(r));
    if (want("hecke_fl"))
        for (json& r : dump_hecke(cfg)) rows.push_back(std::move(r));
    if (want("relative_fl"))
        for (json& r : dump_relative(cfg)) rows.push_back(std::move(r));
    for (const json& r : rows) out << r.dump() << "\n";
}

} // namespace cli
