/**
 * @file orbcheck.cpp
 * @brief Command-line front end: runs identity checks over seeded sample
 *        streams and emits JSON-lines reports.
 */
#include <cli/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact orbital-integral identity checker"};

    std::string config_path;
    std::vector<std::string> checks;
    long p = 0, window = -1, d_max = -1;
    int samples = -1, vanishing = -1, n = 0, n_max = 0, jobs = 0;
    long epsilon = 0;
    bool have_eps = false;
    long long seed = -1;
    std::string emit_csv;
    bool do_list = false, do_dump = false;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--check", checks, "check ids to run (default: all)");
    app.add_option("--p", p, "odd residue characteristic");
    app.add_option("--epsilon", epsilon, "quadratic non-residue defining the extension")
        ->each([&](const std::string&) { have_eps = true; });
    app.add_option("--samples", samples, "sample count per check");
    app.add_option("--vanishing", vanishing, "vanishing-branch sample count");
    app.add_option("--seed", seed, "RNG seed (reports are deterministic in it)");
    app.add_option("--window", window, "lattice enumeration window (0 = auto)");
    app.add_option("--n", n, "element rank for sampled checks");
    app.add_option("--n-max", n_max, "grid bound for symbolic identities");
    app.add_option("--d-max", d_max, "degree bound for symbolic identities");
    app.add_option("--emit-csv", emit_csv, "also write a CSV summary to this path");
    app.add_option("--jobs", jobs, "worker threads for check fan-out");
    app.add_flag("--list-checks", do_list, "print the check catalog and exit");
    app.add_flag("--sample-dump", do_dump, "print the seeded sample stream and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        cli::RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw cli::ConfigError("cannot open config file " + config_path);
            nlohmann::json j;
            in >> j;
            cfg = cli::RunConfig::from_json(j);
        }
        if (!checks.empty()) cfg.checks = checks;
        if (p) cfg.p = p;
        if (have_eps) cfg.epsilon = epsilon;
        if (samples >= 0) cfg.samples = samples;
        if (vanishing >= 0) cfg.vanishing = vanishing;
        if (seed >= 0) cfg.seed = (unsigned)seed;
        if (window >= 0) cfg.window = window;
        if (n) cfg.n = n;
        if (n_max) cfg.n_max = n_max;
        if (d_max >= 0) cfg.d_max = d_max;
        if (!emit_csv.empty()) cfg.emit_csv = emit_csv;
        if (jobs) cfg.jobs = jobs;

        if (do_list) {
            for (const auto& [id, anchor] : cli::list_checks())
                std::cout << nlohmann::json{{"check", id}, {"anchor", anchor}}.dump()
                          << "\n";
            return 0;
        }
        if (do_dump) {
            cli::sample_dump(cfg, std::cout);
            return 0;
        }
        return cli::run(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
