/**
 * @file cli.hpp
 * @brief Run configuration, check orchestration and report emission for the
 *        command-line front end.
 *
 * A run selects checks from a fixed catalog, executes them over a seeded
 * sample stream, and emits one JSON line per report row. Exit status is zero
 * only when every row passes; boundary refusals are never silently dropped.
 */
#pragma once

#include <orbint/orbint.hpp>

#include <iosfwd>

namespace cli {

using localfield::ConfigError;
using localfield::LocalCfg;

struct RunConfig {
    long p = 3;
    long epsilon = -1;
    std::vector<std::string> checks; // empty selects the full catalog
    int n = 1;                       // element rank for the sampled checks
    int n_max = 3;                   // symbolic-identity grid bound
    long d_max = 4;                  // degree bound for the symbolic grids
    long window = 0;                 // lattice window; 0 picks a per-check default
    int samples = 8;
    int vanishing = 4;
    unsigned seed = 2024;
    int jobs = 1;
    std::string emit_csv; // optional path for a tabular summary

    // reads any subset of the fields above from a JSON object
    static RunConfig from_json(const nlohmann::json& j);

    // guards: p odd prime, epsilon a non-residue, n <= 2 for enumerative
    // checks, n_max <= 4 for symbolic grids; throws ConfigError
    void validate() const;
};

// stable ordered catalog: check id -> statement anchor
const std::vector<std::pair<std::string, std::string>>& list_checks();

// executes the selected checks and writes one JSON line per report row to
// `out` plus a one-line summary to `err`; returns 0 iff every row passes
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// emits the seeded element stream of the sampled checks as JSON lines,
// without running any engine; byte-identical for identical config + seed
void sample_dump(const RunConfig& cfg, std::ostream& out);

} // namespace cli
