#pragma once

/**
 * Exhaustive sweeps over all coprime (p, q) with 2 <= p <= pmax, used
 * both as acceptance drivers and from the CLI.  Work fans out over a
 * worker pool; per-p results are merged in p order, so the aggregate is
 * independent of the job count.
 */

#include <string>
#include <vector>

namespace lensbound {

enum class SweepKind {
    sum_qhb,        // both-orientation Lisca fillings: expect none
    tight_count,    // enumeration length vs CF product formula
    menke_nosphere, // meridional candidates never 0 or -p/q, never empty
    path_oracle,    // greedy path vs BFS oracle + edge-count formula
};

struct SweepReport {
    SweepKind kind = SweepKind::sum_qhb;
    long long pmax = 0;
    long long pairs = 0;       // coprime (p, q) visited
    long long checked = 0;     // kind-specific work units inspected
    long long violations = 0;
    std::vector<std::string> counterexamples;
    double wall_seconds = 0;   // informational; excluded from JSON output
};

SweepKind parse_sweep_kind(const std::string& name);
std::string sweep_kind_name(SweepKind kind);

// Default job count: LENSBOUND_JOBS when set, else 1.
int default_jobs();

SweepReport run_sweep(SweepKind kind, long long pmax, int jobs);

}  // namespace lensbound
