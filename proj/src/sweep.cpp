#include "lensbound/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "lensbound/filling.hpp"
#include "lensbound/tight.hpp"

namespace lensbound {

namespace {

struct PerP {
    long long pairs = 0;
    long long checked = 0;
    long long violations = 0;
    std::vector<std::string> counterexamples;
};

void flag(PerP& r, long long p, long long q, const std::string& reason) {
    ++r.violations;
    r.counterexamples.push_back(std::to_string(p) + "," + std::to_string(q) + ": " + reason);
}

void sweep_sum_qhb(long long p, PerP& r) {
    for (long long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++r.pairs;
        ++r.checked;
        if (lisca_qhb_accepts(p, q) && lisca_qhb_accepts(p, p - q))
            flag(r, p, q, "both summands admit a Lisca filling");
    }
}

void sweep_tight_count(long long p, PerP& r) {
    for (long long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++r.pairs;
        LensSpace lens = lens_normalize(p, q);
        unsigned long long enumerated = enumerate_tight(lens).size();
        unsigned long long formula = count_tight_formula(lens);
        r.checked += static_cast<long long>(enumerated);
        if (enumerated != formula)
            flag(r, p, q,
                 "enumerated " + std::to_string(enumerated) + " structures but formula gives " +
                     std::to_string(formula));
    }
}

void sweep_menke_nosphere(long long p, PerP& r) {
    for (long long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++r.pairs;
        NoSphereReport report = verify_no_sphere_factor(lens_normalize(p, q));
        r.checked += report.candidates;
        for (const NoSphereWitness& w : report.violations)
            flag(r, p, q,
                 "candidate " + w.candidate.str() + " at torus slope " + w.torus.str() +
                     " (signs " + w.signs + ")");
        if (report.empty_candidate_lists > 0)
            flag(r, p, q,
                 std::to_string(report.empty_candidate_lists) + " empty candidate list(s)");
    }
}

void sweep_path_oracle(long long p, PerP& r) {
    for (long long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++r.pairs;
        LensSpace lens = lens_normalize(p, q);
        FareyPath greedy = minimal_path(lens);
        FareyPath oracle = bfs_minimal_path(lens);
        r.checked += static_cast<long long>(greedy.vertices.size());
        if (!(greedy == oracle)) {
            flag(r, p, q, "greedy path disagrees with BFS oracle");
            continue;
        }
        NegCF cf = neg_cf(p, q);
        long long expected_edges = 2 - 2 * static_cast<long long>(cf.coeffs.size());
        for (long long a : cf.coeffs) expected_edges += -a;
        if (expected_edges != static_cast<long long>(greedy.edge_count()))
            flag(r, p, q,
                 "edge count " + std::to_string(greedy.edge_count()) + " != formula value " +
                     std::to_string(expected_edges));
    }
}

void run_one(SweepKind kind, long long p, PerP& r) {
    switch (kind) {
        case SweepKind::sum_qhb: sweep_sum_qhb(p, r); break;
        case SweepKind::tight_count: sweep_tight_count(p, r); break;
        case SweepKind::menke_nosphere: sweep_menke_nosphere(p, r); break;
        case SweepKind::path_oracle: sweep_path_oracle(p, r); break;
    }
}

}  // namespace

SweepKind parse_sweep_kind(const std::string& name) {
    if (name == "sum-qhb") return SweepKind::sum_qhb;
    if (name == "tight-count") return SweepKind::tight_count;
    if (name == "menke-nosphere") return SweepKind::menke_nosphere;
    if (name == "path-oracle") return SweepKind::path_oracle;
    throw std::invalid_argument(
        "unknown sweep '" + name +
        "' (expected sum-qhb, tight-count, menke-nosphere or path-oracle)");
}

std::string sweep_kind_name(SweepKind kind) {
    switch (kind) {
        case SweepKind::sum_qhb: return "sum-qhb";
        case SweepKind::tight_count: return "tight-count";
        case SweepKind::menke_nosphere: return "menke-nosphere";
        case SweepKind::path_oracle: return "path-oracle";
    }
    return "?";
}

int default_jobs() {
    if (const char* env = std::getenv("LENSBOUND_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

SweepReport run_sweep(SweepKind kind, long long pmax, int jobs) {
    if (pmax < 2) throw std::invalid_argument("sweep requires pmax >= 2");
    if (jobs < 1) throw std::invalid_argument("sweep requires jobs >= 1");
    jobs = static_cast<int>(std::min<long long>(jobs, pmax - 1));

    auto start = std::chrono::steady_clock::now();
    std::vector<PerP> results(static_cast<std::size_t>(pmax - 1));
    std::atomic<long long> next_p{2};

    auto worker = [&] {
        while (true) {
            long long p = next_p.fetch_add(1);
            if (p > pmax) break;
            run_one(kind, p, results[static_cast<std::size_t>(p - 2)]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SweepReport report;
    report.kind = kind;
    report.pmax = pmax;
    for (const PerP& r : results) {
        report.pairs += r.pairs;
        report.checked += r.checked;
        report.violations += r.violations;
        report.counterexamples.insert(report.counterexamples.end(), r.counterexamples.begin(),
                                      r.counterexamples.end());
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace lensbound
