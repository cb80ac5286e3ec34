#include "lattice/scan.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace lattice {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
    return r;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int nworkers = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(nworkers);
    for (int t = 0; t < nworkers; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

std::vector<ScanRecord> run_scan(const ScanConfig& config) {
    int max_size = config.max_mu_size + (config.slow ? 1 : 0);

    struct Job {
        Partition mu;
        Cell cell;
        int k;
        int s;
    };
    std::vector<Job> jobs;
    for (const Partition& mu : partitions_up_to(max_size)) {
        std::vector<Cell> anchors =
            config.anchors.empty() ? mu.cells() : config.anchors;
        for (const Cell& cell : anchors) {
            if (!mu.contains(cell)) continue;
            int s = shadow_size(mu, cell);
            std::vector<int> ks = config.k_values;
            if (ks.empty())
                for (int k = 1; k <= s; ++k) ks.push_back(k);
            for (int k : ks) {
                if (k < 0 || k > s) continue;
                jobs.push_back({mu, cell, k, s});
            }
        }
    }

    std::vector<ScanRecord> records(jobs.size());
    parallel_for(jobs.size(), config.parallelism, [&](std::size_t i) {
        const Job& job = jobs[i];
        ScanRecord rec;
        rec.mu = job.mu;
        rec.cell = job.cell;
        rec.k = job.k;
        rec.s = job.s;
        int n = job.mu.size() - job.k;
        std::uint64_t nf = 1;
        for (int t = 2; t <= n; ++t) nf *= static_cast<std::uint64_t>(t);
        rec.bound = binomial(job.s, job.k) * nf;
        if (config.vars == ScanVars::XY || config.vars == ScanVars::Both) {
            SpanBasis space = space_mkij(job.mu, job.cell, job.k, VariableSet::XY);
            rec.dim_xy = space.dimension();
            rec.hilbert = space.bigraded_hilbert();
            rec.bound_ok = *rec.dim_xy <= rec.bound;
            if (*rec.dim_xy != rec.bound) rec.equal = false;
        }
        if (config.vars == ScanVars::X || config.vars == ScanVars::Both) {
            SpanBasis space = space_mkij(job.mu, job.cell, job.k, VariableSet::X);
            rec.dim_x = space.dimension();
            rec.tableaux = tableaux_count(job.mu, job.cell, job.k);
            if (*rec.dim_x != *rec.tableaux) rec.equal = false;
        }
        records[i] = std::move(rec);
    });
    return records;
}

}  // namespace lattice
