#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lattice/right_diagram.hpp"
#include "lattice/spaces.hpp"

namespace lattice {

enum class ScanVars { XY, X, Both };

struct ScanConfig {
    int max_mu_size = 5;
    std::vector<int> k_values;         // empty: every k from 1 to the shadow size
    std::vector<Cell> anchors;         // empty: every cell of each partition
    ScanVars vars = ScanVars::XY;
    int parallelism = 0;               // 0: hardware concurrency
    bool slow = false;                 // raises max_mu_size by one
};

struct ScanRecord {
    Partition mu;
    Cell cell;
    int k = 0;
    int s = 0;
    std::uint64_t bound = 0;  // binomial(s,k) * n!
    std::optional<std::size_t> dim_xy;
    std::map<Bidegree, std::size_t> hilbert;
    std::optional<std::uint64_t> dim_x;
    std::optional<std::uint64_t> tableaux;
    bool bound_ok = true;  // dim_xy <= bound; never expected to fail
    bool equal = true;     // every computed dimension meets its predicted value
};

std::uint64_t binomial(int n, int k);

/// Runs every (mu, anchor, k) job in the grid, fanning out to a bounded pool;
/// the record order is independent of the parallelism level.
std::vector<ScanRecord> run_scan(const ScanConfig& config);

/// Runs jobs indexed 0..count-1 on `threads` workers (0 = hardware).
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace lattice
