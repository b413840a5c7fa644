#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "specht/cuspidal.hpp"
#include "specht/garnir.hpp"

namespace specht::cli {

struct SweepResult {
    std::string name;
    bool ok = true;
    long long cases = 0;
    std::string detail;  // first counterexample, in enumeration order
};

// worker pool size: hardware concurrency, capped by SPECHT_THREADS and by the
// number of jobs
unsigned worker_count(std::size_t jobs);
// fn must not throw; failures are reported through the result slots
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Verification sweeps behind `check`. Shapes are enumerated as outer
// partitions up to the node bound with every nested inner partition and every
// charge; case counts say how many identities were actually checked.
SweepResult sweep_garnir(int max_nodes, const std::vector<int>& es);
SweepResult sweep_filtration(int max_nodes, const std::vector<int>& es);
SweepResult sweep_join(int max_nodes, const std::vector<int>& es);
SweepResult sweep_degmatch(int max_nodes, const std::vector<int>& es);
SweepResult sweep_minuscule(const std::vector<int>& es);
SweepResult sweep_catalogue(int max_m, const std::vector<int>& es);
SweepResult sweep_cuspidality(int max_height, const std::vector<int>& es);
SweepResult sweep_minimal_pairs(int max_height, const std::vector<int>& es);
SweepResult sweep_convexity(int max_height, const std::vector<int>& es);
SweepResult sweep_roundtrip(int max_nodes, const std::vector<int>& es);

}  // namespace specht::cli
