// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/oracle.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qss {

/// Sweep definition: every (set size, max value) cell gets `runs_per_cell`
/// seeded instances, each compiled under all four configurations.
struct BenchGrid {
    std::vector<int> set_sizes;
    std::vector<std::uint64_t> max_values = {64, 128, 256};
    int runs_per_cell = 100;
    std::uint64_t master_seed = 0;

    BenchGrid() {
        for (int n = 5; n <= 100; n += 5) set_sizes.push_back(n);
    }
};

/// Mean resource usage of one configuration over one cell. The same
/// instances are reused across the four configurations within a cell, so
/// savings are paired comparisons.
struct BenchRecord {
    std::string config;
    int n = 0;
    std::uint64_t max_value = 0;
    int runs = 0;
    double mean_qubits = 0.0;
    double mean_gates = 0.0;
    double mean_compute_gates = 0.0; // compute fragment only, before uncompute
};

/// The four configurations measured, in baseline-to-optimized order.
extern const char* const kBenchConfigNames[4];
OracleConfig bench_config(int index);

/// Values uniform in [1, max_value], target uniform in [1, sum of values],
/// fully determined by the seed.
SSPInstance random_instance(int n, std::uint64_t max_value, std::uint64_t seed);

/// Seed for one run of one cell, derived by chained SplitMix64 rounds so
/// sweeps are reproducible across machines.
std::uint64_t derive_run_seed(std::uint64_t master_seed, int n,
                              std::uint64_t max_value, int run);

std::vector<BenchRecord> run_benchmark(const BenchGrid& grid);

/// 100 * (baseline - optimized) / baseline.
double percent_saved(double baseline, double optimized);

/// CSV with header config,n,max_value,runs,mean_qubits,mean_gates and means
/// printed to two decimals. Byte-identical for identical grids.
std::string to_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Plain-text tables of percent saved versus the fixed-width baseline, one
/// qubit table and one gate table per max value.
std::string render_tables(std::span<const BenchRecord> records);

} // namespace qss
