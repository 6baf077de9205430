// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/oracle.hpp"
#include "qss/sim.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qss {

/// Result of a Grover search: the exact marginal distribution over the
/// selection register, indexed by subset mask in the caller's value order.
struct GroverRun {
    SSPInstance instance;
    OracleConfig config;
    int iterations = 0;
    std::vector<double> distribution;
};

/// Standard schedule: floor((pi/4) * sqrt(2^n / m)), at least 1.
int iteration_count(int n_qubits, std::uint64_t m_solutions);

/// Inversion about the mean over the x register: H and X on every qubit, a
/// multi-controlled phase flip about |1...1> (single Z when n == 1), then X
/// and H again.
void emit_diffuser(Circuit& circuit, const Register& x);

/// Builds the full driver (|-> ancilla, uniform x, `iterations` rounds of
/// oracle + diffuser), simulates it, and reads out the x register. When no
/// iteration count is given the schedule uses the brute-force solution
/// count.
GroverRun grover_search(const SSPInstance& instance, const OracleConfig& config,
                        std::optional<int> iterations = {},
                        const SimOptions& options = {});

/// Complete Grover circuit for export or inspection (same construction that
/// grover_search simulates).
Circuit build_grover_circuit(const OracleCircuit& oracle, int iterations);

/// Formats a subset mask as a conventional binary string (x_1 rightmost).
std::string format_mask(std::uint64_t mask, std::size_t n);

/// Seeded multinomial sampling of the run's distribution.
std::map<std::string, std::size_t> sample_shots(const GroverRun& run,
                                                std::size_t shots,
                                                std::uint64_t seed);

} // namespace qss
