// SPDX-License-Identifier: Apache-2.0

#include "qss/grover.hpp"

#include "qss/rng.hpp"

#include <cmath>

namespace qss {

int iteration_count(int n_qubits, std::uint64_t m_solutions) {
    if (m_solutions == 0) {
        throw Error(ErrorCode::NoSolutions, "no solutions to schedule for");
    }
    const double n_states = std::ldexp(1.0, n_qubits);
    const double g = std::floor((std::acos(-1.0) / 4.0) *
                                std::sqrt(n_states / static_cast<double>(m_solutions)));
    return std::max(1, static_cast<int>(g));
}

void emit_diffuser(Circuit& circuit, const Register& x) {
    const std::size_t n = x.width();
    for (QubitId q : x.qubits) circuit.append(Gate::h(q));
    for (QubitId q : x.qubits) circuit.append(Gate::x(q));
    if (n == 1) {
        circuit.append(Gate::z(x.qubits[0]));
    } else {
        const QubitId last = x.qubits[n - 1];
        circuit.append(Gate::h(last));
        std::vector<QubitId> controls(x.qubits.begin(), x.qubits.end() - 1);
        circuit.append(Gate::mcx(std::move(controls), last));
        circuit.append(Gate::h(last));
    }
    for (QubitId q : x.qubits) circuit.append(Gate::x(q));
    for (QubitId q : x.qubits) circuit.append(Gate::h(q));
}

Circuit build_grover_circuit(const OracleCircuit& oracle, int iterations) {
    if (iterations < 1) {
        throw Error(ErrorCode::InvalidValue, "iteration count must be positive");
    }
    Circuit driver = oracle.circuit.prefix(0);
    const Register& x = oracle.layout.x;
    const Register& y = oracle.layout.y;

    driver.append(Gate::x(y.qubits[0]));
    driver.append(Gate::h(y.qubits[0]));
    for (QubitId q : x.qubits) driver.append(Gate::h(q));

    for (int round = 0; round < iterations; ++round) {
        for (const Gate& gate : oracle.circuit.gates()) driver.append(gate);
        emit_diffuser(driver, x);
    }
    return driver;
}

GroverRun grover_search(const SSPInstance& instance, const OracleConfig& config,
                        std::optional<int> iterations, const SimOptions& options) {
    OracleCircuit oracle = compile_oracle(instance, config);
    if (oracle.circuit.qubit_count() > options.qubit_budget) {
        throw Error(ErrorCode::QubitBudgetExceeded,
                    "oracle needs " + std::to_string(oracle.circuit.qubit_count()) +
                        " qubits, over the statevector budget of " +
                        std::to_string(options.qubit_budget));
    }

    GroverRun run;
    run.instance = instance;
    run.config = config;
    if (iterations) {
        if (*iterations < 1) {
            throw Error(ErrorCode::InvalidValue, "iteration count must be positive");
        }
        run.iterations = *iterations;
    } else {
        const SolutionSet solutions = classical_solutions(instance, config.k);
        run.iterations = iteration_count(static_cast<int>(instance.values.size()),
                                         solutions.masks.size());
    }

    const Circuit driver = build_grover_circuit(oracle, run.iterations);
    const StateVector state =
        simulate(driver, StateVector(driver.qubit_count()), options);
    run.distribution = measure_register(state, oracle.layout.x);
    return run;
}

std::string format_mask(std::uint64_t mask, std::size_t n) {
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1) bits[n - 1 - i] = '1';
    }
    return bits;
}

std::map<std::string, std::size_t> sample_shots(const GroverRun& run,
                                                std::size_t shots,
                                                std::uint64_t seed) {
    const std::size_t n = run.instance.values.size();
    std::map<std::string, std::size_t> counts;
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < shots; ++s) {
        double u = rng.next_double();
        std::uint64_t picked = run.distribution.size() - 1;
        for (std::size_t mask = 0; mask < run.distribution.size(); ++mask) {
            u -= run.distribution[mask];
            if (u <= 0.0) {
                picked = mask;
                break;
            }
        }
        counts[format_mask(picked, n)] += 1;
    }
    return counts;
}

} // namespace qss
