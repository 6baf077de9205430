// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/circuit.hpp"
#include "qss/rng.hpp"
#include "qss/sim.hpp"

#include <vector>

namespace qss::test {

/// Random circuit over `qubits` fresh qubits made of self-inverse classical
/// gates (X/CX/CCX/MCX). Returns the circuit with one register spanning it.
inline Circuit random_classical_circuit(std::size_t qubits, std::size_t gate_count,
                                        std::uint64_t seed, bool with_initial_ones = false) {
    Circuit circuit;
    circuit.new_register(qubits, "q", Role::Scratch);
    SplitMix64 rng(seed);

    if (with_initial_ones) {
        for (std::size_t q = 0; q < qubits; ++q) {
            if (rng.next() % 4 == 0) circuit.set_initial_one(static_cast<QubitId>(q));
        }
    }

    for (std::size_t g = 0; g < gate_count; ++g) {
        const std::size_t arity = 1 + rng.next() % std::min<std::size_t>(qubits, 4);
        // Draw `arity` distinct qubits; the last is the target.
        std::vector<QubitId> picked;
        while (picked.size() < arity) {
            const QubitId q = static_cast<QubitId>(rng.next() % qubits);
            bool dup = false;
            for (QubitId p : picked) dup = dup || p == q;
            if (!dup) picked.push_back(q);
        }
        const QubitId target = picked.back();
        picked.pop_back();
        if (picked.empty()) {
            circuit.append(Gate::x(target));
        } else {
            circuit.append(Gate::mcx(picked, target)); // canonicalized by arity
        }
    }
    return circuit;
}

/// Basis input with the given low-qubit pattern.
inline BasisState input_with_bits(const Circuit& circuit, std::uint64_t pattern) {
    return BasisState::from_value(circuit.qubit_count(), pattern);
}

} // namespace qss::test
