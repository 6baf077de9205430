// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/circuit.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace qss {

/// One computational-basis state over a circuit's arena, packed 64 qubits
/// per word so classical-reversible verification scales to hundreds of
/// qubits.
class BasisState {
public:
    explicit BasisState(std::size_t width);
    static BasisState from_value(std::size_t width, std::uint64_t value);

    std::size_t width() const noexcept { return width_; }
    bool get(QubitId q) const;
    void set(QubitId q, bool value);
    void flip(QubitId q);

    /// Reads a register's bit pattern as an integer (width <= 64).
    std::uint64_t slice_value(const Register& reg) const;

    bool operator==(const BasisState&) const = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Applies one classical-reversible gate (X/CX/CCX/MCX; Barrier is a no-op)
/// to a basis state in place.
void apply_classical_gate(const Gate& gate, BasisState& state);

/// Runs a classical-reversible circuit on one basis input. The circuit's
/// initial-one qubits are flipped before the gate list is applied.
BasisState run_basis(const Circuit& circuit, const BasisState& input);

/// Dense amplitude vector; index bit i corresponds to qubit i.
class StateVector {
public:
    explicit StateVector(std::size_t qubit_count); // |0...0>
    static StateVector basis(std::size_t qubit_count, std::uint64_t index);

    std::size_t qubit_count() const noexcept { return qubits_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::complex<double>& amp(std::uint64_t index) { return amps_[index]; }
    const std::complex<double>& amp(std::uint64_t index) const { return amps_[index]; }

    double norm() const;

private:
    std::size_t qubits_ = 0;
    std::vector<std::complex<double>> amps_;
};

struct SimOptions {
    std::size_t qubit_budget = 26;
};

/// Full statevector execution. Initial-one qubits are flipped first, then
/// gates apply in order; Barrier is the identity and Measure is rejected
/// (measurement is a separate operation).
StateVector simulate(const Circuit& circuit, StateVector initial,
                     const SimOptions& options = {});

/// Marginal distribution over a register's 2^width bit patterns.
std::vector<double> measure_register(const StateVector& state, const Register& reg);

} // namespace qss
