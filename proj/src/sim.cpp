// SPDX-License-Identifier: Apache-2.0

#include "qss/sim.hpp"

#include <cmath>

namespace qss {

BasisState::BasisState(std::size_t width)
    : width_(width), words_((width + 63) / 64, 0) {}

BasisState BasisState::from_value(std::size_t width, std::uint64_t value) {
    BasisState state(width);
    for (std::size_t i = 0; i < width && i < 64; ++i) {
        if ((value >> i) & 1) state.set(static_cast<QubitId>(i), true);
    }
    return state;
}

bool BasisState::get(QubitId q) const {
    return (words_[q >> 6] >> (q & 63)) & 1;
}

void BasisState::set(QubitId q, bool value) {
    if (value) {
        words_[q >> 6] |= std::uint64_t{1} << (q & 63);
    } else {
        words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
    }
}

void BasisState::flip(QubitId q) {
    words_[q >> 6] ^= std::uint64_t{1} << (q & 63);
}

std::uint64_t BasisState::slice_value(const Register& reg) const {
    if (reg.width() > 64) {
        throw Error(ErrorCode::WidthMismatch, "register wider than 64 bits");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < reg.width(); ++i) {
        if (get(reg.qubits[i])) value |= std::uint64_t{1} << i;
    }
    return value;
}

void apply_classical_gate(const Gate& gate, BasisState& state) {
    switch (gate.kind) {
    case GateKind::X:
        state.flip(gate.targets[0]);
        return;
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
        for (QubitId c : gate.controls) {
            if (!state.get(c)) return;
        }
        state.flip(gate.targets[0]);
        return;
    }
    case GateKind::Barrier:
        return;
    default:
        throw Error(ErrorCode::NotClassical,
                    std::string(gate_kind_name(gate.kind)) +
                        " gate is not classical-reversible");
    }
}

BasisState run_basis(const Circuit& circuit, const BasisState& input) {
    if (input.width() != circuit.qubit_count()) {
        throw Error(ErrorCode::WidthMismatch,
                    "basis state width " + std::to_string(input.width()) +
                        " does not match circuit qubit count " +
                        std::to_string(circuit.qubit_count()));
    }
    BasisState state = input;
    for (QubitId q : circuit.initial_ones()) {
        state.flip(q);
    }
    for (const Gate& gate : circuit.gates()) {
        apply_classical_gate(gate, state);
    }
    return state;
}

StateVector::StateVector(std::size_t qubit_count)
    : qubits_(qubit_count), amps_(std::size_t{1} << qubit_count) {
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t qubit_count, std::uint64_t index) {
    StateVector state(qubit_count);
    state.amps_[0] = 0.0;
    state.amps_[index] = 1.0;
    return state;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

} // namespace

StateVector simulate(const Circuit& circuit, StateVector initial,
                     const SimOptions& options) {
    const std::size_t q = circuit.qubit_count();
    if (q > options.qubit_budget) {
        throw Error(ErrorCode::QubitBudgetExceeded,
                    std::to_string(q) + " qubits exceed the statevector budget of " +
                        std::to_string(options.qubit_budget));
    }
    if (initial.qubit_count() != q) {
        throw Error(ErrorCode::WidthMismatch,
                    "statevector size does not match circuit qubit count");
    }

    const std::uint64_t n = std::uint64_t{1} << q;

    auto controlled_x = [&](std::uint64_t cmask, std::uint64_t tbit) {
        for (std::uint64_t i = 0; i < n; ++i) {
            if ((i & cmask) == cmask && !(i & tbit)) {
                std::swap(initial.amp(i), initial.amp(i | tbit));
            }
        }
    };

    for (QubitId qb : circuit.initial_ones()) {
        controlled_x(0, std::uint64_t{1} << qb);
    }

    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::X:
            controlled_x(0, std::uint64_t{1} << gate.targets[0]);
            break;
        case GateKind::H: {
            const std::uint64_t tbit = std::uint64_t{1} << gate.targets[0];
            for (std::uint64_t i = 0; i < n; ++i) {
                if (!(i & tbit)) {
                    const auto a0 = initial.amp(i);
                    const auto a1 = initial.amp(i | tbit);
                    initial.amp(i) = (a0 + a1) * kInvSqrt2;
                    initial.amp(i | tbit) = (a0 - a1) * kInvSqrt2;
                }
            }
            break;
        }
        case GateKind::Z: {
            const std::uint64_t tbit = std::uint64_t{1} << gate.targets[0];
            for (std::uint64_t i = 0; i < n; ++i) {
                if (i & tbit) initial.amp(i) = -initial.amp(i);
            }
            break;
        }
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: {
            std::uint64_t cmask = 0;
            for (QubitId c : gate.controls) cmask |= std::uint64_t{1} << c;
            controlled_x(cmask, std::uint64_t{1} << gate.targets[0]);
            break;
        }
        case GateKind::Barrier:
            break;
        case GateKind::Measure:
            throw Error(ErrorCode::UseMeasureOp,
                        "Measure gates are not simulated; use measure_register");
        }
    }
    return initial;
}

std::vector<double> measure_register(const StateVector& state, const Register& reg) {
    for (QubitId q : reg.qubits) {
        if (q >= state.qubit_count()) {
            throw Error(ErrorCode::BadQubit, "register qubit outside the state");
        }
    }
    std::vector<double> probs(std::size_t{1} << reg.width(), 0.0);
    const std::uint64_t n = state.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t pattern = 0;
        for (std::size_t b = 0; b < reg.width(); ++b) {
            if ((i >> reg.qubits[b]) & 1) pattern |= std::uint64_t{1} << b;
        }
        probs[pattern] += std::norm(state.amp(i));
    }
    return probs;
}

} // namespace qss
