// SPDX-License-Identifier: Apache-2.0

#include "qss/compare.hpp"

#include "qss/qarith.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace qss {

MatchInterval match_interval(std::uint64_t target, int k) {
    if (k < 0) {
        throw Error(ErrorCode::InvalidMask, "mask bit count must be non-negative");
    }
    MatchInterval interval;
    interval.k = k;
    const std::uint64_t span = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    interval.low = target & ~span;
    interval.high = interval.low + span;
    return interval;
}

namespace {

std::string seq_name(const Circuit& circuit, const char* prefix) {
    return prefix + std::to_string(circuit.registers().size());
}

/// Builds the `same` register for z bits at positions [k, width) against
/// the matching target bits. t_bits, when present, are the target-register
/// qubits aligned with the same global positions (fold_constant off).
Register emit_same_bits(Circuit& circuit, const Register& z, int width, int k,
                        std::uint64_t target, const std::vector<QubitId>* t_bits) {
    const int m = width - k;
    Register same = circuit.new_register(static_cast<std::size_t>(m),
                                         seq_name(circuit, "same"), Role::Compare);
    for (int i = 0; i < m; ++i) {
        const int g = i + k;
        const QubitId same_i = same.qubits[static_cast<std::size_t>(i)];
        if (g < static_cast<int>(z.width())) {
            circuit.append(Gate::cx(z.qubits[static_cast<std::size_t>(g)], same_i));
        }
        if (t_bits) {
            circuit.append(Gate::cx((*t_bits)[static_cast<std::size_t>(i)], same_i));
        } else if ((target >> g) & 1) {
            circuit.append(Gate::x(same_i));
        }
    }
    return same;
}

QubitId emit_all_zero(Circuit& circuit, const Register& same, EqualityBackend backend) {
    return backend == EqualityBackend::Mcx ? emit_mcx_all_zero(circuit, same)
                                           : emit_logstar_all_zero(circuit, same);
}

} // namespace

Register emit_xor_compare(Circuit& circuit, const Register& z, std::uint64_t target,
                          int width, bool fold_constant) {
    if (num_bits(target) > width) {
        throw Error(ErrorCode::TargetTooWide,
                    "target needs more than " + std::to_string(width) + " bits");
    }
    if (static_cast<int>(z.width()) > width) {
        throw Error(ErrorCode::WidthMismatch, "compared register wider than width");
    }
    if (fold_constant) {
        return emit_same_bits(circuit, z, width, 0, target, nullptr);
    }
    Register t_reg = circuit.new_register(static_cast<std::size_t>(width),
                                          seq_name(circuit, "t"), Role::Value);
    for (int i = 0; i < width; ++i) {
        if ((target >> i) & 1) circuit.set_initial_one(t_reg.qubits[static_cast<std::size_t>(i)]);
    }
    std::vector<QubitId> t_bits(t_reg.qubits.begin(), t_reg.qubits.end());
    return emit_same_bits(circuit, z, width, 0, target, &t_bits);
}

QubitId emit_mcx_all_zero(Circuit& circuit, const Register& same) {
    Register result = circuit.new_register(1, seq_name(circuit, "res"), Role::Result);
    for (QubitId q : same.qubits) circuit.append(Gate::x(q));
    circuit.append(Gate::mcx(same.qubits, result.qubits[0]));
    for (QubitId q : same.qubits) circuit.append(Gate::x(q));
    return result.qubits[0];
}

namespace {

/// Adds one bit into an accumulator holding a count known to be at most
/// max_count before the increment. The carry ripples through CCX into fresh
/// scratch qubits, so no gate has more than two controls.
void emit_controlled_increment(Circuit& circuit, QubitId bit,
                               std::span<const QubitId> acc, int reach,
                               std::vector<QubitId>& scratch,
                               std::size_t& next_scratch) {
    QubitId carry = bit;
    for (int i = 0; i < reach; ++i) {
        if (i == reach - 1) {
            circuit.append(Gate::cx(carry, acc[static_cast<std::size_t>(i)]));
        } else {
            QubitId next = scratch[next_scratch++];
            circuit.append(Gate::ccx(carry, acc[static_cast<std::size_t>(i)], next));
            circuit.append(Gate::cx(carry, acc[static_cast<std::size_t>(i)]));
            carry = next;
        }
    }
}

} // namespace

QubitId emit_logstar_all_zero(Circuit& circuit, const Register& same) {
    std::vector<QubitId> current(same.qubits.begin(), same.qubits.end());

    while (current.size() > 2) {
        const int m = static_cast<int>(current.size());
        const int acc_width = num_bits(static_cast<std::uint64_t>(m));

        // Scratch demand is fixed by the increment schedule: the t-th bit
        // ripples through min(num_bits(t), acc_width) positions.
        std::size_t scratch_count = 0;
        for (int t = 1; t <= m; ++t) {
            scratch_count += static_cast<std::size_t>(
                std::min(num_bits(static_cast<std::uint64_t>(t)), acc_width) - 1);
        }

        Register acc = circuit.new_register(static_cast<std::size_t>(acc_width),
                                            seq_name(circuit, "pc"), Role::Scratch);
        std::vector<QubitId> scratch;
        if (scratch_count > 0) {
            Register sc = circuit.new_register(scratch_count, seq_name(circuit, "pca"),
                                               Role::Scratch);
            scratch.assign(sc.qubits.begin(), sc.qubits.end());
        }

        std::size_t next_scratch = 0;
        for (int t = 1; t <= m; ++t) {
            const int reach =
                std::min(num_bits(static_cast<std::uint64_t>(t)), acc_width);
            emit_controlled_increment(circuit, current[static_cast<std::size_t>(t - 1)],
                                      acc.qubits, reach, scratch, next_scratch);
        }
        current.assign(acc.qubits.begin(), acc.qubits.end());
    }

    Register result = circuit.new_register(1, seq_name(circuit, "res"), Role::Result);
    for (QubitId q : current) circuit.append(Gate::x(q));
    if (current.size() == 1) {
        circuit.append(Gate::cx(current[0], result.qubits[0]));
    } else {
        circuit.append(Gate::ccx(current[0], current[1], result.qubits[0]));
    }
    for (QubitId q : current) circuit.append(Gate::x(q));
    return result.qubits[0];
}

QubitId emit_masked_compare(Circuit& circuit, const Register& z, std::uint64_t target,
                            int width, int k, EqualityBackend backend,
                            bool fold_constant) {
    if (k < 0 || k >= width) {
        throw Error(ErrorCode::InvalidMask,
                    "mask bits " + std::to_string(k) + " must be below width " +
                        std::to_string(width));
    }
    if (num_bits(target) > width) {
        throw Error(ErrorCode::TargetTooWide,
                    "target needs more than " + std::to_string(width) + " bits");
    }
    if (static_cast<int>(z.width()) > width) {
        throw Error(ErrorCode::WidthMismatch, "compared register wider than width");
    }

    Register same;
    if (fold_constant) {
        same = emit_same_bits(circuit, z, width, k, target, nullptr);
    } else {
        // The target register carries all of the target's bits, low ones
        // included, the same way a value register would.
        Register t_reg = circuit.new_register(static_cast<std::size_t>(width),
                                              seq_name(circuit, "t"), Role::Value);
        for (int i = 0; i < width; ++i) {
            if ((target >> i) & 1) {
                circuit.set_initial_one(t_reg.qubits[static_cast<std::size_t>(i)]);
            }
        }
        std::vector<QubitId> t_bits(t_reg.qubits.begin() + k, t_reg.qubits.end());
        same = emit_same_bits(circuit, z, width, k, target, &t_bits);
    }
    return emit_all_zero(circuit, same, backend);
}

} // namespace qss
