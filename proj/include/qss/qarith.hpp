// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/circuit.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qss {

/// Smallest register width that represents v. num_bits(0) is 1: a
/// zero-width register is meaningless in the IR.
int num_bits(std::uint64_t v);

/// Register sizing policy for a subset-sum circuit.
enum class WidthMode {
    Fixed32,         // every value and partial sum on 32 qubits
    VarElemFixedSum, // values at num_bits(a_i), all sums at num_bits(sum of all)
    VarAll,          // values at num_bits(a_i), sums sized per running prefix
};

/// How carry qubits are provisioned during ripple addition.
enum class CarryMode {
    Fresh,       // one fresh carry qubit per carry-generating bit position
    SharedReuse, // a single carry qubit, uncomputed and recycled per position
};

/// Planned widths for one instance: one entry per value, and one per
/// partial-sum register (n-1 of them). sum_widths is non-decreasing and its
/// last entry equals total_width.
struct WidthPlan {
    std::vector<int> element_widths;
    std::vector<int> sum_widths;
    int total_width = 0;
};

WidthPlan plan_widths(std::span<const std::uint64_t> values, WidthMode mode);

/// Single-bit full adder: sum_out = v ^ w ^ cin via three CX, and
/// cout = vw ^ v cin ^ w cin via three CCX. sum_out and cout must be fresh
/// |0> qubits for the outputs to be meaningful.
void emit_full_adder(Circuit& circuit, QubitId v, QubitId w, QubitId cin,
                     QubitId sum_out, QubitId cout);

/// Result of a ripple addition, with enough detail for tests to watch the
/// shared carry qubit: checkpoints are gate indices right after each
/// recycle of the carry, at which it is back in |0> on every input.
struct RippleAdd {
    Register out;
    std::optional<Register> carries;
    std::vector<std::size_t> carry_checkpoints;
};

RippleAdd emit_ripple_add_detail(Circuit& circuit, const Register& a,
                                 const Register& b, int out_width,
                                 CarryMode carry_mode);

/// Adds two registers of possibly different widths into a fresh register of
/// out_width qubits, holding a+b mod 2^out_width on every basis input.
/// Where one operand is shorter its missing bits are constant 0 and the
/// corresponding gates are elided; the final carry lands directly in the
/// top output bit when no operand bits remain above it.
Register emit_ripple_add(Circuit& circuit, const Register& a, const Register& b,
                         int out_width, CarryMode carry_mode);

} // namespace qss
