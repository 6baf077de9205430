// SPDX-License-Identifier: Apache-2.0

#include "qss/qarith.hpp"

#include <algorithm>
#include <bit>

namespace qss {

int num_bits(std::uint64_t v) {
    if (v == 0) return 1;
    return std::bit_width(v);
}

WidthPlan plan_widths(std::span<const std::uint64_t> values, WidthMode mode) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyInstance, "no values to plan widths for");
    }
    for (std::uint64_t v : values) {
        if (v < 1) {
            throw Error(ErrorCode::InvalidValue, "values must be positive");
        }
    }

    WidthPlan plan;
    const std::size_t n = values.size();
    std::uint64_t total = 0;
    for (std::uint64_t v : values) total += v;

    switch (mode) {
    case WidthMode::Fixed32:
        plan.element_widths.assign(n, 32);
        plan.sum_widths.assign(n >= 1 ? n - 1 : 0, 32);
        plan.total_width = 32;
        break;
    case WidthMode::VarElemFixedSum: {
        const int w = num_bits(total);
        for (std::uint64_t v : values) plan.element_widths.push_back(num_bits(v));
        plan.sum_widths.assign(n - 1, w);
        plan.total_width = n == 1 ? plan.element_widths[0] : w;
        break;
    }
    case WidthMode::VarAll: {
        for (std::uint64_t v : values) plan.element_widths.push_back(num_bits(v));
        std::uint64_t prefix = values[0];
        for (std::size_t j = 1; j < n; ++j) {
            prefix += values[j];
            plan.sum_widths.push_back(num_bits(prefix));
        }
        plan.total_width = n == 1 ? plan.element_widths[0] : plan.sum_widths.back();
        break;
    }
    }
    return plan;
}

void emit_full_adder(Circuit& circuit, QubitId v, QubitId w, QubitId cin,
                     QubitId sum_out, QubitId cout) {
    const QubitId ids[] = {v, w, cin, sum_out, cout};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            if (ids[i] == ids[j]) {
                throw Error(ErrorCode::OverlappingOperands,
                            "full adder operands must be five distinct qubits");
            }
        }
    }
    circuit.append(Gate::cx(v, sum_out));
    circuit.append(Gate::cx(w, sum_out));
    circuit.append(Gate::cx(cin, sum_out));
    circuit.append(Gate::ccx(v, w, cout));
    circuit.append(Gate::ccx(v, cin, cout));
    circuit.append(Gate::ccx(w, cin, cout));
}

namespace {

std::string seq_name(const Circuit& circuit, const char* prefix) {
    return prefix + std::to_string(circuit.registers().size());
}

// Emits the carry CCX triple for up to three addend terms into `target`.
void emit_majority(Circuit& circuit, std::span<const QubitId> terms, QubitId target) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            circuit.append(Gate::ccx(terms[i], terms[j], target));
        }
    }
}

struct Position {
    std::vector<QubitId> operands; // register bits present at this position
    bool has_carry_in = false;
};

RippleAdd ripple_fresh(Circuit& circuit, const Register& a, const Register& b,
                       int out_width) {
    const int p = static_cast<int>(a.width());
    const int q = static_cast<int>(b.width());
    const int top = std::max(p, q);

    // Count carry qubits first so they sit in one contiguous register:
    // position j feeds a fresh carry when it can generate one and position
    // j+1 still has operand bits of its own.
    int carry_count = 0;
    {
        bool carry_in = false;
        for (int j = 0; j < out_width; ++j) {
            int terms = (j < p) + (j < q) + (carry_in ? 1 : 0);
            if (terms == 0) break;
            bool gen = terms >= 2 && j + 1 < out_width;
            if (gen && j + 1 < top) ++carry_count;
            if (gen && j + 1 >= top) break; // carry absorbed by the top bit
            carry_in = gen;
        }
    }

    RippleAdd result;
    result.out = circuit.new_register(static_cast<std::size_t>(out_width),
                                      seq_name(circuit, "s"), Role::Sum);
    std::size_t next_carry = 0;
    if (carry_count > 0) {
        result.carries = circuit.new_register(static_cast<std::size_t>(carry_count),
                                              seq_name(circuit, "c"), Role::Carry);
    }

    std::optional<QubitId> carry_in;
    for (int j = 0; j < out_width; ++j) {
        std::vector<QubitId> terms;
        if (j < p) terms.push_back(a.qubits[static_cast<std::size_t>(j)]);
        if (j < q) terms.push_back(b.qubits[static_cast<std::size_t>(j)]);
        if (carry_in) terms.push_back(*carry_in);
        if (terms.empty()) break;

        const QubitId out_j = result.out.qubits[static_cast<std::size_t>(j)];
        for (QubitId t : terms) circuit.append(Gate::cx(t, out_j));

        carry_in.reset();
        if (terms.size() >= 2 && j + 1 < out_width) {
            if (j + 1 < top) {
                QubitId c = result.carries->qubits[next_carry++];
                emit_majority(circuit, terms, c);
                carry_in = c;
            } else {
                // No operand bits above: the carry is the top of the sum.
                emit_majority(circuit, terms,
                              result.out.qubits[static_cast<std::size_t>(j + 1)]);
                break;
            }
        }
    }
    return result;
}

RippleAdd ripple_shared(Circuit& circuit, const Register& a, const Register& b,
                        int out_width) {
    const int p = static_cast<int>(a.width());
    const int q = static_cast<int>(b.width());

    // Does any position consume a carry? Only then is the shared qubit needed.
    bool any_carry = false;
    {
        bool carry_in = false;
        for (int j = 0; j < out_width; ++j) {
            int terms = (j < p) + (j < q) + (carry_in ? 1 : 0);
            if (terms == 0) break;
            if (carry_in) any_carry = true;
            carry_in = terms >= 2 && j + 1 < out_width;
        }
    }

    RippleAdd result;
    result.out = circuit.new_register(static_cast<std::size_t>(out_width),
                                      seq_name(circuit, "s"), Role::Sum);
    std::optional<QubitId> shared;
    if (any_carry) {
        result.carries = circuit.new_register(1, seq_name(circuit, "c"), Role::Carry);
        shared = result.carries->qubits[0];
    }

    // The carry into position j is recomputed on demand from position j-1:
    // its sum bit temporarily has the operand bits subtracted off (CX), which
    // leaves exactly the old carry-in, so the majority triple can rebuild the
    // carry-out. Replaying the same gates in reverse returns the shared qubit
    // to |0> once every use of the carry value is emitted.
    Position prev;
    bool has_carry_in = false;
    for (int j = 0; j < out_width; ++j) {
        std::vector<QubitId> operands;
        if (j < p) operands.push_back(a.qubits[static_cast<std::size_t>(j)]);
        if (j < q) operands.push_back(b.qubits[static_cast<std::size_t>(j)]);
        if (operands.empty() && !has_carry_in) break;

        std::size_t materialize_begin = 0;
        std::size_t materialize_end = 0;
        if (has_carry_in) {
            materialize_begin = circuit.gates().size();
            if (!prev.has_carry_in) {
                // First carry of the chain: plain AND of the two operand bits.
                circuit.append(Gate::ccx(prev.operands[0], prev.operands[1], *shared));
            } else {
                const QubitId s_prev =
                    result.out.qubits[static_cast<std::size_t>(j - 1)];
                for (QubitId t : prev.operands) circuit.append(Gate::cx(t, s_prev));
                std::vector<QubitId> carry_terms = prev.operands;
                carry_terms.push_back(s_prev);
                emit_majority(circuit, carry_terms, *shared);
                for (auto it = prev.operands.rbegin(); it != prev.operands.rend(); ++it) {
                    circuit.append(Gate::cx(*it, s_prev));
                }
            }
            materialize_end = circuit.gates().size();
        }

        const QubitId out_j = result.out.qubits[static_cast<std::size_t>(j)];
        for (QubitId t : operands) circuit.append(Gate::cx(t, out_j));
        if (has_carry_in) circuit.append(Gate::cx(*shared, out_j));

        if (has_carry_in) {
            const auto& gates = circuit.gates();
            std::vector<Gate> fragment(gates.begin() + static_cast<std::ptrdiff_t>(
                                                            materialize_begin),
                                       gates.begin() + static_cast<std::ptrdiff_t>(
                                                           materialize_end));
            for (const Gate& g : reverse_fragment(fragment)) circuit.append(g);
            result.carry_checkpoints.push_back(circuit.gates().size());
        }

        int terms = static_cast<int>(operands.size()) + (has_carry_in ? 1 : 0);
        bool gen = terms >= 2 && j + 1 < out_width;
        prev = Position{std::move(operands), has_carry_in};
        has_carry_in = gen;
    }
    return result;
}

} // namespace

RippleAdd emit_ripple_add_detail(Circuit& circuit, const Register& a,
                                 const Register& b, int out_width,
                                 CarryMode carry_mode) {
    if (out_width < static_cast<int>(std::max(a.width(), b.width()))) {
        throw Error(ErrorCode::WidthOverflow,
                    "output width " + std::to_string(out_width) +
                        " is narrower than an operand");
    }
    if (carry_mode == CarryMode::SharedReuse) {
        return ripple_shared(circuit, a, b, out_width);
    }
    return ripple_fresh(circuit, a, b, out_width);
}

Register emit_ripple_add(Circuit& circuit, const Register& a, const Register& b,
                         int out_width, CarryMode carry_mode) {
    return emit_ripple_add_detail(circuit, a, b, out_width, carry_mode).out;
}

} // namespace qss
