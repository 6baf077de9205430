// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/error.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qss {

using QubitId = std::uint32_t;

/// What a register is for. Purely bookkeeping, but it is what makes the
/// resource reports and exported circuits readable.
enum class Role {
    InputX,
    AncillaY,
    Value,
    Shadow,
    Sum,
    Carry,
    Compare,
    Result,
    Scratch,
};

const char* role_name(Role role);
Role role_from_name(std::string_view name); // throws ParseError

/// Named run of qubits. Bit 0 of every register is the least significant
/// bit; all arithmetic code relies on that convention.
struct Register {
    std::string name;
    std::vector<QubitId> qubits;
    Role role = Role::Scratch;

    std::size_t width() const noexcept { return qubits.size(); }
    QubitId operator[](std::size_t bit) const { return qubits.at(bit); }
};

enum class GateKind { X, H, Z, CX, CCX, MCX, Barrier, Measure };

const char* gate_kind_name(GateKind kind);

/// One gate. Controls and targets are disjoint; arity is fixed by kind
/// (Barrier spans >= 1 qubits, every other kind has exactly one target).
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<QubitId> controls;
    std::vector<QubitId> targets;

    static Gate x(QubitId t) { return {GateKind::X, {}, {t}}; }
    static Gate h(QubitId t) { return {GateKind::H, {}, {t}}; }
    static Gate z(QubitId t) { return {GateKind::Z, {}, {t}}; }
    static Gate cx(QubitId c, QubitId t) { return {GateKind::CX, {c}, {t}}; }
    static Gate ccx(QubitId c1, QubitId c2, QubitId t) {
        return {GateKind::CCX, {c1, c2}, {t}};
    }
    static Gate mcx(std::vector<QubitId> cs, QubitId t) {
        return {GateKind::MCX, std::move(cs), {t}};
    }
    static Gate barrier(std::vector<QubitId> qs) {
        return {GateKind::Barrier, {}, std::move(qs)};
    }
    static Gate measure(QubitId t) { return {GateKind::Measure, {}, {t}}; }

    bool operator==(const Gate&) const = default;
};

/// Qubit count plus per-kind gate totals. Barrier and Measure are cosmetic
/// and never counted; each qubit classically prepared in |1> counts as one
/// X so totals match a construction that initializes registers with X gates.
struct ResourceReport {
    std::size_t qubits = 0;
    std::map<GateKind, std::size_t> gate_counts;
    std::size_t total_gates = 0;
    std::size_t max_control_arity = 0;
};

/// Gate-level IR: an indexed qubit arena, named registers over it, an
/// ordered gate list, and the set of qubits prepared in |1> before the
/// gates run. Mutable while a single builder constructs it; treated as
/// immutable afterwards.
class Circuit {
public:
    Circuit() = default;

    /// Allocates `width` fresh contiguous qubits as a named register.
    Register new_register(std::size_t width, std::string name, Role role);

    /// Appends a gate after validating ids and operand disjointness.
    /// MCX is canonicalized: 0 controls -> X, 1 -> CX, 2 -> CCX.
    void append(Gate gate);

    /// Marks a qubit as classically prepared in |1>.
    void set_initial_one(QubitId q);

    /// Removes the gate at `index` (construction-time surgery, e.g. for
    /// mutation tests).
    void erase_gate(std::size_t index);

    /// Copy of this circuit keeping only the first `gate_count` gates.
    Circuit prefix(std::size_t gate_count) const;

    std::size_t qubit_count() const noexcept { return qubit_count_; }
    const std::vector<Register>& registers() const noexcept { return registers_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    const std::set<QubitId>& initial_ones() const noexcept { return initial_ones_; }

    const Register* find_register(std::string_view name) const;

    ResourceReport resource_report() const;

private:
    void validate_gate(const Gate& gate) const;

    std::size_t qubit_count_ = 0;
    std::vector<Register> registers_;
    std::vector<Gate> gates_;
    std::set<QubitId> initial_ones_;
};

/// Reverses a fragment of self-inverse gates; appending the result after
/// the fragment yields the identity on every basis state. Barrier and
/// Measure are rejected.
std::vector<Gate> reverse_fragment(std::span<const Gate> gates);

/// Deterministic text form of a circuit. Round-trips through parse_text.
std::string export_text(const Circuit& circuit);
Circuit parse_text(std::string_view text);

} // namespace qss
