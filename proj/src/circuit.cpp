// SPDX-License-Identifier: Apache-2.0

#include "qss/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qss {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidWidth: return "InvalidWidth";
    case ErrorCode::BadQubit: return "BadQubit";
    case ErrorCode::OverlappingOperands: return "OverlappingOperands";
    case ErrorCode::NotReversible: return "NotReversible";
    case ErrorCode::NotClassical: return "NotClassical";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::QubitBudgetExceeded: return "QubitBudgetExceeded";
    case ErrorCode::UseMeasureOp: return "UseMeasureOp";
    case ErrorCode::WidthOverflow: return "WidthOverflow";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::TargetTooWide: return "TargetTooWide";
    case ErrorCode::InvalidMask: return "InvalidMask";
    case ErrorCode::TargetExceedsMax: return "TargetExceedsMax";
    case ErrorCode::TooLargeForBruteForce: return "TooLargeForBruteForce";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NoSolutions: return "NoSolutions";
    case ErrorCode::InvalidBaseline: return "InvalidBaseline";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

const char* role_name(Role role) {
    switch (role) {
    case Role::InputX: return "input-x";
    case Role::AncillaY: return "ancilla-y";
    case Role::Value: return "value";
    case Role::Shadow: return "shadow";
    case Role::Sum: return "sum";
    case Role::Carry: return "carry";
    case Role::Compare: return "compare";
    case Role::Result: return "result";
    case Role::Scratch: return "scratch";
    }
    return "scratch";
}

Role role_from_name(std::string_view name) {
    static const std::pair<std::string_view, Role> table[] = {
        {"input-x", Role::InputX},   {"ancilla-y", Role::AncillaY},
        {"value", Role::Value},      {"shadow", Role::Shadow},
        {"sum", Role::Sum},          {"carry", Role::Carry},
        {"compare", Role::Compare},  {"result", Role::Result},
        {"scratch", Role::Scratch},
    };
    for (const auto& [text, role] : table) {
        if (text == name) return role;
    }
    throw Error(ErrorCode::ParseError, "unknown register role: " + std::string(name));
}

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::Z: return "z";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::MCX: return "mcx";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
    }
    return "?";
}

Register Circuit::new_register(std::size_t width, std::string name, Role role) {
    if (width == 0) {
        throw Error(ErrorCode::InvalidWidth, "register '" + name + "' has zero width");
    }
    Register reg;
    reg.name = std::move(name);
    reg.role = role;
    reg.qubits.reserve(width);
    for (std::size_t i = 0; i < width; ++i) {
        reg.qubits.push_back(static_cast<QubitId>(qubit_count_ + i));
    }
    qubit_count_ += width;
    registers_.push_back(reg);
    return reg;
}

void Circuit::validate_gate(const Gate& gate) const {
    for (QubitId q : gate.controls) {
        if (q >= qubit_count_) {
            throw Error(ErrorCode::BadQubit,
                        "control qubit " + std::to_string(q) + " out of range");
        }
    }
    for (QubitId q : gate.targets) {
        if (q >= qubit_count_) {
            throw Error(ErrorCode::BadQubit,
                        "target qubit " + std::to_string(q) + " out of range");
        }
    }
    std::set<QubitId> seen;
    for (QubitId q : gate.controls) {
        if (!seen.insert(q).second) {
            throw Error(ErrorCode::OverlappingOperands,
                        "duplicate control qubit " + std::to_string(q));
        }
    }
    for (QubitId q : gate.targets) {
        if (!seen.insert(q).second) {
            throw Error(ErrorCode::OverlappingOperands,
                        "qubit " + std::to_string(q) + " used as both control and target");
        }
    }

    const std::size_t nc = gate.controls.size();
    const std::size_t nt = gate.targets.size();
    bool shape_ok = false;
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Z:
    case GateKind::Measure: shape_ok = nc == 0 && nt == 1; break;
    case GateKind::CX: shape_ok = nc == 1 && nt == 1; break;
    case GateKind::CCX: shape_ok = nc == 2 && nt == 1; break;
    case GateKind::MCX: shape_ok = nc >= 1 && nt == 1; break;
    case GateKind::Barrier: shape_ok = nc == 0 && nt >= 1; break;
    }
    if (!shape_ok) {
        throw Error(ErrorCode::OverlappingOperands,
                    std::string("malformed ") + gate_kind_name(gate.kind) + " gate");
    }
}

void Circuit::append(Gate gate) {
    if (gate.kind == GateKind::MCX) {
        switch (gate.controls.size()) {
        case 0: gate.kind = GateKind::X; break;
        case 1: gate.kind = GateKind::CX; break;
        case 2: gate.kind = GateKind::CCX; break;
        default: break;
        }
    }
    validate_gate(gate);
    gates_.push_back(std::move(gate));
}

void Circuit::set_initial_one(QubitId q) {
    if (q >= qubit_count_) {
        throw Error(ErrorCode::BadQubit,
                    "initial-one qubit " + std::to_string(q) + " out of range");
    }
    initial_ones_.insert(q);
}

void Circuit::erase_gate(std::size_t index) {
    if (index >= gates_.size()) {
        throw Error(ErrorCode::BadQubit, "gate index out of range");
    }
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(index));
}

Circuit Circuit::prefix(std::size_t gate_count) const {
    Circuit copy = *this;
    if (gate_count < copy.gates_.size()) {
        copy.gates_.resize(gate_count);
    }
    return copy;
}

const Register* Circuit::find_register(std::string_view name) const {
    for (const Register& reg : registers_) {
        if (reg.name == name) return &reg;
    }
    return nullptr;
}

ResourceReport Circuit::resource_report() const {
    ResourceReport report;
    report.qubits = qubit_count_;
    for (const Gate& gate : gates_) {
        if (gate.kind == GateKind::Barrier || gate.kind == GateKind::Measure) {
            continue;
        }
        report.gate_counts[gate.kind] += 1;
        report.total_gates += 1;
        report.max_control_arity =
            std::max(report.max_control_arity, gate.controls.size());
    }
    // Classical |1> preparation counts as one X per qubit.
    if (!initial_ones_.empty()) {
        report.gate_counts[GateKind::X] += initial_ones_.size();
        report.total_gates += initial_ones_.size();
    }
    return report;
}

std::vector<Gate> reverse_fragment(std::span<const Gate> gates) {
    for (const Gate& gate : gates) {
        if (gate.kind == GateKind::Barrier || gate.kind == GateKind::Measure) {
            throw Error(ErrorCode::NotReversible,
                        std::string(gate_kind_name(gate.kind)) +
                            " gate has no inverse in a reversed fragment");
        }
    }
    std::vector<Gate> reversed(gates.rbegin(), gates.rend());
    return reversed;
}

namespace {

void append_id_list(std::string& out, const std::vector<QubitId>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(ids[i]);
    }
}

} // namespace

std::string export_text(const Circuit& circuit) {
    std::string out;
    out += "qubits " + std::to_string(circuit.qubit_count()) + "\n";
    for (const Register& reg : circuit.registers()) {
        out += "reg " + reg.name + " role:" + role_name(reg.role) + " [";
        append_id_list(out, reg.qubits);
        out += "]\n";
    }
    for (QubitId q : circuit.initial_ones()) {
        out += "init1 " + std::to_string(q) + "\n";
    }
    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::Z:
        case GateKind::Measure:
            out += std::string(gate_kind_name(gate.kind)) + " " +
                   std::to_string(gate.targets[0]) + "\n";
            break;
        case GateKind::CX:
            out += "cx " + std::to_string(gate.controls[0]) + " " +
                   std::to_string(gate.targets[0]) + "\n";
            break;
        case GateKind::CCX:
            out += "ccx " + std::to_string(gate.controls[0]) + " " +
                   std::to_string(gate.controls[1]) + " " +
                   std::to_string(gate.targets[0]) + "\n";
            break;
        case GateKind::MCX: {
            out += "mcx ";
            append_id_list(out, gate.controls);
            out += " " + std::to_string(gate.targets[0]) + "\n";
            break;
        }
        case GateKind::Barrier: {
            out += "barrier ";
            append_id_list(out, gate.targets);
            out += "\n";
            break;
        }
        }
    }
    return out;
}

namespace {

std::uint64_t parse_number(std::string_view token) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw Error(ErrorCode::ParseError, "bad number: " + std::string(token));
    }
    return value;
}

std::vector<QubitId> parse_id_list(std::string_view token) {
    std::vector<QubitId> ids;
    std::size_t pos = 0;
    while (pos <= token.size()) {
        std::size_t comma = token.find(',', pos);
        std::string_view piece = token.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (piece.empty()) {
            throw Error(ErrorCode::ParseError, "empty id in list");
        }
        ids.push_back(static_cast<QubitId>(parse_number(piece)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return ids;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ') ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

} // namespace

Circuit parse_text(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    std::size_t declared_qubits = 0;
    std::size_t named_qubits = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                          : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (line.empty()) continue;

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        std::string_view op = tokens[0];

        if (op == "qubits") {
            if (have_header || tokens.size() != 2) {
                throw Error(ErrorCode::ParseError, "bad qubits line");
            }
            declared_qubits = parse_number(tokens[1]);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw Error(ErrorCode::ParseError, "circuit text must start with 'qubits N'");
        }

        if (op == "reg") {
            // reg <name> role:<role> [<id>,...]
            if (tokens.size() != 4 || tokens[2].substr(0, 5) != "role:" ||
                tokens[3].front() != '[' || tokens[3].back() != ']') {
                throw Error(ErrorCode::ParseError, "bad reg line");
            }
            Role role = role_from_name(tokens[2].substr(5));
            std::vector<QubitId> ids =
                parse_id_list(tokens[3].substr(1, tokens[3].size() - 2));
            // Registers allocate the arena in order; ids must continue it.
            for (QubitId q : ids) {
                if (q != named_qubits) {
                    throw Error(ErrorCode::ParseError,
                                "register ids must be contiguous from 0");
                }
                ++named_qubits;
            }
            circuit.new_register(ids.size(), std::string(tokens[1]), role);
            continue;
        }

        // Unnamed tail of the arena: grow it before the first non-reg line.
        if (circuit.qubit_count() < declared_qubits) {
            std::size_t missing = declared_qubits - circuit.qubit_count();
            circuit.new_register(missing, "_anon", Role::Scratch);
        }

        if (op == "init1") {
            if (tokens.size() != 2) throw Error(ErrorCode::ParseError, "bad init1 line");
            circuit.set_initial_one(static_cast<QubitId>(parse_number(tokens[1])));
        } else if (op == "x" || op == "h" || op == "z" || op == "measure") {
            if (tokens.size() != 2) throw Error(ErrorCode::ParseError, "bad gate line");
            QubitId t = static_cast<QubitId>(parse_number(tokens[1]));
            if (op == "x") circuit.append(Gate::x(t));
            else if (op == "h") circuit.append(Gate::h(t));
            else if (op == "z") circuit.append(Gate::z(t));
            else circuit.append(Gate::measure(t));
        } else if (op == "cx") {
            if (tokens.size() != 3) throw Error(ErrorCode::ParseError, "bad cx line");
            circuit.append(Gate::cx(static_cast<QubitId>(parse_number(tokens[1])),
                                    static_cast<QubitId>(parse_number(tokens[2]))));
        } else if (op == "ccx") {
            if (tokens.size() != 4) throw Error(ErrorCode::ParseError, "bad ccx line");
            circuit.append(Gate::ccx(static_cast<QubitId>(parse_number(tokens[1])),
                                     static_cast<QubitId>(parse_number(tokens[2])),
                                     static_cast<QubitId>(parse_number(tokens[3]))));
        } else if (op == "mcx") {
            if (tokens.size() != 3) throw Error(ErrorCode::ParseError, "bad mcx line");
            circuit.append(Gate::mcx(parse_id_list(tokens[1]),
                                     static_cast<QubitId>(parse_number(tokens[2]))));
        } else if (op == "barrier") {
            if (tokens.size() != 2) throw Error(ErrorCode::ParseError, "bad barrier line");
            circuit.append(Gate::barrier(parse_id_list(tokens[1])));
        } else {
            throw Error(ErrorCode::ParseError, "unknown line: " + std::string(op));
        }
    }

    if (!have_header) {
        throw Error(ErrorCode::ParseError, "empty circuit text");
    }
    if (circuit.qubit_count() < declared_qubits) {
        circuit.new_register(declared_qubits - circuit.qubit_count(), "_anon",
                             Role::Scratch);
    }
    if (circuit.qubit_count() != declared_qubits) {
        throw Error(ErrorCode::ParseError, "register widths exceed declared qubit count");
    }
    return circuit;
}

} // namespace qss
