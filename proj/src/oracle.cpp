// SPDX-License-Identifier: Apache-2.0

#include "qss/oracle.hpp"

#include "qss/sim.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace qss {

namespace {

void validate_instance(const SSPInstance& instance) {
    if (instance.values.empty()) {
        throw Error(ErrorCode::EmptyInstance, "instance has no values");
    }
    for (std::uint64_t v : instance.values) {
        if (v < 1) throw Error(ErrorCode::InvalidValue, "values must be positive");
    }
    if (instance.target < 1) {
        throw Error(ErrorCode::InvalidValue, "target must be positive");
    }
}

std::uint64_t checked_total(const SSPInstance& instance) {
    std::uint64_t total = 0;
    for (std::uint64_t v : instance.values) {
        if (total + v < total) {
            throw Error(ErrorCode::InvalidValue, "sum of values overflows 64 bits");
        }
        total += v;
    }
    return total;
}

} // namespace

OracleCircuit compile_oracle(const SSPInstance& instance, const OracleConfig& config) {
    validate_instance(instance);
    const std::size_t n = instance.values.size();
    const std::uint64_t total = checked_total(instance);

    if (config.k == 0 && instance.target > total) {
        throw Error(ErrorCode::TargetExceedsMax,
                    "target " + std::to_string(instance.target) +
                        " exceeds the maximum subset sum " + std::to_string(total));
    }
    if (config.k < 0 || config.k >= num_bits(total)) {
        throw Error(ErrorCode::InvalidMask,
                    "mask bits " + std::to_string(config.k) +
                        " must be below the sum width " +
                        std::to_string(num_bits(total)));
    }

    OracleCircuit oracle;
    OracleLayout& layout = oracle.layout;

    layout.order.resize(n);
    std::iota(layout.order.begin(), layout.order.end(), std::size_t{0});
    if (config.sorted) {
        std::stable_sort(layout.order.begin(), layout.order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return instance.values[a] < instance.values[b];
                         });
    }

    std::vector<std::uint64_t> ordered(n);
    for (std::size_t i = 0; i < n; ++i) ordered[i] = instance.values[layout.order[i]];

    const WidthPlan plan = plan_widths(ordered, config.width_mode);
    for (std::size_t i = 0; i < n; ++i) {
        if (num_bits(ordered[i]) > plan.element_widths[i]) {
            throw Error(ErrorCode::WidthOverflow,
                        "value " + std::to_string(ordered[i]) +
                            " does not fit its planned register");
        }
    }

    Circuit& qc = oracle.circuit;
    layout.x = qc.new_register(n, "x", Role::InputX);
    layout.y = qc.new_register(1, "y", Role::AncillaY);

    for (std::size_t i = 0; i < n; ++i) {
        const auto width = static_cast<std::size_t>(plan.element_widths[i]);
        Register value = qc.new_register(width, "a" + std::to_string(i + 1), Role::Value);
        for (std::size_t j = 0; j < width; ++j) {
            if ((ordered[i] >> j) & 1) qc.set_initial_one(value.qubits[j]);
        }
        Register shadow =
            qc.new_register(width, "b" + std::to_string(i + 1), Role::Shadow);
        const QubitId select = layout.x.qubits[layout.order[i]];
        for (std::size_t j = 0; j < width; ++j) {
            qc.append(Gate::ccx(value.qubits[j], select, shadow.qubits[j]));
        }
        layout.values.push_back(std::move(value));
        layout.shadows.push_back(std::move(shadow));
    }

    Register z = layout.shadows[0];
    for (std::size_t i = 1; i < n; ++i) {
        z = emit_ripple_add(qc, z, layout.shadows[i], plan.sum_widths[i - 1],
                            config.carry_mode);
        layout.sums.push_back(z);
    }
    layout.z = z;

    layout.result = emit_masked_compare(qc, z, instance.target, plan.total_width,
                                        config.k, config.equality,
                                        config.fold_constant);
    for (const Register& reg : qc.registers()) {
        if (reg.role == Role::Compare) layout.same = reg;
    }

    oracle.compute_len = qc.gates().size();
    qc.append(Gate::cx(layout.result, layout.y.qubits[0]));
    for (const Gate& gate : reverse_fragment(
             std::span<const Gate>(qc.gates().data(), oracle.compute_len))) {
        qc.append(gate);
    }
    return oracle;
}

Circuit compute_only(const OracleCircuit& oracle) {
    return oracle.circuit.prefix(oracle.compute_len);
}

bool SolutionSet::contains(std::uint64_t mask) const {
    return std::binary_search(masks.begin(), masks.end(), mask);
}

SolutionSet classical_solutions(const SSPInstance& instance, int k) {
    validate_instance(instance);
    const std::size_t n = instance.values.size();
    if (n > 30) {
        throw Error(ErrorCode::TooLargeForBruteForce,
                    std::to_string(n) + " values exceed the brute-force limit of 30");
    }
    if (k < 0) throw Error(ErrorCode::InvalidMask, "mask bits must be non-negative");

    SolutionSet solutions;
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t want = instance.target >> k;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1) sum += instance.values[i];
        }
        if ((sum >> k) == want) solutions.masks.push_back(mask);
    }
    return solutions;
}

VerificationReport verify_compiled(const SSPInstance& instance, int k,
                                   const OracleCircuit& oracle) {
    const std::size_t n = instance.values.size();
    if (n > 20) {
        throw Error(ErrorCode::TooLargeForBruteForce,
                    "exhaustive verification is limited to 20 values");
    }
    const SolutionSet solutions = classical_solutions(instance, k);
    const Circuit compute = compute_only(oracle);
    const Circuit& full = oracle.circuit;

    VerificationReport report;
    report.ancillas_restored = true;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        BasisState input(full.qubit_count());
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1) input.set(oracle.layout.x.qubits[i], true);
        }
        const bool want = solutions.contains(mask);

        const BasisState computed = run_basis(compute, input);
        const bool got = computed.get(oracle.layout.result);
        ++report.inputs_checked;
        if (got == want) {
            ++report.agreements;
        } else if (!report.counterexample) {
            report.counterexample = mask;
        }

        // Full oracle: every qubit except y must return to its prepared
        // state, and y must flip exactly on solutions.
        BasisState expected = input;
        for (QubitId q : full.initial_ones()) expected.flip(q);
        if (want) expected.flip(oracle.layout.y.qubits[0]);
        if (run_basis(full, input) != expected) {
            report.ancillas_restored = false;
        }
    }
    report.passed = report.agreements == report.inputs_checked &&
                    report.ancillas_restored;
    return report;
}

VerificationReport verify_oracle(const SSPInstance& instance,
                                 const OracleConfig& config) {
    return verify_compiled(instance, config.k, compile_oracle(instance, config));
}

namespace {

std::vector<std::uint64_t> parse_value_list(std::string_view text) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token(text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        // Trim blanks around each number.
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw Error(ErrorCode::ParseError, "empty value in list");
        }
        token = token.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            values.push_back(std::stoull(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad value: " + token);
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return values;
}

} // namespace

SSPInstance parse_instance(std::string_view text) {
    SSPInstance instance;
    bool have_values = false;
    bool have_target = false;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (line.empty()) continue;

        if (line.substr(0, 7) == "values:") {
            instance.values = parse_value_list(line.substr(7));
            have_values = true;
        } else if (line.substr(0, 7) == "target:") {
            std::string token(line.substr(7));
            const auto first = token.find_first_not_of(" \t");
            if (first == std::string::npos) {
                throw Error(ErrorCode::ParseError, "missing target value");
            }
            try {
                instance.target = std::stoull(token.substr(first));
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, "bad target: " + token);
            }
            have_target = true;
        } else {
            throw Error(ErrorCode::ParseError,
                        "unexpected instance line: " + std::string(line));
        }
    }
    if (!have_values || !have_target) {
        throw Error(ErrorCode::ParseError,
                    "instance needs a values: line and a target: line");
    }
    return instance;
}

SSPInstance load_instance(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

} // namespace qss
