// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/circuit.hpp"
#include "qss/compare.hpp"
#include "qss/qarith.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace qss {

/// A Subset Sum instance: positive values and a positive target.
struct SSPInstance {
    std::vector<std::uint64_t> values;
    std::uint64_t target = 0;
};

/// The optimization switchboard. Defaults are the fully optimized
/// configuration: varying widths everywhere, ascending summation order,
/// exact match, fresh carries, explicit target register.
struct OracleConfig {
    WidthMode width_mode = WidthMode::VarAll;
    bool sorted = true;
    EqualityBackend equality = EqualityBackend::Mcx;
    int k = 0;
    CarryMode carry_mode = CarryMode::Fresh;
    bool fold_constant = false;
};

/// Where everything lives in a compiled oracle. Selection bit x_i refers to
/// the i-th value of the caller's instance regardless of summation order;
/// `order[pos]` gives the original index compiled at position pos.
struct OracleLayout {
    Register x;
    Register y;
    std::vector<Register> values;
    std::vector<Register> shadows;
    std::vector<Register> sums;
    Register z;    // final sum register (shadows[0] when n == 1)
    Register same; // compared-bits register
    QubitId result = 0;
    std::vector<std::size_t> order;
};

/// A compiled Grover oracle: gates [0, compute_len) compute the match
/// predicate into the result qubit, gate compute_len is the CX phase flip
/// into y, and the rest is the mirrored uncompute of the compute fragment.
struct OracleCircuit {
    Circuit circuit;
    OracleLayout layout;
    std::size_t compute_len = 0;
};

OracleCircuit compile_oracle(const SSPInstance& instance, const OracleConfig& config);

/// The compute fragment alone: a classical-reversible circuit whose result
/// qubit is 1 iff the x input satisfies the match predicate.
Circuit compute_only(const OracleCircuit& oracle);

/// Subset masks satisfying the match predicate; bit i of a mask selects the
/// i-th value of the instance as given.
struct SolutionSet {
    std::vector<std::uint64_t> masks; // ascending

    bool contains(std::uint64_t mask) const;
};

/// Brute-force reference: enumerates all 2^n subsets and keeps those whose
/// sum agrees with the target on all but the k low bits.
SolutionSet classical_solutions(const SSPInstance& instance, int k);

struct VerificationReport {
    bool passed = false;
    std::size_t inputs_checked = 0;
    std::size_t agreements = 0;
    std::optional<std::uint64_t> counterexample;
    bool ancillas_restored = false;
};

/// Exhaustive check of a compiled oracle against the brute force: the
/// compute fragment must mark exactly the classical solution set, and the
/// full oracle must restore every non-y qubit on every basis input.
VerificationReport verify_compiled(const SSPInstance& instance, int k,
                                   const OracleCircuit& oracle);
VerificationReport verify_oracle(const SSPInstance& instance,
                                 const OracleConfig& config);

/// Instance file format: a `values: a1,a2,...` line and a `target: T` line.
SSPInstance parse_instance(std::string_view text);
SSPInstance load_instance(std::istream& in);

} // namespace qss
