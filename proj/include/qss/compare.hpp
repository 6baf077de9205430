// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qss/circuit.hpp"

#include <cstdint>

namespace qss {

/// How the final all-zero test over the compared bits is realized.
enum class EqualityBackend {
    Mcx,     // one multi-controlled X over all compared bits
    LogStar, // population-count cascade built from CX/CCX only
};

/// Inclusive range of sums accepted when the k low target bits are ignored.
struct MatchInterval {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    int k = 0;
};

/// [T - (T mod 2^k), T - (T mod 2^k) + 2^k - 1]; k = 0 gives [T, T].
MatchInterval match_interval(std::uint64_t target, int k);

/// Computes same_i = z_i ^ target_i over width bits into a fresh register;
/// same == 0 iff z == target as width-bit strings. With fold_constant off a
/// width-wide register holds the target's bits and each same bit takes two
/// CX; with it on, same is a CX copy of z with an X wherever the target bit
/// is 1, saving the target register.
Register emit_xor_compare(Circuit& circuit, const Register& z, std::uint64_t target,
                          int width, bool fold_constant);

/// X on every bit, one MCX over all of them into a fresh result qubit, X
/// again to restore: result = 1 iff the register is all zero.
QubitId emit_mcx_all_zero(Circuit& circuit, const Register& same);

/// All-zero test with no gate beyond two controls: repeatedly reduce the
/// bit list to its population count (held in num_bits(m) fresh qubits,
/// built from controlled increments) until at most two bits remain, then
/// check those with an X-bracketed CCX (CX for a single bit).
QubitId emit_logstar_all_zero(Circuit& circuit, const Register& same);

/// Equality on all but the k least significant bits: result = 1 iff
/// floor(z / 2^k) == floor(target / 2^k). The low k bits of z are neither
/// compared nor copied.
QubitId emit_masked_compare(Circuit& circuit, const Register& z, std::uint64_t target,
                            int width, int k, EqualityBackend backend,
                            bool fold_constant);

} // namespace qss
