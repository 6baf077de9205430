// SPDX-License-Identifier: Apache-2.0

#include "qss/oracle.hpp"

#include "qss/sim.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <sstream>

using namespace qss;

namespace {

OracleConfig make_config(WidthMode width, bool sorted,
                         EqualityBackend equality = EqualityBackend::Mcx,
                         int k = 0, bool fold = false,
                         CarryMode carry = CarryMode::Fresh) {
    OracleConfig config;
    config.width_mode = width;
    config.sorted = sorted;
    config.equality = equality;
    config.k = k;
    config.fold_constant = fold;
    config.carry_mode = carry;
    return config;
}

/// Marked set of the compute fragment, by exhaustive basis execution.
std::vector<std::uint64_t> marked_set(const OracleCircuit& oracle, std::size_t n) {
    const Circuit compute = compute_only(oracle);
    std::vector<std::uint64_t> marked;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        BasisState input(compute.qubit_count());
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1) input.set(oracle.layout.x.qubits[i], true);
        }
        if (run_basis(compute, input).get(oracle.layout.result)) {
            marked.push_back(mask);
        }
    }
    return marked;
}

} // namespace

TEST_CASE("single-value oracle uses the minimal layout") {
    SSPInstance instance{{1}, 1};
    OracleCircuit oracle = compile_oracle(
        instance, make_config(WidthMode::VarAll, true, EqualityBackend::Mcx, 0, true));
    // x + y + a + b + same + result, one qubit each.
    CHECK(oracle.circuit.qubit_count() == 6);
    CHECK(oracle.layout.x.width() == 1);
    CHECK(oracle.layout.values.size() == 1);
    CHECK(oracle.layout.sums.empty());
    CHECK(marked_set(oracle, 1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("oracle structure: compute, kickback, mirrored uncompute") {
    SSPInstance instance{{1, 2}, 3};
    OracleCircuit oracle = compile_oracle(instance, make_config(WidthMode::VarAll, true));
    const auto& gates = oracle.circuit.gates();
    REQUIRE(gates.size() == 2 * oracle.compute_len + 1);

    const Gate& kickback = gates[oracle.compute_len];
    CHECK(kickback.kind == GateKind::CX);
    CHECK(kickback.controls[0] == oracle.layout.result);
    CHECK(kickback.targets[0] == oracle.layout.y.qubits[0]);

    for (std::size_t i = 0; i < oracle.compute_len; ++i) {
        CHECK(gates[i] == gates[gates.size() - 1 - i]);
    }
    for (const Gate& gate : gates) {
        const bool allowed = gate.kind == GateKind::X || gate.kind == GateKind::CX ||
                             gate.kind == GateKind::CCX || gate.kind == GateKind::MCX;
        CHECK(allowed);
    }
}

TEST_CASE("marked sets match brute force on small instances") {
    SSPInstance instance{{1, 2}, 3};
    const WidthMode modes[] = {WidthMode::Fixed32, WidthMode::VarElemFixedSum,
                               WidthMode::VarAll, WidthMode::VarAll};
    for (int c = 0; c < 4; ++c) {
        OracleCircuit oracle = compile_oracle(instance, make_config(modes[c], c == 3));
        CHECK(marked_set(oracle, 2) == std::vector<std::uint64_t>{0b11});
    }

    SUBCASE("x bits select values at their original positions") {
        SSPInstance inst{{3, 1, 2}, 3};
        OracleCircuit oracle = compile_oracle(inst, make_config(WidthMode::VarAll, true));
        // {3} is mask 001 and {1,2} is mask 110, in original index order.
        CHECK(marked_set(oracle, 3) == std::vector<std::uint64_t>{0b001, 0b110});
    }

    SUBCASE("compute_only result per input") {
        SSPInstance inst{{1, 2}, 3};
        OracleCircuit oracle = compile_oracle(inst, make_config(WidthMode::VarAll, true));
        const Circuit compute = compute_only(oracle);

        auto result_for = [&](std::uint64_t mask) {
            BasisState input(compute.qubit_count());
            for (std::size_t i = 0; i < 2; ++i) {
                if ((mask >> i) & 1) input.set(oracle.layout.x.qubits[i], true);
            }
            return run_basis(compute, input).get(oracle.layout.result);
        };
        CHECK(result_for(0b11));
        CHECK_FALSE(result_for(0b01));
        CHECK_FALSE(result_for(0b10));
        CHECK_FALSE(result_for(0b00));
    }
}

TEST_CASE("classical_solutions enumerates subsets") {
    CHECK(classical_solutions({{1, 2}, 3}, 0).masks == std::vector<std::uint64_t>{0b11});

    // With k=2 the interval is [0,3]: sums 0,1,2,3 all land inside.
    CHECK(classical_solutions({{1, 2}, 3}, 2).masks ==
          std::vector<std::uint64_t>{0b00, 0b01, 0b10, 0b11});

    CHECK(classical_solutions({{5}, 4}, 0).masks.empty());

    SSPInstance too_big;
    too_big.values.assign(31, 1);
    too_big.target = 1;
    CHECK_THROWS_AS(classical_solutions(too_big, 0), Error);

    SSPInstance beyond_exhaustive;
    beyond_exhaustive.values.assign(21, 1);
    beyond_exhaustive.target = 1;
    CHECK_THROWS_AS(verify_oracle(beyond_exhaustive, OracleConfig{}), Error);
}

TEST_CASE("verify_oracle passes the four benchmark configurations") {
    SSPInstance instance{{1, 2}, 3};
    const WidthMode modes[] = {WidthMode::Fixed32, WidthMode::VarElemFixedSum,
                               WidthMode::VarAll, WidthMode::VarAll};
    for (int c = 0; c < 4; ++c) {
        VerificationReport report =
            verify_oracle(instance, make_config(modes[c], c == 3));
        CHECK(report.passed);
        CHECK(report.inputs_checked == 4);
        CHECK(report.agreements == 4);
        CHECK(report.ancillas_restored);
    }
}

TEST_CASE("random oracles verify against brute force") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.next() % 10;
        SSPInstance instance;
        for (std::size_t i = 0; i < n; ++i) instance.values.push_back(rng.next_in(15));
        std::uint64_t total = 0;
        for (std::uint64_t v : instance.values) total += v;
        instance.target = rng.next_in(total);

        OracleConfig config;
        config.width_mode = static_cast<WidthMode>(rng.next() % 3);
        config.sorted = rng.next() % 2 == 0;
        config.equality = trial % 2 == 0 ? EqualityBackend::Mcx : EqualityBackend::LogStar;
        config.fold_constant = rng.next() % 2 == 0;
        config.k = static_cast<int>(rng.next() % std::min(3, num_bits(total)));

        VerificationReport report = verify_oracle(instance, config);
        CHECK(report.passed);
    }
}

TEST_CASE("a corrupted oracle is caught with a counterexample") {
    SSPInstance instance{{1, 2}, 3};
    OracleCircuit oracle = compile_oracle(instance, make_config(WidthMode::VarAll, true));

    // Drop the first CCX of the compute fragment (a shadow-copy gate).
    std::size_t victim = oracle.compute_len;
    for (std::size_t i = 0; i < oracle.compute_len; ++i) {
        if (oracle.circuit.gates()[i].kind == GateKind::CCX) {
            victim = i;
            break;
        }
    }
    REQUIRE(victim < oracle.compute_len);
    oracle.circuit.erase_gate(victim);
    oracle.compute_len -= 1;

    VerificationReport report = verify_compiled(instance, 0, oracle);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK(*report.counterexample < 4);
}

TEST_CASE("uncompute restores everything but y") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng.next() % 8;
        SSPInstance instance;
        for (std::size_t i = 0; i < n; ++i) instance.values.push_back(rng.next_in(13));
        std::uint64_t total = 0;
        for (std::uint64_t v : instance.values) total += v;
        instance.target = rng.next_in(total);

        OracleConfig config = make_config(
            static_cast<WidthMode>(rng.next() % 3), rng.next() % 2 == 0,
            rng.next() % 2 == 0 ? EqualityBackend::Mcx : EqualityBackend::LogStar, 0,
            rng.next() % 2 == 0,
            rng.next() % 2 == 0 ? CarryMode::Fresh : CarryMode::SharedReuse);
        OracleCircuit oracle = compile_oracle(instance, config);
        SolutionSet solutions = classical_solutions(instance, 0);

        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            BasisState input(oracle.circuit.qubit_count());
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1) input.set(oracle.layout.x.qubits[i], true);
            }
            BasisState expected = input;
            for (QubitId q : oracle.circuit.initial_ones()) expected.flip(q);
            if (solutions.contains(mask)) expected.flip(oracle.layout.y.qubits[0]);
            CHECK(run_basis(oracle.circuit, input) == expected);
        }
    }
}

TEST_CASE("qubit totals shrink config over config on every instance") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.next() % 9;
        SSPInstance instance;
        for (std::size_t i = 0; i < n; ++i) instance.values.push_back(rng.next_in(200));
        std::uint64_t total = 0;
        for (std::uint64_t v : instance.values) total += v;
        instance.target = rng.next_in(total);

        const std::size_t fixed =
            compile_oracle(instance, make_config(WidthMode::Fixed32, false))
                .circuit.qubit_count();
        const std::size_t elem =
            compile_oracle(instance, make_config(WidthMode::VarElemFixedSum, false))
                .circuit.qubit_count();
        const std::size_t all =
            compile_oracle(instance, make_config(WidthMode::VarAll, false))
                .circuit.qubit_count();
        const std::size_t sorted =
            compile_oracle(instance, make_config(WidthMode::VarAll, true))
                .circuit.qubit_count();
        CHECK(fixed >= elem);
        CHECK(elem >= all);
        CHECK(all >= sorted);
    }
}

TEST_CASE("sorting permutes registers but never the marked set") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.next() % 6;
        SSPInstance instance;
        for (std::size_t i = 0; i < n; ++i) instance.values.push_back(rng.next_in(20));
        std::uint64_t total = 0;
        for (std::uint64_t v : instance.values) total += v;
        instance.target = rng.next_in(total);

        OracleCircuit plain =
            compile_oracle(instance, make_config(WidthMode::VarAll, false));
        OracleCircuit sorted =
            compile_oracle(instance, make_config(WidthMode::VarAll, true));
        CHECK(marked_set(plain, n) == marked_set(sorted, n));
    }
}

TEST_CASE("compile-time validation") {
    CHECK_THROWS_AS(compile_oracle({{}, 1}, OracleConfig{}), Error);
    CHECK_THROWS_AS(compile_oracle({{0, 2}, 1}, OracleConfig{}), Error);

    try {
        compile_oracle({{1, 2}, 9}, OracleConfig{});
        FAIL("target beyond the total must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TargetExceedsMax);
    }

    OracleConfig wide_mask;
    wide_mask.k = 2; // num_bits(1+2) == 2, so k must be < 2
    try {
        compile_oracle({{1, 2}, 3}, wide_mask);
        FAIL("mask as wide as the sum must be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidMask);
    }
}

TEST_CASE("instance files parse and validate") {
    SSPInstance instance = parse_instance("values: 3, 1,2\ntarget: 4\n");
    CHECK(instance.values == std::vector<std::uint64_t>{3, 1, 2});
    CHECK(instance.target == 4);

    std::istringstream stream("target: 7\nvalues: 5,2\n");
    SSPInstance loaded = load_instance(stream);
    CHECK(loaded.values == std::vector<std::uint64_t>{5, 2});
    CHECK(loaded.target == 7);

    CHECK_THROWS_AS(parse_instance("values: 1,2\n"), Error);
    CHECK_THROWS_AS(parse_instance("values: 1,x\ntarget: 2\n"), Error);
    CHECK_THROWS_AS(parse_instance("bogus\n"), Error);
}
