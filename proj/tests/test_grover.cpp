// SPDX-License-Identifier: Apache-2.0

#include "qss/grover.hpp"

#include "doctest.h"

#include <cmath>

using namespace qss;

namespace {

OracleConfig tiny_config() {
    OracleConfig config;
    config.width_mode = WidthMode::VarAll;
    config.sorted = true;
    config.equality = EqualityBackend::LogStar;
    config.fold_constant = true;
    return config;
}

double analytic_success(int n, std::uint64_t m, int g) {
    const double theta =
        std::asin(std::sqrt(static_cast<double>(m) / std::ldexp(1.0, n)));
    const double amp = std::sin((2.0 * g + 1.0) * theta);
    return amp * amp;
}

} // namespace

TEST_CASE("iteration schedule") {
    CHECK(iteration_count(2, 1) == 1);
    CHECK(iteration_count(10, 1) == 25);
    CHECK(iteration_count(4, 2) == 2);
    CHECK(iteration_count(1, 2) == 1); // floor would be 0; schedule at least one
    CHECK_THROWS_AS(iteration_count(4, 0), Error);
}

TEST_CASE("diffuser is an involution and fixes the uniform state") {
    for (std::size_t n = 1; n <= 4; ++n) {
        Circuit once;
        Register x1 = once.new_register(n, "x", Role::InputX);
        emit_diffuser(once, x1);

        Circuit twice;
        Register x2 = twice.new_register(n, "x", Role::InputX);
        emit_diffuser(twice, x2);
        emit_diffuser(twice, x2);

        // A pseudo-random normalized state.
        StateVector state(n);
        const std::uint64_t dim = 1ull << n;
        double norm = 0.0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            state.amp(i) = {std::cos(1.7 * static_cast<double>(i) + 0.3),
                            std::sin(2.9 * static_cast<double>(i))};
            norm += std::norm(state.amp(i));
        }
        norm = std::sqrt(norm);
        for (std::uint64_t i = 0; i < dim; ++i) state.amp(i) /= norm;

        StateVector after = simulate(twice, state);
        for (std::uint64_t i = 0; i < dim; ++i) {
            CHECK(std::abs(after.amp(i) - state.amp(i)) < 1e-9);
        }

        // The uniform state is fixed up to a global phase.
        StateVector uniform(n);
        for (std::uint64_t i = 0; i < dim; ++i) {
            uniform.amp(i) = 1.0 / std::sqrt(static_cast<double>(dim));
        }
        StateVector u_after = simulate(once, uniform);
        std::complex<double> overlap = 0.0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            overlap += std::conj(uniform.amp(i)) * u_after.amp(i);
        }
        CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-9);
        CHECK(std::abs(u_after.norm() - 1.0) < 1e-9);
    }
}

TEST_CASE("two-element search reaches certainty in one iteration") {
    GroverRun run = grover_search({{1, 2}, 3}, tiny_config());
    CHECK(run.iterations == 1);
    REQUIRE(run.distribution.size() == 4);
    CHECK(std::abs(run.distribution[0b11] - 1.0) < 1e-6);

    SUBCASE("overrotation past the optimum loses probability") {
        GroverRun over = grover_search({{1, 2}, 3}, tiny_config(), 2);
        CHECK(over.distribution[0b11] < run.distribution[0b11]);
    }
}

TEST_CASE("scheduled runs hit the analytic success probability") {
    struct Case {
        SSPInstance instance;
        std::uint64_t solutions;
    };
    const Case cases[] = {
        {{{1, 2}, 3}, 1},
        {{{2, 3}, 5}, 1},
        {{{1, 1, 1}, 3}, 1},
        {{{1, 1, 1}, 2}, 3},
    };
    for (const Case& c : cases) {
        const int n = static_cast<int>(c.instance.values.size());
        OracleConfig config = tiny_config();
        config.equality = EqualityBackend::Mcx; // keep the arena small
        GroverRun run = grover_search(c.instance, config);
        const SolutionSet solutions = classical_solutions(c.instance, 0);
        REQUIRE(solutions.masks.size() == c.solutions);

        double success = 0.0;
        for (std::uint64_t mask : solutions.masks) success += run.distribution[mask];
        const double expected = analytic_success(n, c.solutions, run.iterations);
        CHECK(std::abs(success - expected) < 1e-6);
        CHECK(success >= 0.5);

        // Everything measured with non-trivial probability is a solution.
        for (std::uint64_t mask = 0; mask < run.distribution.size(); ++mask) {
            if (!solutions.contains(mask)) {
                CHECK(run.distribution[mask] <= run.distribution[solutions.masks[0]]);
            }
        }

        double total = 0.0;
        for (double p : run.distribution) total += p;
        CHECK(std::abs(total - 1.0) < 1e-9);
    }
}

TEST_CASE("approximate matching searches the interval") {
    // T=4 with k=1 accepts sums in [4,5]; only {2,3} qualifies.
    OracleConfig config = tiny_config();
    config.equality = EqualityBackend::Mcx;
    config.k = 1;
    GroverRun run = grover_search({{2, 3}, 4}, config);
    CHECK(run.iterations == 1);
    CHECK(std::abs(run.distribution[0b11] - 1.0) < 1e-6);

    // The exact oracle has nothing to mark for this target.
    OracleConfig exact = config;
    exact.k = 0;
    CHECK_THROWS_AS(grover_search({{2, 3}, 4}, exact), Error);
}

TEST_CASE("search errors") {
    SUBCASE("no solutions and no explicit iteration count") {
        CHECK_THROWS_AS(grover_search({{2, 4}, 3}, tiny_config()), Error);
    }

    SUBCASE("statevector budget") {
        SimOptions tight;
        tight.qubit_budget = 8;
        CHECK_THROWS_AS(grover_search({{1, 2, 3}, 6}, tiny_config(), {}, tight), Error);
    }

    SUBCASE("iterations must be positive") {
        CHECK_THROWS_AS(grover_search({{1, 2}, 3}, tiny_config(), 0), Error);
    }
}

TEST_CASE("mask formatting and shot sampling") {
    CHECK(format_mask(0b01, 2) == "01");
    CHECK(format_mask(0b10, 2) == "10");
    CHECK(format_mask(0b1, 1) == "1");

    GroverRun run = grover_search({{1, 2}, 3}, tiny_config());
    auto counts = sample_shots(run, 64, 99);
    std::size_t total = 0;
    for (const auto& [mask, count] : counts) total += count;
    CHECK(total == 64);
    // Certainty case: every shot lands on the solution.
    CHECK(counts.at("11") == 64);

    auto again = sample_shots(run, 64, 99);
    CHECK(counts == again);
}
