// SPDX-License-Identifier: Apache-2.0

#include "qss/cli.hpp"

#include "qss/bench.hpp"
#include "qss/grover.hpp"
#include "qss/oracle.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace qss {

namespace {

struct InstanceFlags {
    std::vector<std::uint64_t> set;
    std::uint64_t target = 0;
    std::string in_path;

    SSPInstance resolve() const {
        if (!in_path.empty()) {
            std::ifstream file(in_path);
            if (!file) {
                throw Error(ErrorCode::ParseError, "cannot open " + in_path);
            }
            return load_instance(file);
        }
        if (set.empty()) {
            throw CLI::ValidationError("--set", "an instance needs --set/--target or --in");
        }
        return SSPInstance{set, target};
    }
};

struct ConfigFlags {
    std::string width = "var-all";
    bool sorted_on = false;
    bool sorted_off = false;
    std::string equality = "mcx";
    int k = 0;
    std::string carry = "fresh";
    bool fold_target = false;

    OracleConfig resolve() const {
        OracleConfig config;
        if (width == "fixed32") config.width_mode = WidthMode::Fixed32;
        else if (width == "var-elem") config.width_mode = WidthMode::VarElemFixedSum;
        else config.width_mode = WidthMode::VarAll;
        config.sorted = !sorted_off; // default on, per the optimized configuration
        config.equality =
            equality == "logstar" ? EqualityBackend::LogStar : EqualityBackend::Mcx;
        config.k = k;
        config.carry_mode =
            carry == "shared" ? CarryMode::SharedReuse : CarryMode::Fresh;
        config.fold_constant = fold_target;
        return config;
    }
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
    auto* set = cmd->add_option("--set", flags.set, "Set values, comma separated")
                    ->delimiter(',');
    auto* target = cmd->add_option("--target", flags.target, "Target sum");
    auto* in = cmd->add_option("--in", flags.in_path,
                               "Instance file (values:/target: lines)");
    set->excludes(in);
    target->excludes(in);
    set->needs(target);
    target->needs(set);
}

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
    cmd->add_option("--width", flags.width, "Register width mode")
        ->check(CLI::IsMember({"fixed32", "var-elem", "var-all"}))
        ->capture_default_str();
    auto* sorted = cmd->add_flag("--sorted", flags.sorted_on,
                                 "Sum in ascending value order (default)");
    cmd->add_flag("--unsorted", flags.sorted_off, "Sum in the given order")
        ->excludes(sorted);
    cmd->add_option("--equality", flags.equality, "All-zero test backend")
        ->check(CLI::IsMember({"mcx", "logstar"}))
        ->capture_default_str();
    cmd->add_option("--k", flags.k, "Ignore the k low bits of the target")
        ->check(CLI::Range(0, 63))
        ->capture_default_str();
    cmd->add_option("--carry", flags.carry, "Carry qubit mode")
        ->check(CLI::IsMember({"fresh", "shared"}))
        ->capture_default_str();
    cmd->add_flag("--fold-target", flags.fold_target,
                  "Fold the target constant into the comparison");
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
    }
    file << content;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<int> parse_sizes(const std::string& range) {
    int lo = 0, hi = 0, step = 0;
    char extra = 0;
    if (std::sscanf(range.c_str(), "%d:%d:%d%c", &lo, &hi, &step, &extra) != 3 ||
        lo < 1 || hi < lo || step < 1) {
        throw CLI::ValidationError("--sizes", "expected lo:hi:step with lo>=1, step>=1");
    }
    std::vector<int> sizes;
    for (int n = lo; n <= hi; n += step) sizes.push_back(n);
    return sizes;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover oracle toolkit for Subset Sum"};
    app.require_subcommand(1);

    // compile
    auto* compile = app.add_subcommand("compile", "Compile an instance to oracle text");
    InstanceFlags compile_instance;
    ConfigFlags compile_config;
    std::string compile_out = "-";
    add_instance_flags(compile, compile_instance);
    add_config_flags(compile, compile_config);
    compile->add_option("--out", compile_out, "Output path or -")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "Check an oracle against brute force");
    InstanceFlags verify_instance;
    ConfigFlags verify_config;
    add_instance_flags(verify, verify_instance);
    add_config_flags(verify, verify_config);

    // grover
    auto* grover = app.add_subcommand("grover", "Run Grover search on a simulator");
    InstanceFlags grover_instance;
    ConfigFlags grover_config;
    std::optional<int> grover_iterations;
    std::size_t grover_shots = 0;
    std::uint64_t grover_seed = 0;
    add_instance_flags(grover, grover_instance);
    add_config_flags(grover, grover_config);
    grover->add_option("--iterations", grover_iterations, "Grover iteration count")
        ->check(CLI::PositiveNumber);
    grover->add_option("--shots", grover_shots, "Sample this many shots");
    grover->add_option("--seed", grover_seed, "Shot sampling seed");

    // bench
    auto* bench = app.add_subcommand("bench", "Sweep random instances, write CSV");
    std::string bench_sizes = "5:100:5";
    std::vector<std::uint64_t> bench_max_values = {64, 128, 256};
    int bench_runs = 100;
    std::uint64_t bench_seed = 0;
    std::string bench_out = "-";
    bench->add_option("--sizes", bench_sizes, "Set sizes as lo:hi:step")
        ->capture_default_str();
    bench->add_option("--max-values", bench_max_values, "Max set values")
        ->delimiter(',');
    bench->add_option("--runs", bench_runs, "Instances per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "Master seed");
    bench->add_option("--out", bench_out, "Output path or -")->capture_default_str();

    // table
    auto* table = app.add_subcommand("table", "Render percent-saved tables from CSV");
    std::string table_in;
    table->add_option("--in", table_in, "Bench CSV path or -")->required();

    // export
    auto* exp = app.add_subcommand("export", "Export the full Grover circuit text");
    InstanceFlags export_instance;
    ConfigFlags export_config;
    std::optional<int> export_iterations;
    std::string export_out = "-";
    add_instance_flags(exp, export_instance);
    add_config_flags(exp, export_config);
    exp->add_option("--iterations", export_iterations, "Grover iteration count")
        ->check(CLI::PositiveNumber);
    exp->add_option("--out", export_out, "Output path or -")->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        if (compile->parsed()) {
            const SSPInstance instance = compile_instance.resolve();
            const OracleCircuit oracle =
                compile_oracle(instance, compile_config.resolve());
            write_output(compile_out, export_text(oracle.circuit), out);
            return 0;
        }
        if (verify->parsed()) {
            const SSPInstance instance = verify_instance.resolve();
            const VerificationReport report =
                verify_oracle(instance, verify_config.resolve());
            out << report.agreements << "/" << report.inputs_checked
                << " inputs agree\n";
            out << "ancillas " << (report.ancillas_restored ? "restored" : "NOT restored")
                << " on all inputs\n";
            if (!report.passed) {
                err << "VerificationFailed";
                if (report.counterexample) {
                    err << ": counterexample mask "
                        << format_mask(*report.counterexample, instance.values.size());
                }
                err << "\n";
                return 1;
            }
            return 0;
        }
        if (grover->parsed()) {
            const SSPInstance instance = grover_instance.resolve();
            const GroverRun run =
                grover_search(instance, grover_config.resolve(), grover_iterations);
            out << "iterations " << run.iterations << "\n";
            std::vector<std::uint64_t> order(run.distribution.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::uint64_t a, std::uint64_t b) {
                                 return run.distribution[a] > run.distribution[b];
                             });
            const std::size_t n = instance.values.size();
            const std::size_t shown = std::min<std::size_t>(order.size(), 8);
            for (std::size_t i = 0; i < shown; ++i) {
                char buffer[32];
                std::snprintf(buffer, sizeof buffer, "%.6f",
                              run.distribution[order[i]]);
                out << "x=" << format_mask(order[i], n) << " p=" << buffer << "\n";
            }
            if (grover_shots > 0) {
                out << "shots " << grover_shots << " seed " << grover_seed << "\n";
                for (const auto& [mask, count] :
                     sample_shots(run, grover_shots, grover_seed)) {
                    out << "x=" << mask << " count=" << count << "\n";
                }
            }
            return 0;
        }
        if (bench->parsed()) {
            BenchGrid grid;
            grid.set_sizes = parse_sizes(bench_sizes);
            grid.max_values = bench_max_values;
            grid.runs_per_cell = bench_runs;
            grid.master_seed = bench_seed;
            const std::vector<BenchRecord> records = run_benchmark(grid);
            write_output(bench_out, to_csv(records), out);
            return 0;
        }
        if (table->parsed()) {
            const std::vector<BenchRecord> records = parse_csv(read_input(table_in));
            out << render_tables(records);
            return 0;
        }
        if (exp->parsed()) {
            const SSPInstance instance = export_instance.resolve();
            const OracleConfig config = export_config.resolve();
            const OracleCircuit oracle = compile_oracle(instance, config);
            int iterations;
            if (export_iterations) {
                iterations = *export_iterations;
            } else {
                const SolutionSet solutions = classical_solutions(instance, config.k);
                iterations = iteration_count(static_cast<int>(instance.values.size()),
                                             solutions.masks.size());
            }
            write_output(export_out, export_text(build_grover_circuit(oracle, iterations)),
                         out);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace qss
