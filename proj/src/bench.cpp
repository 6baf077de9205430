// SPDX-License-Identifier: Apache-2.0

#include "qss/bench.hpp"

#include "qss/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace qss {

const char* const kBenchConfigNames[4] = {"fixed32", "var-elem", "var-all",
                                          "var-all-sorted"};

OracleConfig bench_config(int index) {
    OracleConfig config;
    config.equality = EqualityBackend::Mcx;
    config.k = 0;
    config.carry_mode = CarryMode::Fresh;
    config.fold_constant = false;
    switch (index) {
    case 0:
        config.width_mode = WidthMode::Fixed32;
        config.sorted = false;
        break;
    case 1:
        config.width_mode = WidthMode::VarElemFixedSum;
        config.sorted = false;
        break;
    case 2:
        config.width_mode = WidthMode::VarAll;
        config.sorted = false;
        break;
    default:
        config.width_mode = WidthMode::VarAll;
        config.sorted = true;
        break;
    }
    return config;
}

SSPInstance random_instance(int n, std::uint64_t max_value, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::EmptyInstance, "set size must be positive");
    if (max_value < 1) throw Error(ErrorCode::InvalidValue, "max value must be positive");

    SplitMix64 rng(seed);
    SSPInstance instance;
    instance.values.reserve(static_cast<std::size_t>(n));
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t v = rng.next_in(max_value);
        instance.values.push_back(v);
        total += v;
    }
    instance.target = rng.next_in(total);
    return instance;
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, int n,
                              std::uint64_t max_value, int run) {
    std::uint64_t seed = mix64(master_seed);
    seed = mix64(seed ^ static_cast<std::uint64_t>(n));
    seed = mix64(seed ^ max_value);
    seed = mix64(seed ^ static_cast<std::uint64_t>(run));
    return seed;
}

std::vector<BenchRecord> run_benchmark(const BenchGrid& grid) {
    if (grid.runs_per_cell < 1) {
        throw Error(ErrorCode::InvalidValue, "runs per cell must be positive");
    }
    for (int n : grid.set_sizes) {
        if (n < 1) throw Error(ErrorCode::InvalidValue, "set sizes must be positive");
    }
    for (std::uint64_t mv : grid.max_values) {
        if (mv < 1) throw Error(ErrorCode::InvalidValue, "max values must be positive");
    }

    std::vector<BenchRecord> records;
    for (std::uint64_t max_value : grid.max_values) {
        for (int n : grid.set_sizes) {
            double sum_qubits[4] = {};
            double sum_gates[4] = {};
            double sum_compute[4] = {};
            for (int run = 0; run < grid.runs_per_cell; ++run) {
                const SSPInstance instance = random_instance(
                    n, max_value, derive_run_seed(grid.master_seed, n, max_value, run));
                for (int c = 0; c < 4; ++c) {
                    const OracleCircuit oracle =
                        compile_oracle(instance, bench_config(c));
                    const ResourceReport report = oracle.circuit.resource_report();
                    sum_qubits[c] += static_cast<double>(report.qubits);
                    sum_gates[c] += static_cast<double>(report.total_gates);
                    sum_compute[c] += static_cast<double>(
                        compute_only(oracle).resource_report().total_gates);
                }
            }
            for (int c = 0; c < 4; ++c) {
                BenchRecord record;
                record.config = kBenchConfigNames[c];
                record.n = n;
                record.max_value = max_value;
                record.runs = grid.runs_per_cell;
                record.mean_qubits = sum_qubits[c] / grid.runs_per_cell;
                record.mean_gates = sum_gates[c] / grid.runs_per_cell;
                record.mean_compute_gates = sum_compute[c] / grid.runs_per_cell;
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

double percent_saved(double baseline, double optimized) {
    if (baseline <= 0.0) {
        throw Error(ErrorCode::InvalidBaseline, "baseline must be positive");
    }
    return 100.0 * (baseline - optimized) / baseline;
}

namespace {

std::string two_decimals(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

} // namespace

std::string to_csv(std::span<const BenchRecord> records) {
    std::string out = "config,n,max_value,runs,mean_qubits,mean_gates\n";
    for (const BenchRecord& r : records) {
        out += r.config + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.max_value) + ',' + std::to_string(r.runs) + ',' +
               two_decimals(r.mean_qubits) + ',' + two_decimals(r.mean_gates) + '\n';
    }
    return out;
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
    std::vector<BenchRecord> records;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line != "config,n,max_value,runs,mean_qubits,mean_gates") {
                throw Error(ErrorCode::ParseError, "unexpected CSV header: " + line);
            }
            continue;
        }
        std::vector<std::string> fields;
        std::size_t p = 0;
        while (p <= line.size()) {
            std::size_t comma = line.find(',', p);
            fields.push_back(line.substr(
                p, comma == std::string::npos ? std::string::npos : comma - p));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        if (fields.size() != 6) {
            throw Error(ErrorCode::ParseError, "bad CSV record: " + line);
        }
        try {
            BenchRecord record;
            record.config = fields[0];
            record.n = std::stoi(fields[1]);
            record.max_value = std::stoull(fields[2]);
            record.runs = std::stoi(fields[3]);
            record.mean_qubits = std::stod(fields[4]);
            record.mean_gates = std::stod(fields[5]);
            records.push_back(std::move(record));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad CSV record: " + line);
        }
    }
    if (first) throw Error(ErrorCode::ParseError, "empty CSV");
    return records;
}

std::string render_tables(std::span<const BenchRecord> records) {
    // Index records by (max_value, n, config).
    std::map<std::uint64_t, std::map<int, std::map<std::string, const BenchRecord*>>>
        cells;
    std::set<int> sizes;
    for (const BenchRecord& r : records) {
        cells[r.max_value][r.n][r.config] = &r;
        sizes.insert(r.n);
    }

    // Compute-only means are carried by freshly measured records; CSV-parsed
    // records do not have them, so that block only renders when present.
    bool have_compute = !records.empty();
    for (const BenchRecord& r : records) {
        have_compute = have_compute && r.mean_compute_gates > 0.0;
    }

    auto metric_of = [](const BenchRecord& r, int metric) {
        if (metric == 0) return r.mean_qubits;
        if (metric == 1) return r.mean_gates;
        return r.mean_compute_gates;
    };
    const char* metric_names[3] = {"qubits", "gates", "compute-only gates"};

    std::ostringstream out;
    const char* optimized[3] = {kBenchConfigNames[1], kBenchConfigNames[2],
                                kBenchConfigNames[3]};
    for (const auto& [max_value, by_n] : cells) {
        for (int metric = 0; metric < (have_compute ? 3 : 2); ++metric) {
            out << metric_names[metric] << " saved vs fixed32 (%), max value = "
                << max_value << "\n";
            out << std::left << std::setw(16) << "config";
            for (int n : sizes) {
                if (by_n.count(n)) out << std::right << std::setw(10) << ("n=" + std::to_string(n));
            }
            out << "\n";
            for (const char* config : optimized) {
                out << std::left << std::setw(16) << config;
                for (int n : sizes) {
                    auto cell = by_n.find(n);
                    if (cell == by_n.end()) continue;
                    const auto& by_config = cell->second;
                    auto base = by_config.find(kBenchConfigNames[0]);
                    auto opt = by_config.find(config);
                    if (base == by_config.end() || opt == by_config.end()) {
                        out << std::right << std::setw(10) << "-";
                        continue;
                    }
                    out << std::right << std::setw(10)
                        << two_decimals(percent_saved(metric_of(*base->second, metric),
                                                      metric_of(*opt->second, metric)));
                }
                out << "\n";
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace qss
