// Copyright 2026 The Qontic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qontic/qontic.hpp"

namespace {

using namespace qontic;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitExecution = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("QONTIC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error("QONTIC_SEED is not a valid 64-bit integer");
    }
  }
  std::random_device rd;
  return (std::uint64_t(rd()) << 32) ^ rd();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SlotStats {
  std::string label;
  std::string observable;
  std::uint64_t ones = 0;
};

template <typename MakeBackend>
std::vector<std::vector<MeasurementRecord>> run_shots(const Circuit& circuit,
                                                      std::uint64_t shots,
                                                      const MakeBackend& make_backend,
                                                      bool parallel) {
  std::vector<std::vector<MeasurementRecord>> all(shots);
  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t shot = begin; shot < end; ++shot) {
      auto backend = make_backend(shot);
      all[shot] = execute(circuit, backend, shot);
    }
  };
  const unsigned hw = std::thread::hardware_concurrency();
  if (!parallel || shots < 128 || hw < 2) {
    worker(0, shots);
    return all;
  }
  const std::uint64_t threads = std::min<std::uint64_t>(hw, shots);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (shots + threads - 1) / threads;
  for (std::uint64_t t = 0; t < threads; ++t) {
    const std::uint64_t begin = t * chunk;
    const std::uint64_t end = std::min(shots, begin + chunk);
    if (begin < end) pool.emplace_back(worker, begin, end);
  }
  for (auto& th : pool) th.join();
  return all;
}

std::vector<SlotStats> tally(const std::vector<std::vector<MeasurementRecord>>& runs) {
  std::vector<SlotStats> slots;
  for (const auto& records : runs) {
    if (slots.empty()) {
      for (const auto& rec : records) {
        slots.push_back(SlotStats{rec.label, rec.observable, 0});
      }
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      slots[i].ones += std::uint64_t(records[i].outcome);
    }
  }
  return slots;
}

int cmd_run(const std::string& path, std::uint64_t shots,
            const std::optional<std::uint64_t>& seed_flag, bool trace,
            const std::string& backend, const std::string& format, bool parallel) {
  std::string text;
  Circuit circuit;
  try {
    text = read_input(path);
    circuit = parse_circuit(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    const bool jsonl = format == "jsonl" || format == "json-lines";
    const bool want_model = backend == "model" || backend == "both";
    const bool want_oracle = backend == "oracle" || backend == "both";
    if (want_oracle && circuit.n > QuantumState::kDefaultMaxQubits) {
      std::cerr << "error: oracle backend capped at "
                << QuantumState::kDefaultMaxQubits << " qubits\n";
      return kExitExecution;
    }

    std::vector<std::vector<MeasurementRecord>> model_runs, oracle_runs;
    if (want_model) {
      auto make_state = [&](std::uint64_t shot) {
        auto state = OnticState::canonical(circuit.n,
                                           make_seeded_coins(derive_shot_seed(seed, shot)));
        if (trace) {
          // stderr, so jsonl stdout stays one record per line
          state.set_trace_hook([](const std::string& stage, const std::string& basis) {
            std::cerr << "  " << stage << " " << basis << "\n";
          });
        }
        return state;
      };
      model_runs = run_shots(circuit, shots, make_state, parallel && !trace);
    }
    if (want_oracle) {
      auto make_oracle = [&](std::uint64_t shot) {
        return QuantumState(circuit.n,
                            make_seeded_coins(derive_shot_seed(seed ^ 0x09ac1eull, shot)));
      };
      oracle_runs = run_shots(circuit, shots, make_oracle, parallel);
    }

    const auto& primary = want_model ? model_runs : oracle_runs;
    for (const auto& records : primary) {
      for (const auto& rec : records) {
        if (jsonl) {
          std::cout << to_json_line(rec) << "\n";
        } else {
          std::cout << "shot=" << rec.shot << " label=" << rec.label
                    << " observable=" << rec.observable << " outcome=" << rec.outcome
                    << "\n";
        }
      }
    }

    if (backend == "both" && shots > 0 && circuit.measurement_count() > 0) {
      const auto model_slots = tally(model_runs);
      const auto oracle_slots = tally(oracle_runs);
      const double se = 5.0 * std::sqrt(2.0 * 0.25 / double(shots));
      bool deterministic_mismatch = false;
      for (std::size_t i = 0; i < model_slots.size(); ++i) {
        const double fm = double(model_slots[i].ones) / double(shots);
        const double fo = double(oracle_slots[i].ones) / double(shots);
        const double delta = std::abs(fm - fo);
        const bool det_m = model_slots[i].ones == 0 || model_slots[i].ones == shots;
        const bool det_o = oracle_slots[i].ones == 0 || oracle_slots[i].ones == shots;
        const bool hard = det_m && det_o && std::abs(fm - fo) > 0.5;
        const bool flagged = delta > se;
        if (hard) deterministic_mismatch = true;
        char line[256];
        std::snprintf(line, sizeof line,
                      "compare label=%s observable=%s model=%.6f oracle=%.6f delta=%.6f%s",
                      model_slots[i].label.c_str(), model_slots[i].observable.c_str(),
                      fm, fo, delta,
                      hard ? " DETERMINISTIC-MISMATCH" : (flagged ? " FLAG" : ""));
        if (jsonl) {
          MeasurementRecord dummy;
          std::cout << "{\"type\":\"comparison\",\"label\":\"" << model_slots[i].label
                    << "\",\"observable\":\"" << model_slots[i].observable
                    << "\",\"model\":" << fm << ",\"oracle\":" << fo
                    << ",\"flagged\":" << (flagged ? "true" : "false") << "}"
                    << "\n";
          (void)dummy;
        } else {
          std::cout << line << "\n";
        }
      }
      if (deterministic_mismatch) {
        std::cerr << "error: deterministic outcome mismatch between backends\n";
        return kExitExecution;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "execution error: " << e.what() << "\n";
    return kExitExecution;
  }
}

int cmd_demo(const std::string& name, const std::optional<std::uint64_t>& seed_flag) {
  try {
    std::shared_ptr<CoinSource> coins;
    if (seed_flag || std::getenv("QONTIC_SEED")) {
      coins = make_seeded_coins(resolve_seed(seed_flag));
    } else {
      coins = make_scripted_coins(default_demo_coins(name));
    }
    const DemoReport report = run_demo(name, coins);
    for (const auto& line : report.render()) std::cout << line << "\n";
    return report.ok ? kExitOk : kExitExecution;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

double bench_measurement_us(std::size_t n, int reps) {
  auto state = OnticState::canonical(n, make_seeded_coins(11));
  std::mt19937_64 rng(17);
  std::vector<PauliOperator> observables;
  for (int i = 0; i < reps; ++i) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
      p.set_x(q, rng() & 1);
      p.set_z(q, rng() & 1);
    }
    observables.push_back(std::move(p));
  }
  const auto start = std::chrono::steady_clock::now();
  for (const auto& obs : observables) state.measure(obs);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count() / reps;
}

double bench_gate_us(std::size_t n, int reps) {
  auto state = OnticState::canonical(n, make_seeded_coins(11));
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) {
    state.apply_h(std::size_t(i) % n);
    if (n >= 2) {
      state.apply_cnot(std::size_t(i) % n, (std::size_t(i) + 1) % n);
    } else {
      state.apply_s(0);
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count() / (2 * reps);
}

int cmd_stats(std::size_t n, int reps) {
  if (n == 0) {
    std::cerr << "error: n must be at least 1\n";
    return kExitParse;
  }
  auto report = OnticState::canonical(n, make_seeded_coins(1)).stats();
  std::cout << "n " << report.n << "\n";
  std::cout << "context_bits " << report.context_bits << "\n";
  std::cout << "storage_bits " << report.storage_bits << "\n";
  std::cout << "size  per-gate(us)  per-measurement(us)\n";
  for (std::size_t size : {n / 4, n / 2, n}) {
    if (size == 0) continue;
    char line[128];
    std::snprintf(line, sizeof line, "%-6zu %12.3f %20.3f", size,
                  bench_gate_us(size, reps), bench_measurement_us(size, reps));
    std::cout << line << "\n";
  }
  return kExitOk;
}

int cmd_selftest(const std::optional<std::uint64_t>& seed_flag, std::size_t steps) {
  const std::uint64_t seed = seed_flag ? *seed_flag : 0x5e1f;
  const auto results = run_invariant_suite(seed, steps);
  for (const auto& r : results) {
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  }
  return all_ok(results) ? kExitOk : kExitExecution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"outcome-deterministic contextual stabilizer simulator"};
  app.require_subcommand(1);

  // run
  std::string run_path;
  std::uint64_t shots = 1;
  std::optional<std::uint64_t> seed;
  bool trace = false;
  bool no_parallel = false;
  std::string backend = "model";
  std::string format = "text";
  auto* run = app.add_subcommand("run", "run a circuit file for one or more shots");
  run->add_option("input", run_path, "circuit file, or - for stdin")->required();
  run->add_option("--shots", shots, "number of shots")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "64-bit seed (default: QONTIC_SEED or entropy)");
  run->add_flag("--trace", trace, "print the basis after each measurement sub-step");
  run->add_option("--backend", backend, "model | oracle | both")
      ->check(CLI::IsMember({"model", "oracle", "both"}));
  run->add_option("--format", format, "text | jsonl")
      ->check(CLI::IsMember({"text", "jsonl", "json-lines"}));
  run->add_flag("--no-parallel", no_parallel, "force single-threaded shots");

  // demo
  std::string demo_name;
  std::optional<std::uint64_t> demo_seed;
  auto* demo = app.add_subcommand("demo", "walk through a contextuality demonstration");
  demo->add_option("name", demo_name, "pm-square | ghz | shallow")->required();
  demo->add_option("--seed", demo_seed, "seed for the coin stream (default: pinned script)");

  // stats
  std::size_t stats_n = 0;
  int stats_reps = 32;
  auto* stats = app.add_subcommand("stats", "memory accounting and timing at width n");
  stats->add_option("n", stats_n, "number of qubits")->required();
  stats->add_option("--reps", stats_reps, "benchmark repetitions")->check(CLI::PositiveNumber);

  // selftest
  std::optional<std::uint64_t> selftest_seed;
  std::size_t selftest_steps = 10000;
  auto* selftest = app.add_subcommand("selftest", "run the randomized invariant suite");
  selftest->add_option("--seed", selftest_seed, "seed for the randomized checks");
  selftest->add_option("--steps", selftest_steps, "soak-test step count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_path, shots, seed, trace, backend, format, !no_parallel);
    }
    if (demo->parsed()) return cmd_demo(demo_name, demo_seed);
    if (stats->parsed()) return cmd_stats(stats_n, stats_reps);
    if (selftest->parsed()) return cmd_selftest(selftest_seed, selftest_steps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExecution;
  }
  return kExitOk;
}
