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

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qontic/circuit.hpp"
#include "qontic/context.hpp"
#include "qontic/errors.hpp"
#include "qontic/rng.hpp"

namespace qontic {

// Step-by-step walkthroughs of the standard contextuality demonstrations.
// Each demo runs measurement sequences through the ordinary circuit
// executor, captures the basis after every sub-step, and checks the
// outcome parities against the quantum-mechanical predictions. With the
// default pinned coins the printed traces serve as golden files; any seed
// keeps every parity check intact.

struct MeasureTrace {
  std::string observable;
  int outcome = 0;
  std::string basis_before;  // stage A
  std::string basis_b;       // after the basis update
  std::string basis_c;       // after the disturbance coin
};

struct DemoSequence {
  std::string name;
  std::string initial_basis;
  std::vector<std::pair<std::string, std::string>> gate_steps;  // label, basis
  std::vector<MeasureTrace> measurements;
  int parity = 0;
  std::string output_bits;
};

struct DemoReport {
  std::string name;
  std::vector<DemoSequence> sequences;
  std::vector<std::string> checks;
  bool ok = true;

  std::vector<std::string> render() const {
    std::vector<std::string> lines;
    lines.push_back("demo " + name);
    for (const auto& seq : sequences) {
      lines.push_back("sequence " + seq.name);
      lines.push_back("  start " + seq.initial_basis);
      for (const auto& [label, basis] : gate_steps_or(seq)) {
        lines.push_back("  " + label + " -> " + basis);
      }
      for (const auto& m : seq.measurements) {
        lines.push_back("  measure " + m.observable + " -> " +
                        std::to_string(m.outcome));
        lines.push_back("    B " + m.basis_b);
        lines.push_back("    C " + m.basis_c);
      }
      lines.push_back("  outcome bits " + seq.output_bits + " (parity " +
                      std::to_string(seq.parity) + ")");
    }
    for (const auto& c : checks) lines.push_back(c);
    lines.push_back(ok ? "result: OK" : "result: MISMATCH");
    return lines;
  }

 private:
  static const std::vector<std::pair<std::string, std::string>>& gate_steps_or(
      const DemoSequence& seq) {
    return seq.gate_steps;
  }
};

namespace detail {

// Runs the measurement-only circuit against the state, collecting per-step
// basis snapshots from the trace hook.
inline DemoSequence run_measurements(std::string name, OnticState& state,
                                     const Circuit& circuit) {
  DemoSequence seq;
  seq.name = std::move(name);
  seq.initial_basis = state.brace_string();
  MeasureTrace current;
  std::vector<MeasureTrace> traces;
  state.set_trace_hook([&](const std::string& stage, const std::string& basis) {
    if (stage == "A") {
      current = MeasureTrace{};
      current.basis_before = basis;
    } else if (stage == "B") {
      current.basis_b = basis;
    } else {
      current.basis_c = basis;
      traces.push_back(current);
    }
  });
  auto records = execute(circuit, state);
  state.set_trace_hook({});
  for (std::size_t i = 0; i < records.size(); ++i) {
    MeasureTrace t = i < traces.size() ? traces[i] : MeasureTrace{};
    t.observable = records[i].observable;
    t.outcome = records[i].outcome;
    seq.measurements.push_back(std::move(t));
    seq.parity ^= records[i].outcome;
    seq.output_bits += char('0' + records[i].outcome);
  }
  return seq;
}

inline Circuit measurement_circuit(std::size_t n,
                                   const std::vector<std::string>& observables) {
  std::string text = "qubits " + std::to_string(n) + "\n";
  for (const auto& obs : observables) text += "M " + obs + "\n";
  return parse_circuit(text);
}

}  // namespace detail

// Peres-Mermin square from |00>: the right column (ZZ, XX, YY) has odd
// outcome parity while the bottom row (ZX, XZ, YY) has even parity, for
// every seed; YY's value depends on which commuting partners accompany it.
inline DemoReport demo_pm_square(const std::shared_ptr<CoinSource>& coins) {
  DemoReport report;
  report.name = "pm-square";
  auto right = detail::measurement_circuit(2, {"+ZZ", "+XX", "+YY"});
  auto bottom = detail::measurement_circuit(2, {"+ZX", "+XZ", "+YY"});

  auto s1 = OnticState::canonical(2, coins);
  report.sequences.push_back(detail::run_measurements("right column: ZZ XX YY", s1, right));
  auto s2 = OnticState::canonical(2, coins);
  report.sequences.push_back(detail::run_measurements("bottom row: ZX XZ YY", s2, bottom));

  const bool col_ok = report.sequences[0].parity == 1;
  const bool row_ok = report.sequences[1].parity == 0;
  report.checks.push_back(std::string("right column parity 1: ") +
                          (col_ok ? "yes" : "NO"));
  report.checks.push_back(std::string("bottom row parity 0: ") +
                          (row_ok ? "yes" : "NO"));
  report.ok = col_ok && row_ok;
  return report;
}

// Three-qubit GHZ correlations: Y1, Y2, X3 outcomes sum to 1 and X1, X2, X3
// outcomes sum to 0, for every assignment of the three basis signs.
inline DemoReport demo_ghz(const std::shared_ptr<CoinSource>& coins) {
  DemoReport report;
  report.name = "ghz";
  const int r = coins->toss(), s = coins->toss(), t = coins->toss();
  auto make_state = [&] {
    std::vector<PauliOperator> m = {parse_pauli("-XYY", 3), parse_pauli("-YXY", 3),
                                    parse_pauli("-YYX", 3)};
    std::vector<PauliOperator> c = {PauliOperator::single(3, 0, 'Y', r != 0),
                                    PauliOperator::single(3, 1, 'Y', s != 0),
                                    PauliOperator::single(3, 2, 'Y', t != 0)};
    return OnticState(std::move(m), std::move(c), coins);
  };

  auto seq1 = detail::measurement_circuit(3, {"+YII", "+IYI", "+IIX"});
  auto seq2 = detail::measurement_circuit(3, {"+XII", "+IXI", "+IIX"});
  auto g1 = make_state();
  report.sequences.push_back(detail::run_measurements("Y1 Y2 X3", g1, seq1));
  auto g2 = make_state();
  report.sequences.push_back(detail::run_measurements("X1 X2 X3", g2, seq2));

  const bool anti_ok = report.sequences[0].parity == 1;
  const bool corr_ok = report.sequences[1].parity == 0;
  report.checks.push_back(std::string("Y1^Y2^X3 = 1: ") + (anti_ok ? "yes" : "NO"));
  report.checks.push_back(std::string("X1^X2^X3 = 0: ") + (corr_ok ? "yes" : "NO"));
  report.ok = anti_ok && corr_ok;
  return report;
}

inline constexpr std::string_view kShallowCircuitText =
    "qubits 3\n"
    "H 0\nH 1\nH 2\n"
    "CZ 0 1\n"
    "CZ 0 2\n"
    "S 1\nS 2\n"
    "H 0\nH 1\nH 2\n"
    "M +ZII\n"
    "M +IZI\n"
    "M +IIZ\n";

// Shallow-circuit search instance: the three output bits always land in
// {100, 010, 001, 111}, uniformly over the preparation coins.
inline DemoReport demo_shallow(const std::shared_ptr<CoinSource>& coins) {
  DemoReport report;
  report.name = "shallow";
  auto circuit = parse_circuit(kShallowCircuitText);
  auto state = OnticState::canonical(3, coins);

  DemoSequence seq;
  seq.name = "oracle circuit + Z measurements";
  seq.initial_basis = state.brace_string();

  // Snapshot after each display group of the gate prefix.
  const std::vector<std::pair<std::size_t, std::string>> groups = {
      {2, "H0 H1 H2"}, {3, "CZ 0 1"}, {4, "CZ 0 2"}, {6, "S1 S2"}, {9, "H0 H1 H2"}};
  std::size_t group_at = 0;

  MeasureTrace current;
  std::vector<MeasureTrace> traces;
  state.set_trace_hook([&](const std::string& stage, const std::string& basis) {
    if (stage == "A") {
      current = MeasureTrace{};
      current.basis_before = basis;
    } else if (stage == "B") {
      current.basis_b = basis;
    } else {
      current.basis_c = basis;
      traces.push_back(current);
    }
  });
  auto records = execute(circuit, state, 0, [&](std::size_t index, const Instruction&) {
    if (group_at < groups.size() && index == groups[group_at].first) {
      seq.gate_steps.emplace_back(groups[group_at].second, state.brace_string());
      ++group_at;
    }
  });
  state.set_trace_hook({});
  for (std::size_t i = 0; i < records.size(); ++i) {
    MeasureTrace t = i < traces.size() ? traces[i] : MeasureTrace{};
    t.observable = records[i].observable;
    t.outcome = records[i].outcome;
    seq.measurements.push_back(std::move(t));
    seq.parity ^= records[i].outcome;
    seq.output_bits += char('0' + records[i].outcome);
  }
  report.sequences.push_back(std::move(seq));

  const std::string& z = report.sequences[0].output_bits;
  const bool ok = z == "100" || z == "010" || z == "001" || z == "111";
  report.checks.push_back("output " + z + " in {100,010,001,111}: " + (ok ? "yes" : "NO"));
  report.ok = ok;
  return report;
}

inline DemoReport run_demo(std::string_view name,
                           const std::shared_ptr<CoinSource>& coins) {
  if (name == "pm-square") return demo_pm_square(coins);
  if (name == "ghz") return demo_ghz(coins);
  if (name == "shallow") return demo_shallow(coins);
  throw Error("unknown demo '" + std::string(name) +
              "' (expected pm-square, ghz, or shallow)");
}

// Coin scripts that reproduce the reference walkthrough output.
inline std::vector<int> default_demo_coins(std::string_view name) {
  if (name == "pm-square") return {0, 1, 0, 0, 0, 0, 1, 0, 0, 0};
  if (name == "ghz") return {0, 0, 0, 0, 0, 0, 0, 0, 0};
  if (name == "shallow") return {0, 0, 0, 0, 0, 0};
  throw Error("unknown demo '" + std::string(name) + "'");
}

}  // namespace qontic
