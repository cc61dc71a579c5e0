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

#include <array>
#include <charconv>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qontic/errors.hpp"
#include "qontic/pauli.hpp"

namespace qontic {

enum class GateKind : std::uint8_t { H, S, X, Y, Z, Cnot, Cz, Measure };

inline std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Cz: return "CZ";
    case GateKind::Measure: return "M";
  }
  return "?";
}

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::Cnot:
    case GateKind::Cz: return 2;
    case GateKind::Measure: return 0;
    default: return 1;
  }
}

struct Instruction {
  GateKind kind = GateKind::H;
  std::array<std::uint32_t, 2> qubits{0, 0};  // [0] for 1q; both for 2q
  std::optional<PauliOperator> observable;    // Measure only
  std::string label;                          // Measure only; empty = default
};

struct Circuit {
  std::size_t n = 0;
  std::vector<Instruction> instructions;

  std::size_t measurement_count() const {
    std::size_t total = 0;
    for (const auto& ins : instructions) {
      if (ins.kind == GateKind::Measure) ++total;
    }
    return total;
  }
};

struct MeasurementRecord {
  std::string label;
  std::string observable;  // always-signed text, e.g. "+ZZ"
  int outcome = 0;
  std::uint64_t shot = 0;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

inline std::uint32_t parse_qubit(const Token& tok, std::size_t n, std::size_t lineno) {
  std::uint32_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a qubit index, got '" + std::string(tok.text) + "'",
                     lineno, tok.column);
  }
  if (value >= n) {
    throw ParseError("qubit index " + std::to_string(value) + " out of range [0," +
                         std::to_string(n - 1) + "]",
                     lineno, tok.column);
  }
  return value;
}

}  // namespace detail

// Line-oriented circuit text:
//
//   qubits <n>
//   H q | S q | X q | Y q | Z q | CNOT qc qt | CZ q1 q2
//   M [label=][+|-]<n Pauli characters>
//
// '#' starts a comment, blank lines are skipped, qubit indices are 0-based,
// and Pauli character 0 acts on qubit 0 (printed leftmost).
inline Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_header = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0].text != "qubits") {
        throw ParseError("missing 'qubits' header", lineno, tokens[0].column);
      }
      if (tokens.size() != 2) {
        throw ParseError("'qubits' takes exactly one count", lineno, tokens[0].column);
      }
      std::uint32_t n = 0;
      const char* first = tokens[1].text.data();
      const char* last = first + tokens[1].text.size();
      auto [ptr, ec] = std::from_chars(first, last, n);
      if (ec != std::errc() || ptr != last || n == 0) {
        throw ParseError("bad qubit count '" + std::string(tokens[1].text) + "'",
                         lineno, tokens[1].column);
      }
      circuit.n = n;
      have_header = true;
      continue;
    }

    const std::string_view mnemonic = tokens[0].text;
    Instruction ins;
    if (mnemonic == "H") {
      ins.kind = GateKind::H;
    } else if (mnemonic == "S") {
      ins.kind = GateKind::S;
    } else if (mnemonic == "X") {
      ins.kind = GateKind::X;
    } else if (mnemonic == "Y") {
      ins.kind = GateKind::Y;
    } else if (mnemonic == "Z") {
      ins.kind = GateKind::Z;
    } else if (mnemonic == "CNOT") {
      ins.kind = GateKind::Cnot;
    } else if (mnemonic == "CZ") {
      ins.kind = GateKind::Cz;
    } else if (mnemonic == "M") {
      ins.kind = GateKind::Measure;
    } else {
      throw ParseError("unknown mnemonic '" + std::string(mnemonic) + "'", lineno,
                       tokens[0].column);
    }

    if (ins.kind == GateKind::Measure) {
      if (tokens.size() != 2) {
        throw ParseError("'M' takes exactly one observable", lineno, tokens[0].column);
      }
      std::string_view body = tokens[1].text;
      std::size_t body_col = tokens[1].column;
      if (const auto eq = body.find('='); eq != std::string_view::npos) {
        if (eq == 0) {
          throw ParseError("empty measurement label", lineno, body_col);
        }
        ins.label = std::string(body.substr(0, eq));
        body = body.substr(eq + 1);
        body_col += eq + 1;
      }
      try {
        ins.observable = parse_pauli(body, circuit.n);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), lineno, body_col + e.column());
      }
    } else {
      const int arity = gate_arity(ins.kind);
      if (tokens.size() != std::size_t(arity) + 1) {
        throw ParseError(std::string(gate_name(ins.kind)) + " takes " +
                             std::to_string(arity) + " qubit argument(s)",
                         lineno, tokens[0].column);
      }
      for (int a = 0; a < arity; ++a) {
        ins.qubits[std::size_t(a)] = detail::parse_qubit(tokens[std::size_t(a) + 1],
                                                         circuit.n, lineno);
      }
      if (arity == 2 && ins.qubits[0] == ins.qubits[1]) {
        throw ParseError("duplicate qubit in two-qubit gate", lineno, tokens[2].column);
      }
    }
    circuit.instructions.push_back(std::move(ins));
  }
  if (!have_header) {
    throw ParseError("missing 'qubits' header", lineno ? lineno : 1, 1);
  }
  return circuit;
}

inline std::string format_circuit(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.n) + "\n";
  for (const auto& ins : circuit.instructions) {
    out += gate_name(ins.kind);
    if (ins.kind == GateKind::Measure) {
      out += ' ';
      if (!ins.label.empty()) {
        out += ins.label;
        out += '=';
      }
      out += format_pauli_signed(*ins.observable);
    } else {
      for (int a = 0; a < gate_arity(ins.kind); ++a) {
        out += ' ';
        out += std::to_string(ins.qubits[std::size_t(a)]);
      }
    }
    out += '\n';
  }
  return out;
}

template <typename Backend>
concept CircuitBackend = requires(Backend b, const PauliOperator& p, std::size_t q) {
  { b.num_qubits() } -> std::convertible_to<std::size_t>;
  b.apply_h(q);
  b.apply_s(q);
  b.apply_x(q);
  b.apply_y(q);
  b.apply_z(q);
  b.apply_cnot(q, q);
  b.apply_cz(q, q);
  { b.measure(p) } -> std::convertible_to<int>;
};

using StepObserver = std::function<void(std::size_t index, const Instruction&)>;

// Runs the circuit on any backend, returning records in measurement order.
// Measurements without an explicit label are named m0, m1, ... by ordinal.
template <CircuitBackend Backend>
std::vector<MeasurementRecord> execute(const Circuit& circuit, Backend& backend,
                                       std::uint64_t shot = 0,
                                       const StepObserver& after_step = {}) {
  if (backend.num_qubits() != circuit.n) {
    throw DimensionError("circuit width does not match backend width");
  }
  std::vector<MeasurementRecord> records;
  std::size_t measured = 0;
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const Instruction& ins = circuit.instructions[i];
    switch (ins.kind) {
      case GateKind::H: backend.apply_h(ins.qubits[0]); break;
      case GateKind::S: backend.apply_s(ins.qubits[0]); break;
      case GateKind::X: backend.apply_x(ins.qubits[0]); break;
      case GateKind::Y: backend.apply_y(ins.qubits[0]); break;
      case GateKind::Z: backend.apply_z(ins.qubits[0]); break;
      case GateKind::Cnot: backend.apply_cnot(ins.qubits[0], ins.qubits[1]); break;
      case GateKind::Cz: backend.apply_cz(ins.qubits[0], ins.qubits[1]); break;
      case GateKind::Measure: {
        MeasurementRecord rec;
        rec.label = ins.label.empty() ? "m" + std::to_string(measured) : ins.label;
        rec.observable = format_pauli_signed(*ins.observable);
        rec.outcome = backend.measure(*ins.observable);
        rec.shot = shot;
        records.push_back(std::move(rec));
        ++measured;
        break;
      }
    }
    if (after_step) after_step(i, ins);
  }
  return records;
}

// One JSON object per record; labels and observables are escaped.
inline std::string to_json_line(const MeasurementRecord& rec) {
  auto escape = [](const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
      switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            constexpr const char* hex = "0123456789abcdef";
            out += "\\u00";
            out += hex[(ch >> 4) & 0xf];
            out += hex[ch & 0xf];
          } else {
            out += ch;
          }
      }
    }
    return out;
  };
  return "{\"shot\":" + std::to_string(rec.shot) + ",\"label\":\"" + escape(rec.label) +
         "\",\"observable\":\"" + escape(rec.observable) +
         "\",\"outcome\":" + std::to_string(rec.outcome) + "}";
}

}  // namespace qontic
