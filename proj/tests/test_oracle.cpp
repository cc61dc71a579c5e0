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

#include "qontic/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "qontic/context.hpp"

using namespace qontic;

namespace {

PauliOperator P(const std::string& text, std::size_t n) { return parse_pauli(text, n); }

// Applies one named gate to both representations.
template <typename Backend>
void apply_gate(Backend& b, int gate, std::size_t q0, std::size_t q1) {
  switch (gate) {
    case 0: b.apply_h(q0); break;
    case 1: b.apply_s(q0); break;
    case 2: b.apply_x(q0); break;
    case 3: b.apply_y(q0); break;
    case 4: b.apply_z(q0); break;
    case 5: b.apply_cnot(q0, q1); break;
    default: b.apply_cz(q0, q1); break;
  }
}

void conj_gate(PauliOperator& p, int gate, std::size_t q0, std::size_t q1) {
  switch (gate) {
    case 0: p.conj_h(q0); break;
    case 1: p.conj_s(q0); break;
    case 2: p.conj_x(q0); break;
    case 3: p.conj_y(q0); break;
    case 4: p.conj_z(q0); break;
    case 5: p.conj_cnot(q0, q1); break;
    default: p.conj_cz(q0, q1); break;
  }
}

bool states_close(const QuantumState& a, const QuantumState& b, double tol = 1e-12) {
  const auto& av = a.amplitudes();
  const auto& bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (std::abs(av[i] - bv[i]) > tol) return false;
  }
  return true;
}

QuantumState basis_state(std::size_t n, std::uint64_t bits) {
  QuantumState s(n, make_seeded_coins(0));
  for (std::size_t q = 0; q < n; ++q) {
    if ((bits >> (n - 1 - q)) & 1) s.apply_x(q);
  }
  return s;
}

}  // namespace

TEST_CASE("elementary gate action", "[oracle]") {
  QuantumState s(1, make_seeded_coins(0));
  s.apply_h(0);
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitudes()[0] - inv) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1] - inv) < 1e-12);

  SECTION("CZ is diag(1,1,1,-1)") {
    for (std::uint64_t b = 0; b < 4; ++b) {
      auto t = basis_state(2, b);
      t.apply_cz(0, 1);
      const double want = (b == 3) ? -1.0 : 1.0;
      CHECK(std::abs(t.amplitudes()[b] - want) < 1e-12);
    }
  }
  SECTION("norm survives random circuits") {
    std::mt19937_64 rng(5);
    QuantumState t(4, make_seeded_coins(9));
    for (int i = 0; i < 200; ++i) {
      std::size_t q0 = rng() % 4, q1 = rng() % 4;
      while (q1 == q0) q1 = rng() % 4;
      apply_gate(t, int(rng() % 7), q0, q1);
      REQUIRE(std::abs(t.norm() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("expectations on simple states", "[oracle]") {
  QuantumState zero(1, make_seeded_coins(0));
  CHECK(zero.expectation(P("Z", 1)) == Catch::Approx(1.0).margin(1e-12));
  CHECK(zero.expectation(P("X", 1)) == Catch::Approx(0.0).margin(1e-12));
  CHECK(zero.expectation(P("-Z", 1)) == Catch::Approx(-1.0).margin(1e-12));

  const PauliOperator gens[] = {P("-XYY", 3), P("-YXY", 3), P("-YYX", 3)};
  auto ghz = QuantumState::from_stabilizers(gens, make_seeded_coins(0));
  CHECK(ghz.expectation(P("XYY", 3)) == Catch::Approx(-1.0).margin(1e-9));
  CHECK(ghz.expectation(P("XXX", 3)) == Catch::Approx(1.0).margin(1e-9));
  CHECK(ghz.expectation(P("ZII", 3)) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("stabilizer expectations are -1, 0, or +1", "[oracle]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    QuantumState s(n, make_seeded_coins(rng()));
    for (int g = 0; g < 25; ++g) {
      std::size_t q0 = rng() % n, q1 = rng() % n;
      while (q1 == q0) q1 = rng() % n;
      apply_gate(s, int(rng() % 7), q0, q1);
    }
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
      p.set_x(q, rng() & 1);
      p.set_z(q, rng() & 1);
    }
    if (rng() & 1) p.set_phase(2);
    const double e = s.expectation(p);
    const bool snapped = std::abs(e) < 1e-9 || std::abs(e - 1.0) < 1e-9 ||
                         std::abs(e + 1.0) < 1e-9;
    CHECK(snapped);
  }
}

TEST_CASE("measurement draws and collapse", "[oracle]") {
  SECTION("deterministic on an eigenstate") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      QuantumState s(1, make_seeded_coins(seed));
      CHECK(s.measure(P("Z", 1)) == 0);
    }
  }
  SECTION("unbiased on a conjugate axis") {
    int ones = 0;
    const int shots = 4000;
    for (int seed = 0; seed < shots; ++seed) {
      QuantumState s(1, make_seeded_coins(derive_shot_seed(5, seed)));
      ones += s.measure(P("X", 1));
    }
    const double freq = double(ones) / shots;
    CHECK(std::abs(freq - 0.5) < 5.0 * std::sqrt(0.25 / shots));
  }
  SECTION("repeated measurement is idempotent") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
      QuantumState s(3, make_seeded_coins(rng()));
      for (int g = 0; g < 15; ++g) {
        std::size_t q0 = rng() % 3, q1 = rng() % 3;
        while (q1 == q0) q1 = rng() % 3;
        apply_gate(s, int(rng() % 7), q0, q1);
      }
      PauliOperator p(3);
      for (std::size_t q = 0; q < 3; ++q) {
        p.set_x(q, rng() & 1);
        p.set_z(q, rng() & 1);
      }
      const int first = s.measure(p);
      auto before = s.amplitudes();
      CHECK(s.measure(p) == first);
      CHECK(std::abs(s.norm() - 1.0) < 1e-10);
      const auto& after = s.amplitudes();
      for (std::size_t i = 0; i < after.size(); ++i) {
        REQUIRE(std::abs(after[i] - before[i]) < 1e-10);
      }
    }
  }
  SECTION("ZZ, XX, YY outcomes on |00> sum to 1") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      QuantumState s(2, make_seeded_coins(seed));
      const int total =
          s.measure(P("ZZ", 2)) ^ s.measure(P("XX", 2)) ^ s.measure(P("YY", 2));
      CHECK(total == 1);
    }
  }
}

TEST_CASE("gate conjugation matches the coordinate rules", "[oracle][gates]") {
  // U P |b> must equal P' U |b> with P' the coordinate-updated element, for
  // every basis state; that pins both the support and the sign of P'.
  SECTION("single-qubit gates, exhaustive") {
    for (int gate = 0; gate < 5; ++gate) {
      for (int code = 0; code < 4; ++code) {
        for (int phase = 0; phase <= 2; phase += 2) {
          PauliOperator p(1);
          p.set_x(0, code & 1);
          p.set_z(0, (code >> 1) & 1);
          p.set_phase(phase);
          PauliOperator q = p;
          conj_gate(q, gate, 0, 0);
          for (std::uint64_t b = 0; b < 2; ++b) {
            auto lhs = basis_state(1, b);
            lhs.apply_pauli(p);
            apply_gate(lhs, gate, 0, 0);
            auto rhs = basis_state(1, b);
            apply_gate(rhs, gate, 0, 0);
            rhs.apply_pauli(q);
            REQUIRE(states_close(lhs, rhs));
          }
        }
      }
    }
  }
  SECTION("HYH = -Y") {
    auto y = P("Y", 1);
    y.conj_h(0);
    CHECK(format_pauli(y) == "-Y");
  }
  SECTION("two-qubit gates, exhaustive over local supports") {
    for (int gate = 5; gate <= 6; ++gate) {
      for (std::size_t q0 = 0; q0 < 2; ++q0) {
        const std::size_t q1 = 1 - q0;
        for (int code = 0; code < 16; ++code) {
          for (int phase = 0; phase <= 2; phase += 2) {
            PauliOperator p(2);
            p.set_x(0, code & 1);
            p.set_z(0, (code >> 1) & 1);
            p.set_x(1, (code >> 2) & 1);
            p.set_z(1, (code >> 3) & 1);
            p.set_phase(phase);
            PauliOperator q = p;
            conj_gate(q, gate, q0, q1);
            for (std::uint64_t b = 0; b < 4; ++b) {
              auto lhs = basis_state(2, b);
              lhs.apply_pauli(p);
              apply_gate(lhs, gate, q0, q1);
              auto rhs = basis_state(2, b);
              apply_gate(rhs, gate, q0, q1);
              rhs.apply_pauli(q);
              REQUIRE(states_close(lhs, rhs));
            }
          }
        }
      }
    }
  }
  SECTION("n = 4 embeddings with spectator content") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 400; ++trial) {
      PauliOperator p(4);
      for (std::size_t q = 0; q < 4; ++q) {
        p.set_x(q, rng() & 1);
        p.set_z(q, rng() & 1);
      }
      if (rng() & 1) p.set_phase(2);
      const int gate = int(rng() % 7);
      std::size_t q0 = rng() % 4, q1 = rng() % 4;
      while (q1 == q0) q1 = rng() % 4;
      PauliOperator q = p;
      conj_gate(q, gate, q0, q1);
      const std::uint64_t b = rng() % 16;
      auto lhs = basis_state(4, b);
      lhs.apply_pauli(p);
      apply_gate(lhs, gate, q0, q1);
      auto rhs = basis_state(4, b);
      apply_gate(rhs, gate, q0, q1);
      rhs.apply_pauli(q);
      REQUIRE(states_close(lhs, rhs));
    }
  }
}

TEST_CASE("errors and caps", "[oracle]") {
  CHECK_THROWS_AS(QuantumState(13, make_seeded_coins(0)), DimensionError);
  CHECK_NOTHROW(QuantumState(13, make_seeded_coins(0), 13));
  QuantumState s(2, make_seeded_coins(0));
  CHECK_THROWS_AS(s.expectation(multiply_i(P("ZZ", 2))), InvalidObservableError);
  CHECK_THROWS_AS(s.expectation(P("Z", 1)), DimensionError);
  CHECK_THROWS_AS(s.apply_cnot(0, 0), InvalidGateError);
  auto c = parse_circuit("qubits 2\nM +ZZ\n");
  CHECK_THROWS_AS(oracle_apply(s, c.instructions[0]), Error);
}

TEST_CASE("oracle runs circuits through the shared executor", "[oracle][circuit]") {
  auto circuit = parse_circuit("qubits 2\nH 0\nCNOT 0 1\nM +ZZ\nM +XX\n");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    QuantumState s(2, make_seeded_coins(seed));
    auto records = execute(circuit, s);
    REQUIRE(records.size() == 2);
    CHECK(records[0].outcome == 0);  // Bell pair: ZZ and XX both +1
    CHECK(records[1].outcome == 0);
  }
  SECTION("Fig-1-style gate prefix gives <ZXX> = +1") {
    auto prefix = parse_circuit(
        "qubits 3\nH 0\nH 1\nH 2\nCZ 0 1\nCZ 0 2\nS 1\nS 2\nH 0\nH 1\nH 2\n");
    QuantumState s(3, make_seeded_coins(3));
    execute(prefix, s);
    CHECK(s.expectation(P("ZXX", 3)) == Catch::Approx(1.0).margin(1e-9));
    CHECK(s.expectation(P("-XYI", 3)) == Catch::Approx(1.0).margin(1e-9));
    CHECK(s.expectation(P("-XIY", 3)) == Catch::Approx(1.0).margin(1e-9));
  }
}
