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

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qontic/context.hpp"
#include "qontic/oracle.hpp"
#include "qontic/pauli.hpp"
#include "qontic/rng.hpp"

namespace qontic {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool ok = true;
  std::string detail;
};

namespace selftest_detail {

inline void random_gate(OnticState& state, std::mt19937_64& rng) {
  const std::size_t n = state.num_qubits();
  const int kind = int(rng() % (n >= 2 ? 7 : 5));
  const std::size_t q0 = rng() % n;
  std::size_t q1 = 0;
  if (kind >= 5) {
    q1 = rng() % n;
    while (q1 == q0) q1 = rng() % n;
  }
  switch (kind) {
    case 0: state.apply_h(q0); break;
    case 1: state.apply_s(q0); break;
    case 2: state.apply_x(q0); break;
    case 3: state.apply_y(q0); break;
    case 4: state.apply_z(q0); break;
    case 5: state.apply_cnot(q0, q1); break;
    default: state.apply_cz(q0, q1); break;
  }
}

inline PauliOperator random_observable(std::size_t n, std::mt19937_64& rng) {
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.set_x(q, rng() & 1);
    p.set_z(q, rng() & 1);
  }
  if (rng() & 1) p.set_phase(2);
  return p;
}

// Product of a random nonempty subset of the measurement rows.
inline PauliOperator random_row_product(const OnticState& state,
                                        std::mt19937_64& rng) {
  const std::size_t n = state.num_qubits();
  PauliOperator acc = PauliOperator::identity(n);
  bool nonempty = false;
  while (!nonempty) {
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() & 1) {
        acc.compose_in_place(state.measurement_row(k));
        nonempty = true;
      }
    }
  }
  return acc;
}

}  // namespace selftest_detail

// Basis conditions and Hermiticity hold after every randomized step.
inline CheckResult check_symplectic_soak(std::uint64_t seed, std::size_t steps) {
  using namespace selftest_detail;
  std::mt19937_64 rng(splitmix64(seed));
  CheckResult result("symplectic soak (" + std::to_string(steps) + " steps)");
  std::size_t violations = 0;
  std::size_t step = 0;
  while (step < steps) {
    const std::size_t n = 2 + rng() % 7;
    auto state = OnticState::canonical(n, make_seeded_coins(rng()));
    const std::size_t episode = std::min<std::size_t>(steps - step, 100 + rng() % 100);
    for (std::size_t i = 0; i < episode; ++i, ++step) {
      const int action = int(rng() % 100);
      if (action < 55) {
        random_gate(state, rng);
      } else if (action < 95) {
        state.measure(random_observable(n, rng));
      } else {
        // occasional preparation: refix a random subset of the current rows
        std::vector<PauliOperator> gens;
        for (std::size_t k = 0; k < n; ++k) {
          if (rng() & 1) gens.push_back(state.measurement_row(k));
        }
        if (!gens.empty()) state.prepare_by_measurement(gens);
      }
      if (!state.check_symplectic()) ++violations;
    }
  }
  if (violations) {
    result.ok = false;
    result.detail = std::to_string(violations) + " violations";
  }
  return result;
}

// Measuring the same observable twice in a row gives the same bit.
inline CheckResult check_repeatability(std::uint64_t seed, std::size_t trials) {
  using namespace selftest_detail;
  std::mt19937_64 rng(splitmix64(seed ^ 0x5eedull));
  CheckResult result("repeatability (" + std::to_string(trials) + " trials)");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto state = OnticState::canonical(n, make_seeded_coins(rng()));
    for (int g = 0; g < 12; ++g) random_gate(state, rng);
    const auto obs = random_observable(n, rng);
    const int first = state.measure(obs);
    const int second = state.measure(obs);
    if (first != second) {
      result.ok = false;
      result.detail = "trial " + std::to_string(trial);
      return result;
    }
  }
  return result;
}

// On the stored group, outcomes compose: v(PQ) = v(P) xor v(Q).
inline CheckResult check_row_homomorphism(std::uint64_t seed, std::size_t trials) {
  using namespace selftest_detail;
  std::mt19937_64 rng(splitmix64(seed ^ 0x9e37ull));
  CheckResult result("value assignment is a homomorphism on the stored group");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    auto state = OnticState::canonical(n, make_seeded_coins(rng()));
    for (int g = 0; g < 15; ++g) random_gate(state, rng);
    const auto p = random_row_product(state, rng);
    const auto q = random_row_product(state, rng);
    const auto pq = compose(p, q);
    const int vp = state.measure(p);
    const int vq = state.measure(q);
    const int vpq = state.measure(pq);
    if (vpq != (vp ^ vq)) {
      result.ok = false;
      result.detail = "trial " + std::to_string(trial);
      return result;
    }
  }
  return result;
}

// For pairwise-commuting observables measured in a fixed order, the
// (observable -> outcome) map is independent of every disturbance draw.
// Note the order itself may influence the split of outcomes (the totals
// constrained by the stored group are fixed); that influence is
// deterministic and is covered by the determinism check.
inline CheckResult check_disturbance_invariance(std::uint64_t seed,
                                                std::size_t trials) {
  using namespace selftest_detail;
  std::mt19937_64 rng(splitmix64(seed ^ 0x51deull));
  CheckResult result("commuting outcomes ignore disturbance draws");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    // Harvest a commuting family from an unrelated random state's rows.
    auto donor = OnticState::canonical(n, make_seeded_coins(rng()));
    for (int g = 0; g < 15; ++g) random_gate(donor, rng);
    const std::size_t count = 2 + rng() % 3;
    std::vector<PauliOperator> family;
    for (std::size_t i = 0; i < count; ++i) {
      family.push_back(random_row_product(donor, rng));
    }

    auto base = OnticState::canonical(n, make_seeded_coins(rng()));
    std::mt19937_64 walk(rng());
    for (int g = 0; g < 10; ++g) random_gate(base, walk);

    std::vector<std::size_t> order(family.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> reference;
    for (int draw = 0; draw < 8; ++draw) {
      auto state = base;
      state.set_coins(make_seeded_coins(rng()));
      std::vector<int> outcomes;
      for (const auto idx : order) outcomes.push_back(state.measure(family[idx]));
      if (draw == 0) {
        reference = outcomes;
      } else if (outcomes != reference) {
        result.ok = false;
        result.detail = "trial " + std::to_string(trial);
        return result;
      }
    }
  }
  return result;
}

// Observables drawn from the span of the current measurement rows have
// deterministic values, so there the outcome map is invariant under every
// measurement ordering and every disturbance draw.
inline CheckResult check_order_invariance_in_span(std::uint64_t seed,
                                                  std::size_t trials) {
  using namespace selftest_detail;
  std::mt19937_64 rng(splitmix64(seed ^ 0x0cdeull));
  CheckResult result("stored-group outcomes are order invariant");
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    auto base = OnticState::canonical(n, make_seeded_coins(rng()));
    std::mt19937_64 walk(rng());
    for (int g = 0; g < 12; ++g) random_gate(base, walk);

    const std::size_t count = 2 + rng() % 3;
    std::vector<PauliOperator> family;
    for (std::size_t i = 0; i < count; ++i) {
      family.push_back(random_row_product(base, rng));
    }
    std::vector<std::size_t> order(family.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    std::map<std::string, int> reference;
    bool have_reference = false;
    for (int perm = 0; perm < 8; ++perm) {
      std::shuffle(order.begin(), order.end(), rng);
      auto state = base;
      state.set_coins(make_seeded_coins(rng()));
      std::map<std::string, int> outcomes;
      for (const auto idx : order) {
        outcomes[format_pauli_signed(family[idx])] = state.measure(family[idx]);
      }
      if (!have_reference) {
        reference = outcomes;
        have_reference = true;
      } else if (outcomes != reference) {
        result.ok = false;
        result.detail = "trial " + std::to_string(trial);
        return result;
      }
    }
  }
  return result;
}

// Coordinate gate updates agree with matrix conjugation on the oracle:
// U P |b> = P' U |b> for every computational basis state |b>.
inline CheckResult check_gate_conjugation(std::uint64_t seed) {
  using namespace selftest_detail;
  CheckResult result("gate conjugation matches the state-vector oracle");
  auto mismatch = [&](const std::string& what) {
    result.ok = false;
    result.detail = what;
  };

  auto agree = [](const QuantumState& a, const QuantumState& b) {
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) {
      if (std::abs(av[i] - bv[i]) > 1e-12) return false;
    }
    return true;
  };

  auto basis_state = [](std::size_t n, std::uint64_t bits) {
    QuantumState s(n, make_seeded_coins(0));
    for (std::size_t q = 0; q < n; ++q) {
      if ((bits >> (n - 1 - q)) & 1) s.apply_x(q);
    }
    return s;
  };

  // Exhaustive over one- and two-qubit supports.
  for (int gate = 0; gate < 7 && result.ok; ++gate) {
    const bool two_qubit = gate >= 5;
    const std::size_t n = two_qubit ? 2 : 1;
    const int codes = two_qubit ? 16 : 4;
    for (std::size_t q0 = 0; q0 < n && result.ok; ++q0) {
      const std::size_t q1 = two_qubit ? (1 - q0) : 0;
      for (int code = 0; code < codes && result.ok; ++code) {
        for (int phase = 0; phase <= 2; phase += 2) {
          PauliOperator p(n);
          p.set_x(0, code & 1);
          p.set_z(0, (code >> 1) & 1);
          if (two_qubit) {
            p.set_x(1, (code >> 2) & 1);
            p.set_z(1, (code >> 3) & 1);
          }
          p.set_phase(phase);
          PauliOperator updated = p;
          switch (gate) {
            case 0: updated.conj_h(q0); break;
            case 1: updated.conj_s(q0); break;
            case 2: updated.conj_x(q0); break;
            case 3: updated.conj_y(q0); break;
            case 4: updated.conj_z(q0); break;
            case 5: updated.conj_cnot(q0, q1); break;
            default: updated.conj_cz(q0, q1); break;
          }
          for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            auto lhs = basis_state(n, b);
            lhs.apply_pauli(p);
            auto rhs = basis_state(n, b);
            switch (gate) {
              case 0: lhs.apply_h(q0); rhs.apply_h(q0); break;
              case 1: lhs.apply_s(q0); rhs.apply_s(q0); break;
              case 2: lhs.apply_x(q0); rhs.apply_x(q0); break;
              case 3: lhs.apply_y(q0); rhs.apply_y(q0); break;
              case 4: lhs.apply_z(q0); rhs.apply_z(q0); break;
              case 5: lhs.apply_cnot(q0, q1); rhs.apply_cnot(q0, q1); break;
              default: lhs.apply_cz(q0, q1); rhs.apply_cz(q0, q1); break;
            }
            rhs.apply_pauli(updated);
            if (!agree(lhs, rhs)) {
              mismatch("gate " + std::to_string(gate) + " code " + std::to_string(code));
              break;
            }
          }
        }
      }
    }
  }

  // The signature identity: conjugating Y by H flips its sign.
  PauliOperator y = PauliOperator::single(1, 0, 'Y');
  y.conj_h(0);
  if (format_pauli(y) != "-Y") mismatch("HYH != -Y");

  (void)seed;
  return result;
}

inline std::vector<CheckResult> run_invariant_suite(std::uint64_t seed,
                                                    std::size_t soak_steps = 10000) {
  std::vector<CheckResult> results;
  results.push_back(check_symplectic_soak(seed, soak_steps));
  results.push_back(check_repeatability(seed, 2000));
  results.push_back(check_row_homomorphism(seed, 2000));
  results.push_back(check_disturbance_invariance(seed, 400));
  results.push_back(check_order_invariance_in_span(seed, 400));
  results.push_back(check_gate_conjugation(seed));
  return results;
}

inline bool all_ok(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.ok) return false;
  }
  return true;
}

}  // namespace qontic
