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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qontic/bitvec.hpp"
#include "qontic/errors.hpp"
#include "qontic/pauli.hpp"
#include "qontic/rng.hpp"

namespace qontic {

// Coefficients of a Hermitian element over the stored symplectic basis:
// measurement rows with m_k = 1, conjugate rows with c_k = 1, the outcome
// bit v, and the residual bit w (reported but never used as an outcome).
struct Expansion {
  BitVec m, c;
  int v = 0;
  int w = 0;
};

struct MemoryReport {
  std::size_t n = 0;
  std::uint64_t context_bits = 0;  // 2n basis elements at 2n+1 bits each
  std::uint64_t storage_bits = 0;  // actual allocation, padding included
};

// Fired after measurement sub-steps with the updated basis rendered as
// signed Pauli strings. Stages: "A" outcome retrieved (basis untouched),
// "B" basis updated, "C" conjugate phase randomized.
using TraceHook =
    std::function<void(const std::string& stage, const std::string& basis)>;

// Complete internal state of the simulator: a symplectic basis of 2n signed
// Pauli elements. The measurement rows M_k form a stabilizer group whose
// signs encode every deterministic outcome; the conjugate rows C_k complete
// the basis (M_j*M_k = C_j*C_k = 0 and M_j*C_k = delta_jk mod 2) and carry
// independently randomized signs. Every measurement outcome is a function of
// this state; the only randomness is one coin per measurement (step C).
//
// Single writer: gates and measurements mutate the state and must be
// externally serialized. Independent shots should use independent states
// with independently seeded coin sources.
class OnticState {
 public:
  struct MeasureInfo {
    int outcome = 0;
    // Basis slot that received the measured element, or BitVec::npos when
    // the observable had identity support and nothing was stored.
    std::size_t slot = BitVec::npos;
  };

  // Validates the symplectic basis conditions on the given rows.
  OnticState(std::vector<PauliOperator> measurement_rows,
             std::vector<PauliOperator> conjugate_rows,
             std::shared_ptr<CoinSource> coins)
      : OnticState(std::move(measurement_rows), std::move(conjugate_rows),
                   std::move(coins), true) {}

  // |0...0>: M_k = Z_k and C_k = (-1)^{r_k} X_k with one coin per qubit.
  static OnticState canonical(std::size_t n, std::shared_ptr<CoinSource> coins) {
    if (n == 0) throw DimensionError("qubit count must be at least 1");
    if (!coins) throw Error("coin source required");
    std::vector<PauliOperator> m, c;
    m.reserve(n);
    c.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      m.push_back(PauliOperator::single(n, k, 'Z'));
      c.push_back(PauliOperator::single(n, k, 'X', coins->toss() != 0));
    }
    return OnticState(std::move(m), std::move(c), std::move(coins), false);
  }

  std::size_t num_qubits() const { return n_; }
  const PauliOperator& measurement_row(std::size_t k) const { return m_[k]; }
  const PauliOperator& conjugate_row(std::size_t k) const { return c_[k]; }

  std::shared_ptr<CoinSource> coins() const { return coins_; }
  void set_coins(std::shared_ptr<CoinSource> coins) { coins_ = std::move(coins); }
  void set_trace_hook(TraceHook hook) { hook_ = std::move(hook); }

  // Expands obs over the basis: m_k = obs*C_k mod 2, c_k = obs*M_k mod 2.
  // The selected rows are recomposed in a fixed canonical order, conjugate
  // rows first then measurement rows, each in ascending slot order; the
  // phase gap to obs is i^{2v+w}. Anticommuting row pairs make the product
  // order-sensitive, so the order is part of the model's contract.
  Expansion expand(const PauliOperator& obs) const {
    check_observable(obs);
    Expansion e{BitVec(n_), BitVec(n_), 0, 0};
    for (std::size_t k = 0; k < n_; ++k) {
      if (symplectic_product(obs, c_[k]) & 1) e.m.set(k, true);
      if (symplectic_product(obs, m_[k]) & 1) e.c.set(k, true);
    }
    PauliOperator acc = PauliOperator::identity(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (e.c.get(k)) acc.compose_in_place(c_[k]);
    }
    for (std::size_t k = 0; k < n_; ++k) {
      if (e.m.get(k)) acc.compose_in_place(m_[k]);
    }
    if (acc.x_bits() != obs.x_bits() || acc.z_bits() != obs.z_bits()) {
      throw Error("expansion failed to reproduce the observable; basis corrupt");
    }
    const int diff = ((obs.phase() - acc.phase()) % 4 + 4) % 4;
    e.v = diff >> 1;
    e.w = diff & 1;
    return e;
  }

  // Deterministic outcome retrieval, basis surgery, and disturbance.
  //   A: v from the expansion.
  //   B: if some c_k != 0 the observable is new; clear the other
  //      anticommuting rows with the pivot, then retire the pivot row into
  //      the conjugate half. Otherwise pick a pivot among m_k != 0. Either
  //      way store (-1)^v obs in the pivot slot and fold the pivot's
  //      conjugate row into the other conjugate rows that anticommute with
  //      obs.
  //   C: randomize the sign of the pivot's conjugate row (one coin).
  // Identity-support observables return their sign bit and skip B and C.
  MeasureInfo measure_info(const PauliOperator& obs) {
    return measure_impl(obs, nullptr);
  }

  int measure(const PauliOperator& obs) { return measure_info(obs).outcome; }

  void apply_h(std::size_t q) {
    check_qubit(q);
    for (auto& e : m_) e.conj_h(q);
    for (auto& e : c_) e.conj_h(q);
  }
  void apply_s(std::size_t q) {
    check_qubit(q);
    for (auto& e : m_) e.conj_s(q);
    for (auto& e : c_) e.conj_s(q);
  }
  void apply_x(std::size_t q) {
    check_qubit(q);
    for (auto& e : m_) e.conj_x(q);
    for (auto& e : c_) e.conj_x(q);
  }
  void apply_y(std::size_t q) {
    check_qubit(q);
    for (auto& e : m_) e.conj_y(q);
    for (auto& e : c_) e.conj_y(q);
  }
  void apply_z(std::size_t q) {
    check_qubit(q);
    for (auto& e : m_) e.conj_z(q);
    for (auto& e : c_) e.conj_z(q);
  }
  void apply_cnot(std::size_t control, std::size_t target) {
    check_pair(control, target);
    for (auto& e : m_) e.conj_cnot(control, target);
    for (auto& e : c_) e.conj_cnot(control, target);
  }
  void apply_cz(std::size_t a, std::size_t b) {
    check_pair(a, b);
    for (auto& e : m_) e.conj_cz(a, b);
    for (auto& e : c_) e.conj_cz(a, b);
  }

  // Conjugates every basis element by the Pauli unitary p: elements that
  // anticommute with p flip sign.
  void conjugate_by(const PauliOperator& p) {
    if (p.num_qubits() != n_) throw DimensionError("width mismatch");
    for (auto& e : m_) {
      if (symplectic_product(e, p) & 1) e.add_phase(2);
    }
    for (auto& e : c_) {
      if (symplectic_product(e, p) & 1) e.add_phase(2);
    }
  }

  // Fixes each generator's sign into the measurement rows: measure it, and
  // on a mismatching outcome conjugate by the freshly assigned conjugate
  // row, which flips exactly that measurement row. Slots already holding a
  // fixed generator are excluded from pivot selection, so earlier
  // generators stay stored rows and the sign corrections cannot reach them;
  // independence guarantees an admissible slot always exists. Generators
  // must be Hermitian, pairwise commuting, and independent; each
  // generator's own sign is the requested sign.
  void prepare_by_measurement(std::span<const PauliOperator> generators) {
    for (const auto& g : generators) {
      if (g.num_qubits() != n_) {
        throw InvalidPreparationError("generator width mismatch");
      }
      if (!is_hermitian(g)) {
        throw InvalidPreparationError("generators must be Hermitian");
      }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (std::size_t j = i + 1; j < generators.size(); ++j) {
        if (!commutes(generators[i], generators[j])) {
          throw InvalidPreparationError("generators must commute");
        }
      }
    }
    check_independent(generators);
    BitVec fixed(n_);
    for (const auto& g : generators) {
      const MeasureInfo info = measure_impl(g, &fixed);
      if (info.slot == BitVec::npos) continue;  // unreachable: rank check
      if (info.outcome == 1) {
        conjugate_by(c_[info.slot]);
      }
      fixed.set(info.slot, true);
    }
  }

  bool check_symplectic() const {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!is_hermitian(m_[j]) || !is_hermitian(c_[j])) return false;
      for (std::size_t k = 0; k < n_; ++k) {
        if (symplectic_product(m_[j], m_[k]) & 1) return false;
        if (symplectic_product(c_[j], c_[k]) & 1) return false;
        const int want = (j == k) ? 1 : 0;
        if ((symplectic_product(m_[j], c_[k]) & 1) != want) return false;
      }
    }
    return true;
  }

  MemoryReport stats() const {
    MemoryReport r;
    r.n = n_;
    r.context_bits = std::uint64_t(2 * n_) * std::uint64_t(2 * n_ + 1);
    const std::uint64_t words = (n_ + 63) / 64;
    r.storage_bits = std::uint64_t(2 * n_) * (2 * words * 64 + 8);
    return r;
  }

  // "{M_1,...,M_n;C_1,...,C_n}" with conjugate rows always carrying a sign.
  std::string brace_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < n_; ++k) {
      if (k) out += ',';
      out += format_pauli(m_[k]);
    }
    out += ';';
    for (std::size_t k = 0; k < n_; ++k) {
      if (k) out += ',';
      out += format_pauli_signed(c_[k]);
    }
    out += '}';
    return out;
  }

 private:
  OnticState(std::vector<PauliOperator> m, std::vector<PauliOperator> c,
             std::shared_ptr<CoinSource> coins, bool validate)
      : n_(m.size()), m_(std::move(m)), c_(std::move(c)), coins_(std::move(coins)) {
    if (n_ == 0) throw DimensionError("qubit count must be at least 1");
    if (c_.size() != n_) {
      throw InvalidPreparationError("need as many conjugate rows as measurement rows");
    }
    for (const auto& e : m_) {
      if (e.num_qubits() != n_) throw DimensionError("basis element width mismatch");
    }
    for (const auto& e : c_) {
      if (e.num_qubits() != n_) throw DimensionError("basis element width mismatch");
    }
    if (!coins_) throw Error("coin source required");
    if (validate && !check_symplectic()) {
      throw InvalidPreparationError("rows do not form a symplectic basis");
    }
  }

  void check_qubit(std::size_t q) const {
    if (q >= n_) throw InvalidGateError("qubit index out of range");
  }
  void check_pair(std::size_t a, std::size_t b) const {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw InvalidGateError("two-qubit gate needs distinct qubits");
  }
  void check_observable(const PauliOperator& obs) const {
    if (obs.num_qubits() != n_) throw DimensionError("observable width mismatch");
    if (!is_hermitian(obs)) {
      throw InvalidObservableError("observable must be Hermitian");
    }
  }

  MeasureInfo measure_impl(const PauliOperator& obs, const BitVec* avoid) {
    Expansion e = expand(obs);
    trace("A");
    if (e.m.none() && e.c.none()) {
      return MeasureInfo{e.v, BitVec::npos};
    }
    std::size_t k;
    if (e.c.any()) {
      k = select_pivot(e.c, obs, avoid);
      for (std::size_t j = 0; j < n_; ++j) {
        if (j != k && e.c.get(j)) m_[j].compose_in_place(m_[k]);
      }
      c_[k] = m_[k];
    } else {
      k = select_pivot(e.m, obs, avoid);
    }
    m_[k] = obs;
    m_[k].add_phase(2 * e.v);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != k && e.m.get(j)) c_[j].compose_in_place(c_[k]);
    }
    trace("B");
    c_[k].set_sign(coins_->toss());
    trace("C");
    return MeasureInfo{e.v, k};
  }

  // Pivot among candidate slots, skipping any in `avoid`. Slots aligned
  // with the observable's support are preferred, so single-qubit
  // measurements land in the matching slot; otherwise the lowest
  // admissible candidate wins.
  std::size_t select_pivot(const BitVec& candidates, const PauliOperator& obs,
                           const BitVec* avoid) const {
    const std::uint64_t* cw = candidates.words();
    const std::uint64_t* xw = obs.x_bits().words();
    const std::uint64_t* zw = obs.z_bits().words();
    const std::uint64_t* aw = avoid ? avoid->words() : nullptr;
    std::size_t fallback = BitVec::npos;
    for (std::size_t i = 0; i < candidates.word_count(); ++i) {
      const std::uint64_t admissible = aw ? (cw[i] & ~aw[i]) : cw[i];
      if (!admissible) continue;
      const std::uint64_t preferred = admissible & (xw[i] | zw[i]);
      if (preferred) return i * 64 + std::size_t(std::countr_zero(preferred));
      if (fallback == BitVec::npos) {
        fallback = i * 64 + std::size_t(std::countr_zero(admissible));
      }
    }
    if (fallback == BitVec::npos) {
      throw Error("no admissible pivot slot");
    }
    return fallback;
  }

  void trace(const char* stage) const {
    if (hook_) hook_(stage, brace_string());
  }

  // Gaussian elimination over GF(2) on the (x|z) rows.
  static void check_independent(std::span<const PauliOperator> generators) {
    if (generators.empty()) return;
    const std::size_t n = generators[0].num_qubits();
    std::vector<BitVec> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
      BitVec row(2 * n);
      for (std::size_t q = 0; q < n; ++q) {
        if (g.x_bit(q)) row.set(q, true);
        if (g.z_bit(q)) row.set(n + q, true);
      }
      rows.push_back(std::move(row));
    }
    std::vector<std::pair<std::size_t, BitVec>> pivots;
    for (auto& row : rows) {
      for (const auto& [bit, pivot] : pivots) {
        if (row.get(bit)) row ^= pivot;
      }
      const std::size_t lead = row.find_first();
      if (lead == BitVec::npos) {
        throw InvalidPreparationError("generators must be independent");
      }
      pivots.emplace_back(lead, row);
    }
  }

  std::size_t n_ = 0;
  std::vector<PauliOperator> m_;
  std::vector<PauliOperator> c_;
  std::shared_ptr<CoinSource> coins_;
  TraceHook hook_;
};

inline OnticState prepare_canonical(std::size_t n, std::shared_ptr<CoinSource> coins) {
  return OnticState::canonical(n, std::move(coins));
}

}  // namespace qontic
