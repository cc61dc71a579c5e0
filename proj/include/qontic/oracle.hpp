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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "qontic/circuit.hpp"
#include "qontic/errors.hpp"
#include "qontic/pauli.hpp"
#include "qontic/rng.hpp"

namespace qontic {

// Dense state-vector reference backend: the brute-force ground truth for
// differential tests at small n. Amplitude index bit (n-1-q) holds qubit q,
// so qubit 0 is the most significant bit, matching Pauli string order.
// Not built for speed; the width cap keeps accidental big-n uses loud.
class QuantumState {
 public:
  static constexpr std::size_t kDefaultMaxQubits = 12;
  using Amp = std::complex<double>;

  explicit QuantumState(std::size_t n, std::shared_ptr<CoinSource> coins,
                        std::size_t max_qubits = kDefaultMaxQubits)
      : n_(n), coins_(std::move(coins)) {
    if (n == 0) throw DimensionError("qubit count must be at least 1");
    if (n > max_qubits) {
      throw DimensionError("state vector capped at " + std::to_string(max_qubits) +
                           " qubits, got " + std::to_string(n));
    }
    if (!coins_) throw Error("coin source required");
    amps_.assign(std::size_t{1} << n, Amp(0));
    amps_[0] = Amp(1);
  }

  // State stabilized by the given signed generators, built by projection
  // from a deterministic pseudo-random start vector.
  static QuantumState from_stabilizers(std::span<const PauliOperator> generators,
                                       std::shared_ptr<CoinSource> coins,
                                       std::size_t max_qubits = kDefaultMaxQubits) {
    if (generators.empty()) throw InvalidPreparationError("no generators given");
    const std::size_t n = generators[0].num_qubits();
    QuantumState state(n, std::move(coins), max_qubits);
    std::mt19937_64 gen(0x9d2c5680u);
    for (int attempt = 0; attempt < 8; ++attempt) {
      for (auto& a : state.amps_) {
        a = Amp(std::ldexp(double(gen() >> 11), -53) - 0.5,
                std::ldexp(double(gen() >> 11), -53) - 0.5);
      }
      for (const auto& g : generators) {
        if (g.num_qubits() != n) throw DimensionError("generator width mismatch");
        if (!is_hermitian(g)) {
          throw InvalidPreparationError("generators must be Hermitian");
        }
        std::vector<Amp> pg(state.amps_.size());
        state.apply_pauli_into(g, pg);
        for (std::size_t b = 0; b < state.amps_.size(); ++b) {
          state.amps_[b] = 0.5 * (state.amps_[b] + pg[b]);
        }
      }
      const double nrm = state.norm();
      if (nrm > 1e-6) {
        for (auto& a : state.amps_) a /= nrm;
        return state;
      }
    }
    throw InvalidPreparationError("projection annihilated the start vector");
  }

  std::size_t num_qubits() const { return n_; }
  const std::vector<Amp>& amplitudes() const { return amps_; }

  double norm() const {
    double total = 0;
    for (const auto& a : amps_) total += std::norm(a);
    return std::sqrt(total);
  }

  void apply_h(std::size_t q) {
    const std::uint64_t mask = bit_mask(q);
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      if (b & mask) continue;
      const Amp a0 = amps_[b];
      const Amp a1 = amps_[b | mask];
      amps_[b] = inv_sqrt2 * (a0 + a1);
      amps_[b | mask] = inv_sqrt2 * (a0 - a1);
    }
  }

  void apply_s(std::size_t q) {
    const std::uint64_t mask = bit_mask(q);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      if (b & mask) amps_[b] *= Amp(0, 1);
    }
  }

  void apply_x(std::size_t q) {
    const std::uint64_t mask = bit_mask(q);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      if (!(b & mask)) std::swap(amps_[b], amps_[b | mask]);
    }
  }

  void apply_y(std::size_t q) {
    const std::uint64_t mask = bit_mask(q);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      if (!(b & mask)) {
        const Amp a0 = amps_[b];
        const Amp a1 = amps_[b | mask];
        amps_[b] = Amp(0, -1) * a1;
        amps_[b | mask] = Amp(0, 1) * a0;
      }
    }
  }

  void apply_z(std::size_t q) {
    const std::uint64_t mask = bit_mask(q);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      if (b & mask) amps_[b] = -amps_[b];
    }
  }

  void apply_cnot(std::size_t control, std::size_t target) {
    check_pair(control, target);
    const std::uint64_t cm = bit_mask(control);
    const std::uint64_t tm = bit_mask(target);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      if ((b & cm) && !(b & tm)) std::swap(amps_[b], amps_[b | tm]);
    }
  }

  void apply_cz(std::size_t a, std::size_t b) {
    check_pair(a, b);
    const std::uint64_t am = bit_mask(a);
    const std::uint64_t bm = bit_mask(b);
    for (std::uint64_t idx = 0; idx < amps_.size(); ++idx) {
      if ((idx & am) && (idx & bm)) amps_[idx] = -amps_[idx];
    }
  }

  // psi <- P psi (a Pauli is unitary).
  void apply_pauli(const PauliOperator& p) {
    std::vector<Amp> out(amps_.size());
    apply_pauli_into(p, out);
    amps_ = std::move(out);
  }

  // <psi|P|psi>; real by Hermiticity, and in {-1, 0, +1} on stabilizer states.
  double expectation(const PauliOperator& p) const {
    check_observable(p);
    const std::uint64_t xm = index_mask(p.x_bits());
    const std::uint64_t zm = index_mask(p.z_bits());
    const Amp global = phase_factor(p);
    Amp total(0);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      const std::uint64_t src = b ^ xm;
      const double sign = (std::popcount(src & zm) & 1) ? -1.0 : 1.0;
      total += std::conj(amps_[b]) * global * sign * amps_[src];
    }
    return total.real();
  }

  // Born-rule draw: bit 0 with probability (1 + <P>)/2, then projection and
  // renormalization.
  int measure(const PauliOperator& p) {
    const double e = expectation(p);
    int bit;
    if (e > 1.0 - 1e-9) {
      bit = 0;
    } else if (e < -1.0 + 1e-9) {
      bit = 1;
    } else {
      const double p0 = 0.5 * (1.0 + e);
      bit = coins_->uniform() < p0 ? 0 : 1;
    }
    collapse(p, bit);
    return bit;
  }

  // Projects onto the (-1)^bit eigenspace of p and renormalizes.
  void collapse(const PauliOperator& p, int bit) {
    check_observable(p);
    std::vector<Amp> pg(amps_.size());
    apply_pauli_into(p, pg);
    const double sign = bit ? -1.0 : 1.0;
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      amps_[b] = 0.5 * (amps_[b] + sign * pg[b]);
    }
    const double nrm = norm();
    if (nrm < 1e-9) throw Error("projection onto a zero-probability outcome");
    for (auto& a : amps_) a /= nrm;
  }

 private:
  std::uint64_t bit_mask(std::size_t q) const {
    if (q >= n_) throw InvalidGateError("qubit index out of range");
    return std::uint64_t{1} << (n_ - 1 - q);
  }
  void check_pair(std::size_t a, std::size_t b) const {
    if (a == b) throw InvalidGateError("two-qubit gate needs distinct qubits");
  }
  void check_observable(const PauliOperator& p) const {
    if (p.num_qubits() != n_) throw DimensionError("observable width mismatch");
    if (!is_hermitian(p)) throw InvalidObservableError("observable must be Hermitian");
  }

  std::uint64_t index_mask(const BitVec& bits) const {
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < n_; ++q) {
      if (bits.get(q)) mask |= std::uint64_t{1} << (n_ - 1 - q);
    }
    return mask;
  }

  static Amp i_power(int k) {
    static constexpr Amp kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[((k % 4) + 4) % 4];
  }

  Amp phase_factor(const PauliOperator& p) const {
    return i_power(p.phase() + int(popcount_and(p.x_bits(), p.z_bits())));
  }

  // out[b] = (P psi)[b]; P|b> = phase * (-1)^{|b & z|} |b ^ x>.
  void apply_pauli_into(const PauliOperator& p, std::vector<Amp>& out) const {
    if (p.num_qubits() != n_) throw DimensionError("width mismatch");
    const std::uint64_t xm = index_mask(p.x_bits());
    const std::uint64_t zm = index_mask(p.z_bits());
    const Amp global = phase_factor(p);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      const std::uint64_t src = b ^ xm;
      const double sign = (std::popcount(src & zm) & 1) ? -1.0 : 1.0;
      out[b] = global * sign * amps_[src];
    }
  }

  std::size_t n_ = 0;
  std::vector<Amp> amps_;
  std::shared_ptr<CoinSource> coins_;
};

inline void oracle_apply(QuantumState& state, const Instruction& ins) {
  switch (ins.kind) {
    case GateKind::H: state.apply_h(ins.qubits[0]); break;
    case GateKind::S: state.apply_s(ins.qubits[0]); break;
    case GateKind::X: state.apply_x(ins.qubits[0]); break;
    case GateKind::Y: state.apply_y(ins.qubits[0]); break;
    case GateKind::Z: state.apply_z(ins.qubits[0]); break;
    case GateKind::Cnot: state.apply_cnot(ins.qubits[0], ins.qubits[1]); break;
    case GateKind::Cz: state.apply_cz(ins.qubits[0], ins.qubits[1]); break;
    case GateKind::Measure: throw Error("oracle_apply handles gates only");
  }
}

inline double pauli_expectation(const QuantumState& state, const PauliOperator& p) {
  return state.expectation(p);
}

inline int oracle_measure(QuantumState& state, const PauliOperator& p) {
  return state.measure(p);
}

}  // namespace qontic
