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
#include <string>
#include <string_view>

#include "qontic/bitvec.hpp"
#include "qontic/errors.hpp"

namespace qontic {

// Signed n-qubit Pauli element in binary symplectic coordinates plus a power
// of i. The stored form is
//
//   P = i^phase * prod_k i^{x_k z_k} X^{x_k} Z^{z_k},
//
// which makes each site factor one of I, X, Z, Y and ties Hermiticity to the
// phase being even. Products are tracked exactly mod 4, so non-Hermitian
// intermediates keep their +-i factors.
class PauliOperator {
 public:
  explicit PauliOperator(std::size_t n) : x_(checked(n)), z_(n) {}

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }

  static PauliOperator from_parts(BitVec x, BitVec z, int phase) {
    if (x.size() != z.size()) throw DimensionError("x and z lengths differ");
    PauliOperator p(x.size());
    p.x_ = std::move(x);
    p.z_ = std::move(z);
    p.set_phase(phase);
    return p;
  }

  // Single-site element; axis is one of 'I', 'X', 'Y', 'Z'.
  static PauliOperator single(std::size_t n, std::size_t qubit, char axis,
                              bool negative = false) {
    PauliOperator p(n);
    if (qubit >= n) throw DimensionError("qubit index out of range");
    switch (axis) {
      case 'I':
        break;
      case 'X':
        p.x_.set(qubit, true);
        break;
      case 'Z':
        p.z_.set(qubit, true);
        break;
      case 'Y':
        p.x_.set(qubit, true);
        p.z_.set(qubit, true);
        break;
      default:
        throw Error("unknown Pauli axis");
    }
    if (negative) p.phase_ = 2;
    return p;
  }

  std::size_t num_qubits() const { return x_.size(); }

  int phase() const { return phase_; }
  void set_phase(int k) { phase_ = mod4(k); }
  void add_phase(int k) { phase_ = mod4(phase_ + k); }
  // Force the sign to (-1)^bit; only meaningful for Hermitian elements.
  void set_sign(int bit) { phase_ = bit ? 2 : 0; }

  bool x_bit(std::size_t q) const { return x_.get(q); }
  bool z_bit(std::size_t q) const { return z_.get(q); }
  void set_x(std::size_t q, bool v) { x_.set(q, v); }
  void set_z(std::size_t q, bool v) { z_.set(q, v); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }

  // this <- this * rhs with the exact phase. Site factors multiply as
  //   (i^{xz} X^x Z^z)(i^{x'z'} X^{x'} Z^{z'})
  //     = i^{xz + x'z' + 2x'z - x''z''} * (i^{x''z''} X^{x''} Z^{z''}),
  // so the phase correction is |x&z| + |x'&z'| + 2|x'&z| - |x''&z''| mod 4,
  // accumulated with word-parallel popcounts.
  void compose_in_place(const PauliOperator& rhs) {
    if (rhs.num_qubits() != num_qubits()) {
      throw DimensionError("composing Pauli elements of different width");
    }
    const int before = int(popcount_and(x_, z_)) + int(popcount_and(rhs.x_, rhs.z_));
    const int swaps = int(popcount_and(rhs.x_, z_));
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    const int after = int(popcount_and(x_, z_));
    phase_ = mod4(phase_ + rhs.phase_ + before + 2 * swaps - after);
  }

  // Heisenberg updates U P U^dag for the Clifford generators, in place.
  void conj_h(std::size_t q) {
    const bool xb = x_.get(q), zb = z_.get(q);
    if (xb && zb) add_phase(2);  // HYH = -Y
    x_.set(q, zb);
    z_.set(q, xb);
  }

  void conj_s(std::size_t q) {
    const bool xb = x_.get(q), zb = z_.get(q);
    if (xb && zb) add_phase(2);
    z_.set(q, xb != zb);
  }

  void conj_cnot(std::size_t control, std::size_t target) {
    const bool xc = x_.get(control), zc = z_.get(control);
    const bool xt = x_.get(target), zt = z_.get(target);
    if (xc && zt && (xt == zc)) add_phase(2);
    x_.set(target, xt != xc);
    z_.set(control, zc != zt);
  }

  void conj_cz(std::size_t a, std::size_t b) {
    const bool xa = x_.get(a), za = z_.get(a);
    const bool xb = x_.get(b), zb = z_.get(b);
    if (xa && xb && (za != zb)) add_phase(2);
    z_.set(a, za != xb);
    z_.set(b, zb != xa);
  }

  void conj_x(std::size_t q) {
    if (z_.get(q)) add_phase(2);
  }
  void conj_y(std::size_t q) {
    if (x_.get(q) != z_.get(q)) add_phase(2);
  }
  void conj_z(std::size_t q) {
    if (x_.get(q)) add_phase(2);
  }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  static std::size_t checked(std::size_t n) {
    if (n == 0) throw DimensionError("qubit count must be at least 1");
    return n;
  }
  static int mod4(int v) { return ((v % 4) + 4) % 4; }

  BitVec x_, z_;
  int phase_ = 0;
};

// sum_k (x_k z'_k - x'_k z_k) over the integers; the parity decides
// commutation, the full value feeds phase arithmetic.
inline int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("symplectic product of different widths");
  }
  return int(popcount_and(p.x_bits(), q.z_bits())) -
         int(popcount_and(q.x_bits(), p.z_bits()));
}

inline bool commutes(const PauliOperator& p, const PauliOperator& q) {
  return (symplectic_product(p, q) & 1) == 0;
}

inline PauliOperator compose(PauliOperator p, const PauliOperator& q) {
  p.compose_in_place(q);
  return p;
}

inline PauliOperator negate(PauliOperator p) {
  p.add_phase(2);
  return p;
}

inline PauliOperator multiply_i(PauliOperator p) {
  p.add_phase(1);
  return p;
}

inline bool is_hermitian(const PauliOperator& p) { return (p.phase() & 1) == 0; }

inline bool is_identity_support(const PauliOperator& p) {
  return p.x_bits().none() && p.z_bits().none();
}

// Text form: optional sign, then one of I/X/Y/Z per qubit, qubit 0 leftmost.
// Imaginary prefixes are rejected: observables must be Hermitian.
inline PauliOperator parse_pauli(std::string_view text, std::size_t n) {
  if (n == 0) throw DimensionError("qubit count must be at least 1");
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    throw ParseError("imaginary phase prefix; observables must be Hermitian", 0, pos);
  }
  if (text.size() - pos != n) {
    throw ParseError("expected " + std::to_string(n) + " Pauli characters, got " +
                         std::to_string(text.size() - pos),
                     0, pos);
  }
  PauliOperator p(n);
  for (std::size_t k = 0; k < n; ++k) {
    switch (text[pos + k]) {
      case 'I':
        break;
      case 'X':
        p.set_x(k, true);
        break;
      case 'Z':
        p.set_z(k, true);
        break;
      case 'Y':
        p.set_x(k, true);
        p.set_z(k, true);
        break;
      default:
        throw ParseError(std::string("bad Pauli character '") + text[pos + k] + "'",
                         0, pos + k);
    }
  }
  p.set_phase(phase);
  return p;
}

// Normalized form: sign only when negative, "i"/"-i" for odd phases.
inline std::string format_pauli(const PauliOperator& p) {
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[p.phase()];
  out.reserve(out.size() + p.num_qubits());
  for (std::size_t k = 0; k < p.num_qubits(); ++k) {
    out += "IXZY"[std::size_t(p.x_bit(k)) + 2 * std::size_t(p.z_bit(k))];
  }
  return out;
}

// Like format_pauli but with an explicit '+' on positive elements.
inline std::string format_pauli_signed(const PauliOperator& p) {
  std::string out = format_pauli(p);
  if (p.phase() == 0 || p.phase() == 1) out.insert(out.begin(), '+');
  return out;
}

}  // namespace qontic
