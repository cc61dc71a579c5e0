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

// Brute-force dense matrix arithmetic used as an independent check on the
// bit-packed composition path. Test-only; nothing here touches the packed
// phase bookkeeping it verifies.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qontic/pauli.hpp"

namespace qontic::testing {

using Cx = std::complex<double>;
using Matrix = std::vector<Cx>;  // row-major, dim x dim

inline Matrix dense_site(bool x, bool z) {
  if (!x && !z) return {1, 0, 0, 1};             // I
  if (x && !z) return {0, 1, 1, 0};              // X
  if (!x && z) return {1, 0, 0, -1};             // Z
  return {0, Cx(0, -1), Cx(0, 1), 0};            // Y
}

inline Matrix kron(const Matrix& a, std::size_t da, const Matrix& b, std::size_t db) {
  Matrix out(da * db * da * db);
  const std::size_t d = da * db;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out[(i * db + k) * d + (j * db + l)] = a[i * da + j] * b[k * db + l];
  return out;
}

inline Matrix to_matrix(const PauliOperator& p) {
  static const Cx kPhase[4] = {1, Cx(0, 1), -1, Cx(0, -1)};
  Matrix m = {kPhase[p.phase()]};
  std::size_t dim = 1;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    m = kron(m, dim, dense_site(p.x_bit(q), p.z_bit(q)), 2);
    dim *= 2;
  }
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix out(dim * dim, Cx(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const Cx aik = a[i * dim + k];
      if (aik == Cx(0)) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] += aik * b[k * dim + j];
    }
  return out;
}

inline bool mat_close(const Matrix& a, const Matrix& b, double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace qontic::testing
