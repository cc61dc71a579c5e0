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

#include "qontic/pauli.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "dense_pauli.hpp"

using namespace qontic;
using qontic::testing::mat_close;
using qontic::testing::mat_mul;
using qontic::testing::to_matrix;

namespace {

PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n, bool random_phase) {
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.set_x(q, rng() & 1);
    p.set_z(q, rng() & 1);
  }
  if (random_phase) p.set_phase(int(rng() % 4));
  return p;
}

// All 4^n phase-0 elements of width n, enumerated by interleaved x/z bits.
PauliOperator nth_pauli(std::size_t n, std::size_t code) {
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.set_x(q, (code >> (2 * q)) & 1);
    p.set_z(q, (code >> (2 * q + 1)) & 1);
  }
  return p;
}

}  // namespace

TEST_CASE("parse and format", "[pauli]") {
  auto p = parse_pauli("-XYI", 3);
  CHECK(p.x_bit(0));
  CHECK(p.x_bit(1));
  CHECK_FALSE(p.x_bit(2));
  CHECK_FALSE(p.z_bit(0));
  CHECK(p.z_bit(1));
  CHECK_FALSE(p.z_bit(2));
  CHECK(p.phase() == 2);
  CHECK(format_pauli(p) == "-XYI");

  auto zz = parse_pauli("ZZ", 2);
  CHECK_FALSE(zz.x_bits().any());
  CHECK(zz.z_bit(0));
  CHECK(zz.z_bit(1));
  CHECK(zz.phase() == 0);
  CHECK(format_pauli(zz) == "ZZ");
  CHECK(format_pauli_signed(zz) == "+ZZ");

  CHECK(format_pauli(parse_pauli("+ZZ", 2)) == "ZZ");

  SECTION("bad character reports its index") {
    try {
      parse_pauli("XW", 2);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.column() == 1);
    }
  }
  SECTION("length and phase-prefix errors") {
    CHECK_THROWS_AS(parse_pauli("XYZ", 2), ParseError);
    CHECK_THROWS_AS(parse_pauli("X", 2), ParseError);
    CHECK_THROWS_AS(parse_pauli("iXY", 2), ParseError);
    CHECK_THROWS_AS(parse_pauli("-iXY", 2), ParseError);
  }
}

TEST_CASE("parse format round trip on random strings", "[pauli]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    auto p = random_pauli(rng, n, false);
    if (rng() & 1) p.set_phase(2);
    const std::string s = format_pauli(p);
    CHECK(format_pauli(parse_pauli(s, n)) == s);
  }
}

TEST_CASE("symplectic product", "[pauli]") {
  auto x = parse_pauli("X", 1);
  auto z = parse_pauli("Z", 1);
  CHECK(symplectic_product(x, z) == 1);
  CHECK_FALSE(commutes(x, z));

  auto zi = parse_pauli("ZI", 2);
  auto iz = parse_pauli("IZ", 2);
  CHECK(symplectic_product(zi, iz) == 0);
  CHECK(commutes(zi, iz));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_pauli(rng, 1 + rng() % 8, true);
    CHECK(symplectic_product(p, p) == 0);
  }

  CHECK_THROWS_AS(symplectic_product(x, zi), DimensionError);
}

TEST_CASE("compose matches known products", "[pauli]") {
  auto x = parse_pauli("X", 1);
  auto y = parse_pauli("Y", 1);
  auto z = parse_pauli("Z", 1);

  // Z*X = iY
  auto zx = compose(z, x);
  CHECK(format_pauli(zx) == "iY");
  CHECK(zx.phase() == 1);
  // X*Z = -iY
  CHECK(format_pauli(compose(x, z)) == "-iY");
  // X*Y = iZ, Y*X = -iZ
  CHECK(format_pauli(compose(x, y)) == "iZ");
  CHECK(format_pauli(compose(y, x)) == "-iZ");

  auto zi = parse_pauli("ZI", 2);
  auto iz = parse_pauli("IZ", 2);
  CHECK(format_pauli(compose(zi, iz)) == "ZZ");

  CHECK(compose(zi, PauliOperator::identity(2)) == zi);

  CHECK(format_pauli(compose(parse_pauli("XX", 2), parse_pauli("YY", 2))) == "-ZZ");
  CHECK(format_pauli(compose(parse_pauli("ZZ", 2), parse_pauli("XX", 2))) == "-YY");
  CHECK(format_pauli(compose(parse_pauli("XXI", 3), parse_pauli("YYY", 3))) == "-ZZY");
}

TEST_CASE("compose matches dense matrix product exhaustively", "[pauli][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t{1} << (2 * n);
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        auto p = nth_pauli(n, a);
        auto q = nth_pauli(n, b);
        auto prod = compose(p, q);
        REQUIRE(mat_close(to_matrix(prod), mat_mul(to_matrix(p), to_matrix(q), dim)));
      }
    }
  }
}

TEST_CASE("compose matches dense matrix product on random pairs", "[pauli][oracle]") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t dim = std::size_t{1} << n;
    auto p = random_pauli(rng, n, true);
    auto q = random_pauli(rng, n, true);
    auto prod = compose(p, q);
    REQUIRE(mat_close(to_matrix(prod), mat_mul(to_matrix(p), to_matrix(q), dim)));
  }
}

TEST_CASE("compose is associative", "[pauli]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 70;  // crosses the word boundary
    auto a = random_pauli(rng, n, true);
    auto b = random_pauli(rng, n, true);
    auto c = random_pauli(rng, n, true);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("compose order changes phase by commutator sign only", "[pauli]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    auto p = random_pauli(rng, n, true);
    auto q = random_pauli(rng, n, true);
    auto pq = compose(p, q);
    auto qp = compose(q, p);
    CHECK(pq.x_bits() == qp.x_bits());
    CHECK(pq.z_bits() == qp.z_bits());
    const int delta = commutes(p, q) ? 0 : 2;
    CHECK(((pq.phase() - qp.phase()) % 4 + 4) % 4 == delta);
  }
}

TEST_CASE("hermitian product is hermitian iff the factors commute", "[pauli]") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto p = random_pauli(rng, n, false);
    auto q = random_pauli(rng, n, false);
    if (rng() & 1) p.set_phase(2);
    if (rng() & 1) q.set_phase(2);
    CHECK(is_hermitian(compose(p, q)) == commutes(p, q));
  }
}

TEST_CASE("phase utilities", "[pauli]") {
  auto zz = parse_pauli("ZZ", 2);
  CHECK(negate(zz).phase() == 2);
  CHECK(multiply_i(zz).phase() == 1);
  CHECK(is_hermitian(zz));
  CHECK_FALSE(is_hermitian(multiply_i(zz)));

  auto mid = negate(PauliOperator::identity(2));
  CHECK(is_identity_support(mid));
  CHECK_FALSE(is_identity_support(zz));

  // i * (XZ as a product) has odd phase and is not Hermitian.
  auto xz = compose(parse_pauli("X", 1), parse_pauli("Z", 1));
  CHECK(xz.phase() == 3);
  CHECK_FALSE(is_hermitian(xz));
  CHECK_FALSE(is_hermitian(multiply_i(parse_pauli("Y", 1))));
}

TEST_CASE("wide operators exercise several words", "[pauli]") {
  const std::size_t n = 150;
  auto a = PauliOperator::single(n, 137, 'Y');
  auto b = PauliOperator::single(n, 137, 'Y');
  auto prod = compose(a, b);
  CHECK(is_identity_support(prod));
  CHECK(prod.phase() == 0);

  auto c = PauliOperator::single(n, 70, 'Z');
  auto d = PauliOperator::single(n, 70, 'X');
  CHECK(compose(c, d).phase() == 1);  // Z*X = iY at site 70
  CHECK(symplectic_product(c, d) == -1);
}
