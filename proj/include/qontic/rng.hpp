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

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qontic {

// Source of fair coin tosses. Implementations must be deterministic given
// their construction arguments so whole runs replay bit for bit.
class CoinSource {
 public:
  virtual ~CoinSource() = default;

  // Returns 0 or 1.
  virtual int toss() = 0;

  // Uniform double in [0,1) with 32-bit resolution, assembled from tosses.
  virtual double uniform() {
    std::uint64_t bits = 0;
    for (int i = 0; i < 32; ++i) bits = (bits << 1) | std::uint64_t(toss());
    return double(bits) / 4294967296.0;
  }
};

// mt19937_64-backed stream; the standard fixes the sequence, so runs are
// reproducible across platforms.
class SeededCoins final : public CoinSource {
 public:
  explicit SeededCoins(std::uint64_t seed) : gen_(seed) {}
  int toss() override { return int(gen_() & 1u); }
  double uniform() override { return double(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

// Fixed coin script; throws once the script runs dry.
class ScriptedCoins final : public CoinSource {
 public:
  explicit ScriptedCoins(std::vector<int> coins) : coins_(std::move(coins)) {}

  int toss() override {
    if (next_ >= coins_.size()) throw std::out_of_range("coin script exhausted");
    return coins_[next_++];
  }

  std::size_t consumed() const { return next_; }

 private:
  std::vector<int> coins_;
  std::size_t next_ = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stream seed for one shot of a many-shot run.
inline std::uint64_t derive_shot_seed(std::uint64_t seed, std::uint64_t shot) {
  return splitmix64(seed ^ splitmix64(shot));
}

inline std::shared_ptr<CoinSource> make_seeded_coins(std::uint64_t seed) {
  return std::make_shared<SeededCoins>(seed);
}

inline std::shared_ptr<CoinSource> make_scripted_coins(std::vector<int> coins) {
  return std::make_shared<ScriptedCoins>(std::move(coins));
}

}  // namespace qontic
