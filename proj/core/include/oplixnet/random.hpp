// Copyright 2026 The OplixNet Authors
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
#include <random>
#include <vector>

namespace oplixnet {

/// Seeded generator whose derived draws are fully specified here (the
/// standard library distributions are implementation-defined), so a seed
/// means the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n), rejection-sampled.
  std::uint64_t below(std::uint64_t n);
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Fisher-Yates permutation of 0..n-1; a pure function of (seed, n).
std::vector<std::size_t> permutation(std::uint64_t seed, std::size_t n);

/// Derives an independent sub-seed, e.g. per epoch or per model.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace oplixnet
