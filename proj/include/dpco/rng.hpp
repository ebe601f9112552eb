// Copyright 2026 The dpco Authors.
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
#include <vector>

namespace dpco {

/// Counter-based splittable random stream. A draw sequence is a pure
/// function of (seed, stream, counter), so identical (seed, stream)
/// reproduce identical outputs and child streams can be derived for
/// parallel trials without sharing state.
class RngStream {
 public:
  RngStream() = default;
  RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Derives an independent stream; deterministic in (this, index).
  RngStream child(std::uint64_t index) const {
    return RngStream(seed_, mix(stream_ ^ mix(index + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t next_u64() {
    std::uint64_t x = seed_ + 0x9E3779B97F4A7C15ULL * ++counter_;
    x ^= mix(stream_ + 0xBF58476D1CE4E5B9ULL);
    return mix(x);
  }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n); n must be positive. Rejection sampling,
  /// so the result is exactly uniform.
  std::uint64_t next_index(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_index(i));
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace dpco
