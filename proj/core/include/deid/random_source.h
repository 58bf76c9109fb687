// Copyright 2026 The dpdeid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEID_RANDOM_SOURCE_H_
#define DEID_RANDOM_SOURCE_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace deid {

// Deterministic, portable randomness. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; uniforms are built from raw bits
// rather than std::uniform_real_distribution so that streams are identical
// across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (master seed, stream id), e.g. a document id.
  static RandomSource ForStream(std::uint64_t master_seed,
                                std::string_view stream_id);

  // Non-reproducible source seeded from std::random_device.
  static RandomSource FromEntropy();

  std::uint64_t NextBits() { return engine_(); }

  // Uniform on the open interval (0, 1): (k + 0.5) / 2^53 for a 53-bit k.
  double NextOpenUniform();

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t NextIndex(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Stream seed derivation: SplitMix64(master_seed ^ FNV-1a-64(stream_id)).
std::uint64_t DeriveStreamSeed(std::uint64_t master_seed,
                               std::string_view stream_id);

}  // namespace deid

#endif  // DEID_RANDOM_SOURCE_H_
