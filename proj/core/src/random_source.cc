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

#include "deid/random_source.h"

namespace deid {
namespace {

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t DeriveStreamSeed(std::uint64_t master_seed,
                               std::string_view stream_id) {
  return SplitMix64(master_seed ^ Fnv1a64(stream_id));
}

RandomSource RandomSource::ForStream(std::uint64_t master_seed,
                                     std::string_view stream_id) {
  return RandomSource(DeriveStreamSeed(master_seed, stream_id));
}

RandomSource RandomSource::FromEntropy() {
  std::random_device device;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(device()) << 32) | device();
  return RandomSource(seed);
}

double RandomSource::NextOpenUniform() {
  const std::uint64_t k = engine_() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

std::uint64_t RandomSource::NextIndex(std::uint64_t n) {
  const auto index =
      static_cast<std::uint64_t>(NextOpenUniform() * static_cast<double>(n));
  return index < n ? index : n - 1;
}

}  // namespace deid
