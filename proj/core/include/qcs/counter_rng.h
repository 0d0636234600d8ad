// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCS_COUNTER_RNG_H
#define QCS_COUNTER_RNG_H

#include <cstdint>

namespace qcs {

/// Stateless keyed generator: the draw for (counter, stream) depends only on
/// the seed and those two integers, so any partition of the counter range
/// across workers reproduces the same sequence. The mixer is the SplitMix64
/// finalizer applied to a keyed counter.
class CounterRng {
   public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {
    }

    std::uint64_t bits(std::uint64_t counter, std::uint64_t stream = 0) const {
        std::uint64_t x = key_ + counter * 0x9e3779b97f4a7c15ULL;
        x = mix(x ^ mix(stream + 0xbb67ae8584caa73bULL));
        return mix(x);
    }

    /// Uniform on the open interval ]0,1[ with 53-bit resolution.
    double uniform_open(std::uint64_t counter, std::uint64_t stream = 0) const {
        return (static_cast<double>(bits(counter, stream) >> 11) + 0.5) * 0x1.0p-53;
    }

   private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

}  // namespace qcs

#endif
