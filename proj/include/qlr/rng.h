// Copyright 2026 The qlr Authors
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

#ifndef QLR_RNG_H_
#define QLR_RNG_H_

#include <cstdint>
#include <random>

namespace qlr {

/// Seedable generator whose output is identical on every platform.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are implementation-defined, so the
/// floating-point and bounded-integer draws are done here instead:
///   uniform()  = (next() >> 11) * 2^-53, in [0, 1)
///   below(n)   = rejection sampling on the top of the 64-bit range
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    /// Independent stream for `index`, derived from `seed` with SplitMix64.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() {
        return engine_();
    }
    double uniform();
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }
    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

   private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed drawn from std::random_device, for callers that were not given one.
std::uint64_t entropy_seed();

}  // namespace qlr

#endif  // QLR_RNG_H_
