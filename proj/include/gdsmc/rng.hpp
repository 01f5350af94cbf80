// Copyright 2026 The gdsmc Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

/// @file
/// Counter-based pseudo-random generator.
///
/// Output i of stream (seed, stream) is mix64(key + i*WEYL) where mix64 is the
/// SplitMix64 finalizer. There is no hidden state beyond the counter, so a
/// stream can be split per particle and advanced independently of any thread
/// schedule: the draw sequence of particle p depends only on (seed, p) and on
/// how many draws p itself has consumed.

#include <cmath>
#include <cstdint>

namespace gdsmc {

/// SplitMix64 finalizer (Stafford mix 13).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

class Counter_rng {
  public:
    Counter_rng() = default;

    /// Stream `stream` of the generator family seeded with `seed`.
    Counter_rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix64(mix64(seed) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

    std::uint64_t next_u64() { return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a logarithm argument.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Exponential waiting time with the given rate (> 0).
    double exponential(double rate) { return -std::log(uniform_open()) / rate; }

    /// Unbiased integer in [0, n). One draw in the overwhelmingly common case.
    std::uint64_t uniform_below(std::uint64_t n) {
        // Lemire's multiply-shift with rejection of the biased fringe.
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::uint64_t counter() const { return counter_; }
    void set_counter(std::uint64_t c) { counter_ = c; }

  private:
    std::uint64_t key_ = mix64(0);
    std::uint64_t counter_ = 0;
};

} // namespace gdsmc
