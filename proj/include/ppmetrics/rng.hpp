/*
 * Copyright 2026 The ppmetrics Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace ppm {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output block
// i is a pure function of (key, counter = i), so any position in any stream
// can be reached without generating the values before it.
class Philox4x32 {
 public:
    using result_type = std::uint32_t;
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    Philox4x32(Key key, std::uint64_t stream) : key_(key), stream_(stream) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (pos_ == 4) {
            block_ = generate(key_, {std::uint32_t(counter_), std::uint32_t(counter_ >> 32), std::uint32_t(stream_),
                                     std::uint32_t(stream_ >> 32)});
            ++counter_;
            pos_ = 0;
        }
        return block_[pos_++];
    }

    static Block generate(Key key, Block ctr) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1), std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
                   std::uint32_t(p0)};
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

 private:
    Key key_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    Block block_{};
    int pos_ = 4;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Reproducible random stream identified by (seed, stream_index). Identical
// identifiers give bit-identical output; substream(i) derives a child stream
// so nested Monte Carlo loops can index replicates without shared state.
class RngStream {
 public:
    using result_type = Philox4x32::result_type;

    RngStream(std::uint64_t seed, std::uint64_t stream_index = 0)
        : seed_(seed), index_(stream_index), engine_({std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_index) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return index_; }

    RngStream substream(std::uint64_t i) const { return {seed_, splitmix64(index_ ^ splitmix64(i + 1))}; }

    static constexpr result_type min() { return Philox4x32::min(); }
    static constexpr result_type max() { return Philox4x32::max(); }
    result_type operator()() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        const std::uint64_t a = engine_() >> 5;
        const std::uint64_t b = engine_() >> 6;
        return double((a << 26) | b) * 0x1.0p-53;
    }

 private:
    std::uint64_t seed_;
    std::uint64_t index_;
    Philox4x32 engine_;
};

}  // namespace ppm
