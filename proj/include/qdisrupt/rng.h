// Copyright 2026 The qdisrupt Authors
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

#ifndef QDISRUPT_RNG_H_
#define QDISRUPT_RNG_H_

#include <cstdint>

namespace qdisrupt {

// Counter-based generator keyed by (seed, stream_index). Draw k of a stream is
// a SplitMix64 finalizer applied to key + (k + 1) * golden_gamma, so streams
// with distinct keys are independent and any draw can be recomputed from its
// counter. Copies are independent and continue from the same position.
class RngStream {
   public:
    explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream_index = 0);

    std::uint64_t seed() const {
        return seed_;
    }
    std::uint64_t stream_index() const {
        return stream_index_;
    }
    /// Number of 64-bit draws consumed so far.
    std::uint64_t position() const {
        return counter_;
    }

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double next_double();

    /// Sub-stream `index` of this stream: (seed, stream_index + index).
    RngStream substream(std::uint64_t index) const {
        return RngStream(seed_, stream_index_ + index);
    }

   private:
    std::uint64_t seed_;
    std::uint64_t stream_index_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

}  // namespace qdisrupt

#endif  // QDISRUPT_RNG_H_
