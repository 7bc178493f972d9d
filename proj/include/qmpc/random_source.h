// Copyright 2026 The qmpc Authors
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

#ifndef QMPC_RANDOM_SOURCE_H
#define QMPC_RANDOM_SOURCE_H

#include <cstdint>
#include <random>

#include "qmpc/bits.h"

namespace qmpc {

/// Source of protocol randomness: share bits and measurement samples.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual Bit next_bit() = 0;
  /// Uniform sample in [0, 1).
  virtual double next_unit() = 0;
};

/// Independent 64-bit stream seed for run `index` under `master`.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

class SeededSource final : public RandomSource {
 public:
  explicit SeededSource(std::uint64_t seed) : engine_(seed) {}
  SeededSource(std::uint64_t master, std::uint64_t index)
      : engine_(derive_stream_seed(master, index)) {}

  Bit next_bit() override { return static_cast<Bit>(engine_() & 1U); }
  double next_unit() override { return std::generate_canonical<double, 53>(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Replays the bits of a fixed integer, least significant first. Used to
/// enumerate share randomness exhaustively. Running past `length` bits throws
/// std::out_of_range. Unit samples are fixed at 0.5: in the noiseless
/// protocol the measured state is a basis state, so the sample never matters.
class TapeSource final : public RandomSource {
 public:
  TapeSource(std::uint64_t tape, int length) : tape_(tape), length_(length) {}

  Bit next_bit() override;
  double next_unit() override { return 0.5; }

  int consumed() const { return position_; }

 private:
  std::uint64_t tape_;
  int length_;
  int position_ = 0;
};

}  // namespace qmpc

#endif  // QMPC_RANDOM_SOURCE_H
