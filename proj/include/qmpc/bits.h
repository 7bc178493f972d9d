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

#ifndef QMPC_BITS_H
#define QMPC_BITS_H

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qmpc {

using Bit = std::uint8_t;

/// Ordered bits x_1..x_n. Position 0 holds x_1 (the first client in the chain).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::vector<Bit> bits);
  BitVector(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1' characters, first character is x_1.
  /// Throws std::invalid_argument on any other character or an empty string.
  static BitVector parse(std::string_view text);
  /// Bits of `value`, least significant bit as x_1.
  static BitVector from_index(std::uint64_t value, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<Bit>& bits() const { return bits_; }

  Bit parity() const;
  std::size_t weight() const;
  std::string str() const;

  BitVector operator^(const BitVector& other) const;
  bool operator==(const BitVector&) const = default;
  auto operator<=>(const BitVector&) const = default;

 private:
  std::vector<Bit> bits_;
};

}  // namespace qmpc

#endif  // QMPC_BITS_H
