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

#include "qmpc/bits.h"

#include <stdexcept>
#include <utility>

namespace qmpc {

BitVector::BitVector(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) {
    if (b > 1) throw std::invalid_argument("BitVector: element is not 0 or 1");
  }
}

BitVector::BitVector(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitVector: element is not 0 or 1");
    bits_.push_back(static_cast<Bit>(b));
  }
}

BitVector BitVector::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("bit string is empty");
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string contains '" + std::string(1, c) + "'");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BitVector(std::move(bits));
}

BitVector BitVector::from_index(std::uint64_t value, std::size_t n) {
  std::vector<Bit> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<Bit>((value >> i) & 1U);
  return BitVector(std::move(bits));
}

Bit BitVector::parity() const {
  Bit p = 0;
  for (Bit b : bits_) p ^= b;
  return p;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (Bit b : bits_) w += b;
  return w;
}

std::string BitVector::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitVector BitVector::operator^(const BitVector& other) const {
  if (other.size() != size()) throw std::invalid_argument("BitVector: length mismatch in xor");
  std::vector<Bit> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = bits_[i] ^ other.bits_[i];
  return BitVector(std::move(out));
}

}  // namespace qmpc
