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

#include "qmpc/oracle.h"

#include <stdexcept>

namespace qmpc {

Bit pairwise_and(const BitVector& x) {
  if (x.empty()) throw std::invalid_argument("pairwise_and: empty input");
  Bit acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) acc ^= x[i] & x[j];
  }
  return acc;
}

Bit prefix_form(const BitVector& x) {
  if (x.empty()) throw std::invalid_argument("prefix_form: empty input");
  Bit acc = 0;
  Bit prefix = 0;
  // Outer index stops at n-1: x_{n+1} does not exist.
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    prefix ^= x[j];
    acc ^= x[j + 1] & prefix;
  }
  return acc;
}

std::map<BitVector, Bit> truth_table(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("truth_table: n must be in [1, 20]");
  std::map<BitVector, Bit> table;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    BitVector x = BitVector::from_index(v, static_cast<std::size_t>(n));
    Bit f = pairwise_and(x);
    if (f != prefix_form(x)) {
      throw std::logic_error("truth_table: oracle forms disagree on " + x.str());
    }
    table.emplace(std::move(x), f);
  }
  return table;
}

}  // namespace qmpc
