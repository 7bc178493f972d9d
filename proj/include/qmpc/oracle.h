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

#ifndef QMPC_ORACLE_H
#define QMPC_ORACLE_H

#include <map>

#include "qmpc/bits.h"

namespace qmpc {

/// XOR over all pairwise products x_i x_j with i < j. Zero for n = 1.
Bit pairwise_and(const BitVector& x);

/// XOR over j = 1..n-1 of x_{j+1} * (x_1 ^ ... ^ x_j).
Bit prefix_form(const BitVector& x);

/// Every input of length n mapped to pairwise_and; each entry is cross-checked
/// against prefix_form. Requires 1 <= n <= 20.
std::map<BitVector, Bit> truth_table(int n);

}  // namespace qmpc

#endif  // QMPC_ORACLE_H
