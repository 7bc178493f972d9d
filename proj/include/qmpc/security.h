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

#ifndef QMPC_SECURITY_H
#define QMPC_SECURITY_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmpc/bits.h"
#include "qmpc/protocol.h"
#include "qmpc/qubit.h"
#include "qmpc/random_source.h"

namespace qmpc {

/// Raised when an exhaustive enumeration is requested beyond its size guard.
class UnsupportedSizeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// cos(phi/2)|0> + sin(phi/2)|1>
struct XZPlaneState {
  double phi = 0.0;
  QubitState state() const;
};

/// (1/2) sum_r V^r U^x |psi><psi| (U^dagger)^x (V^dagger)^r
DensityMatrix blinding_check(Bit x, const XZPlaneState& psi);

/// Same mixture for an arbitrary pure state. Only the X and Z Bloch
/// components are randomized; the Y component passes through unchanged.
DensityMatrix blinding_check(Bit x, const QubitState& psi);

/// P(announced outcome = 1) averaged over all 2^n padding vectors, from the
/// exact pre-measurement amplitudes.
double server_marginal_analytic(const BitVector& inputs);

/// Fraction of outcome-1 announcements over `shots` protocol runs with fresh
/// uniform paddings drawn from `rng`.
double server_marginal_sampled(const BitVector& inputs, int shots, RandomSource& rng);

/// True iff for both secret values, every subset of `subset_size` shares is
/// exactly uniform over all share randomness. Requires 1 <= subset_size < n <= 5.
bool share_privacy_check(int n, int subset_size);

struct LeakageReport {
  PartyId party;
  double mutual_information_bits = 0.0;
  /// Number of (inputs, paddings, share randomness) points covered.
  std::uint64_t enumeration_size = 0;
};

struct LeakageOptions {
  std::optional<int> final_rotator;
  /// Include the clients' tilde_r broadcast, which reveals the function output
  /// itself. Off by default: the report measures what the computation leaks
  /// beyond the output opening.
  bool include_output_reveal = false;
};

/// Which messages of a party's view to encode.
enum class ViewPart { kAll, kXShares, kRShares };

/// Canonical encoding of what `party` records in a run: its own secret bits
/// and every visible classical message. Qubit hops contribute only their
/// routing; the server's record of the qubit is the announced outcome.
std::string classical_view_key(const ProtocolResult& run, const PartyId& party, ViewPart part,
                               bool include_output_reveal);

/// Exact mutual information I(honest inputs; view) in bits, by enumeration
/// over uniform inputs, paddings and share randomness. The party's own input
/// is part of its view, not of the honest inputs. Throws UnsupportedSizeError
/// for n > 4 and std::invalid_argument for n < 2 or a bad party index.
LeakageReport transcript_leakage(int n, const PartyId& party, const LeakageOptions& options = {});

/// transcript_leakage for the server and every client, sharing one enumeration.
std::vector<LeakageReport> transcript_leakage_all(int n, const LeakageOptions& options = {});

}  // namespace qmpc

#endif  // QMPC_SECURITY_H
