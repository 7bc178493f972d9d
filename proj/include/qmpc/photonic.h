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

#ifndef QMPC_PHOTONIC_H
#define QMPC_PHOTONIC_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qmpc/bits.h"
#include "qmpc/qubit.h"

namespace qmpc {

/// Half-wave plate with its optical axis at `angle` radians from horizontal.
class WavePlateSetting {
 public:
  /// Wraps into [-pi/2, pi/2); a HWP is invariant under a half-turn.
  /// Throws std::invalid_argument on a non-finite angle.
  explicit WavePlateSetting(double angle);

  double angle() const { return angle_; }

 private:
  double angle_;
};

/// Jones matrix of a HWP at theta: [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
Unitary2 hwp(double theta);
inline Unitary2 hwp(const WavePlateSetting& s) { return hwp(s.angle()); }

/// Plates for one client, in the order the photon meets them:
/// first -pi/8 * x (the U gate), then pi/4 * r (the V gate).
std::pair<WavePlateSetting, WavePlateSetting> compile_client(Bit x, Bit r);

/// Client plates in chain order followed by the final plate at pi/8 * parity(x).
/// The trailing HWP(0) only flips a relative sign and is left out.
std::vector<WavePlateSetting> compile_chain(const BitVector& inputs, const BitVector& paddings);

/// Product of the plates, last plate leftmost.
Unitary2 compose(const std::vector<WavePlateSetting>& plates);

/// True iff the plate chain on |0> gives the same computational-basis
/// probabilities (within 1e-12) as the ideal padded gate chain.
bool chain_equivalence(const BitVector& inputs, const BitVector& paddings);

struct NoiseModel {
  double angle_jitter_sigma = 0.004;  // rad, per plate
  double dark_count_prob = 0.001;
  double crosstalk_prob = 0.002;  // per fibre hop
  double extinction_ratio_db = 60.0;
  double coupling_efficiency = 0.5;

  /// No noise at all; the extinction ratio is infinite.
  static NoiseModel ideal();
  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  /// Probability that the splitter routes a photon to the wrong detector.
  double leakage_prob() const;
};

struct ExperimentStats {
  BitVector inputs;
  BitVector paddings;
  NoiseModel noise;
  std::uint64_t shots = 0;
  std::uint64_t detected = 0;
  std::uint64_t count0 = 0;
  std::uint64_t count1 = 0;
  std::uint64_t correct = 0;

  double correctness() const;
  /// Binomial standard error of correctness().
  double standard_error() const;
};

/// Monte Carlo run of the photonic experiment. Shot k uses its own RNG stream
/// derived from (seed, k), so the tallies do not depend on `workers`.
/// workers = 0 picks the hardware concurrency.
ExperimentStats run_noisy_experiment(const BitVector& inputs, const BitVector& paddings,
                                     const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                                     unsigned workers = 0);

}  // namespace qmpc

#endif  // QMPC_PHOTONIC_H
