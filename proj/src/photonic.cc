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

#include "qmpc/photonic.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "qmpc/oracle.h"
#include "qmpc/protocol.h"
#include "qmpc/random_source.h"

namespace qmpc {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

WavePlateSetting::WavePlateSetting(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("WavePlateSetting: angle must be finite");
  if (angle < -kPi / 2 || angle >= kPi / 2) {
    angle -= kPi * std::floor((angle + kPi / 2) / kPi);
  }
  angle_ = angle;
}

Unitary2 hwp(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("hwp: angle must be finite");
  const double c = std::cos(2 * theta);
  const double s = std::sin(2 * theta);
  return {c, s, s, -c};
}

std::pair<WavePlateSetting, WavePlateSetting> compile_client(Bit x, Bit r) {
  // Unset bits leave their plate at zero.
  return {WavePlateSetting(x ? -kPi / 8 : 0.0), WavePlateSetting(r ? kPi / 4 : 0.0)};
}

std::vector<WavePlateSetting> compile_chain(const BitVector& inputs, const BitVector& paddings) {
  if (inputs.size() != paddings.size()) {
    throw std::invalid_argument("compile_chain: inputs and paddings differ in length");
  }
  if (inputs.size() < 2) throw std::invalid_argument("compile_chain: n must be at least 2");
  std::vector<WavePlateSetting> plates;
  plates.reserve(2 * inputs.size() + 1);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto [u_plate, v_plate] = compile_client(inputs[i], paddings[i]);
    plates.push_back(u_plate);
    plates.push_back(v_plate);
  }
  plates.emplace_back(inputs.parity() ? kPi / 8 : 0.0);
  return plates;
}

Unitary2 compose(const std::vector<WavePlateSetting>& plates) {
  Unitary2 total = Unitary2::identity();
  for (const auto& p : plates) total = hwp(p) * total;
  return total;
}

bool chain_equivalence(const BitVector& inputs, const BitVector& paddings) {
  const QubitState optical = apply(compose(compile_chain(inputs, paddings)), QubitState::zero());
  const QubitState ideal = padded_chain_state(inputs, paddings);
  return std::abs(optical.prob0() - ideal.prob0()) <= kExactTol &&
         std::abs(optical.prob1() - ideal.prob1()) <= kExactTol;
}

NoiseModel NoiseModel::ideal() {
  return {0.0, 0.0, 0.0, std::numeric_limits<double>::infinity(), 1.0};
}

void NoiseModel::validate() const {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!(angle_jitter_sigma >= 0.0) || !std::isfinite(angle_jitter_sigma)) {
    throw std::invalid_argument("noise: angle_jitter_sigma must be finite and >= 0");
  }
  if (!prob(dark_count_prob)) throw std::invalid_argument("noise: dark_count_prob must be in [0, 1]");
  if (!prob(crosstalk_prob)) throw std::invalid_argument("noise: crosstalk_prob must be in [0, 1]");
  if (!prob(coupling_efficiency)) {
    throw std::invalid_argument("noise: coupling_efficiency must be in [0, 1]");
  }
  if (!(extinction_ratio_db > 0.0)) throw std::invalid_argument("noise: extinction_ratio_db must be > 0");
}

double NoiseModel::leakage_prob() const { return std::pow(10.0, -extinction_ratio_db / 10.0); }

double ExperimentStats::correctness() const {
  return detected == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(detected);
}

double ExperimentStats::standard_error() const {
  if (detected == 0) return 0.0;
  const double p = correctness();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(detected));
}

namespace {

struct Tally {
  std::uint64_t detected = 0;
  std::uint64_t count0 = 0;
  std::uint64_t count1 = 0;
  std::uint64_t correct = 0;
};

class ShotSimulator {
 public:
  ShotSimulator(const BitVector& inputs, const BitVector& paddings, const NoiseModel& noise)
      : plates_(compile_chain(inputs, paddings)),
        noise_(noise),
        leak_(noise.leakage_prob()),
        pad_parity_(paddings.parity()),
        expected_(pairwise_and(inputs)) {}

  void shot(SeededSource& rng, Tally& tally) const {
    std::normal_distribution<double> jitter(0.0, noise_.angle_jitter_sigma);
    DensityMatrix rho = DensityMatrix::diag(1.0, 0.0);
    // Fibre hops: server -> C1, then C_i -> C_{i+1}. The final plate sits
    // with C_n, so the last hop is C_n -> server.
    const std::size_t clients = (plates_.size() - 1) / 2;
    for (std::size_t i = 0; i < clients; ++i) {
      rho = hop(rng, rho);
      rho = through(rng, jitter, plates_[2 * i], rho);
      rho = through(rng, jitter, plates_[2 * i + 1], rho);
    }
    rho = through(rng, jitter, plates_.back(), rho);
    rho = hop(rng, rho);

    if (rng.next_unit() >= noise_.coupling_efficiency) return;
    ++tally.detected;
    Bit outcome = rng.next_unit() < rho.prob1() ? 1 : 0;
    if (rng.next_unit() < leak_) outcome ^= 1;
    if (rng.next_unit() < noise_.dark_count_prob) outcome = rng.next_bit();
    (outcome ? tally.count1 : tally.count0) += 1;
    if ((outcome ^ pad_parity_) == expected_) ++tally.correct;
  }

 private:
  DensityMatrix hop(SeededSource& rng, const DensityMatrix& rho) const {
    return rng.next_unit() < noise_.crosstalk_prob ? rho.dephased() : rho;
  }

  DensityMatrix through(SeededSource& rng, std::normal_distribution<double>& jitter,
                        const WavePlateSetting& plate, const DensityMatrix& rho) const {
    double angle = plate.angle();
    if (noise_.angle_jitter_sigma > 0.0) angle += jitter(rng.engine());
    return apply(hwp(angle), rho);
  }

  std::vector<WavePlateSetting> plates_;
  NoiseModel noise_;
  double leak_;
  Bit pad_parity_;
  Bit expected_;
};

}  // namespace

ExperimentStats run_noisy_experiment(const BitVector& inputs, const BitVector& paddings,
                                     const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                                     unsigned workers) {
  if (shots < 1) throw std::invalid_argument("run_noisy_experiment: shots must be positive");
  noise.validate();
  const ShotSimulator sim(inputs, paddings, noise);

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shots));
  std::vector<Tally> tallies(workers);
  auto work = [&](unsigned w) {
    const std::uint64_t begin = shots * w / workers;
    const std::uint64_t end = shots * (w + 1) / workers;
    for (std::uint64_t k = begin; k < end; ++k) {
      SeededSource rng(seed, k);
      sim.shot(rng, tallies[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  ExperimentStats stats{inputs, paddings, noise, shots};
  for (const auto& t : tallies) {
    stats.detected += t.detected;
    stats.count0 += t.count0;
    stats.count1 += t.count1;
    stats.correct += t.correct;
  }
  return stats;
}

}  // namespace qmpc
