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

#include "qmpc/serialize.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "qmpc/oracle.h"

namespace qmpc {

double round_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json bits_json(const BitVector& bits) {
  auto arr = nlohmann::ordered_json::array();
  for (Bit b : bits.bits()) arr.push_back(static_cast<int>(b));
  return arr;
}

nlohmann::ordered_json to_json(const ProtocolResult& result, std::uint64_t seed) {
  std::vector<Bit> x, r;
  for (const auto& c : result.clients) {
    x.push_back(c.x);
    r.push_back(c.r);
  }
  const BitVector inputs(std::move(x));
  const BitVector paddings(std::move(r));
  return {
      {"n", inputs.size()},
      {"inputs", bits_json(inputs)},
      {"paddings", bits_json(paddings)},
      {"server_outcome", static_cast<int>(result.server_outcome)},
      {"decoded", static_cast<int>(result.decoded)},
      {"expected", static_cast<int>(pairwise_and(inputs))},
      {"transcript_len", result.transcript.size()},
      {"seed", seed},
  };
}

nlohmann::ordered_json to_json(const LeakageReport& report) {
  return {
      {"party", report.party.str()},
      {"mutual_information_bits", round_probability(report.mutual_information_bits)},
      {"enumeration_size", report.enumeration_size},
  };
}

nlohmann::ordered_json to_json(const NoiseModel& noise) {
  nlohmann::ordered_json extinction = noise.extinction_ratio_db;
  if (std::isinf(noise.extinction_ratio_db)) extinction = "inf";
  return {
      {"angle_jitter_sigma", noise.angle_jitter_sigma},
      {"dark_count_prob", noise.dark_count_prob},
      {"crosstalk_prob", noise.crosstalk_prob},
      {"extinction_ratio_db", extinction},
      {"coupling_efficiency", noise.coupling_efficiency},
  };
}

NoiseModel noise_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("noise model must be a JSON object");
  NoiseModel noise;
  auto number = [&](const char* key, double& field) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (v.is_number()) {
      field = v.get<double>();
    } else if (v.is_string() && v.get<std::string>() == "inf") {
      field = std::numeric_limits<double>::infinity();
    } else {
      throw std::invalid_argument(std::string("noise field '") + key + "' must be a number");
    }
  };
  for (const auto& [key, value] : j.items()) {
    if (key != "angle_jitter_sigma" && key != "dark_count_prob" && key != "crosstalk_prob" &&
        key != "extinction_ratio_db" && key != "coupling_efficiency") {
      throw std::invalid_argument("unknown noise field '" + key + "'");
    }
  }
  number("angle_jitter_sigma", noise.angle_jitter_sigma);
  number("dark_count_prob", noise.dark_count_prob);
  number("crosstalk_prob", noise.crosstalk_prob);
  number("extinction_ratio_db", noise.extinction_ratio_db);
  number("coupling_efficiency", noise.coupling_efficiency);
  noise.validate();
  return noise;
}

nlohmann::ordered_json to_json(const ExperimentStats& stats) {
  return {
      {"inputs", bits_json(stats.inputs)},
      {"paddings", bits_json(stats.paddings)},
      {"shots", stats.shots},
      {"detected", stats.detected},
      {"counts", {{"0", stats.count0}, {"1", stats.count1}}},
      {"correctness", round_probability(stats.correctness())},
      {"stderr", round_probability(stats.standard_error())},
      {"noise", to_json(stats.noise)},
  };
}

}  // namespace qmpc
