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

#ifndef QMPC_SERIALIZE_H
#define QMPC_SERIALIZE_H

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qmpc/photonic.h"
#include "qmpc/protocol.h"
#include "qmpc/security.h"

namespace qmpc {

/// Rounds to 6 significant decimal digits; all reported probabilities go through this.
double round_probability(double p);

nlohmann::ordered_json bits_json(const BitVector& bits);

/// {"n", "inputs", "paddings", "server_outcome", "decoded", "expected", "transcript_len", "seed"}
nlohmann::ordered_json to_json(const ProtocolResult& result, std::uint64_t seed);

/// {"party", "mutual_information_bits", "enumeration_size"}
nlohmann::ordered_json to_json(const LeakageReport& report);

nlohmann::ordered_json to_json(const NoiseModel& noise);
/// Missing fields keep their defaults. An infinite extinction ratio is written
/// and read as the string "inf". Throws std::invalid_argument on bad input.
NoiseModel noise_from_json(const nlohmann::ordered_json& j);

/// {"inputs", "paddings", "shots", "detected", "counts": {"0", "1"}, "correctness", "stderr", "noise"}
nlohmann::ordered_json to_json(const ExperimentStats& stats);

}  // namespace qmpc

#endif  // QMPC_SERIALIZE_H
