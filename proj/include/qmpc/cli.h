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

#ifndef QMPC_CLI_H
#define QMPC_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmpc/bits.h"
#include "qmpc/photonic.h"

namespace qmpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags or arguments; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { kIdeal, kPhotonic };
enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  int n = 4;
  Mode mode = Mode::kIdeal;
  std::uint64_t seed = 1;
  std::uint64_t shots = 3000;
  NoiseModel noise;
  std::optional<int> final_rotator;
  OutputFormat format = OutputFormat::kJson;

  /// Throws UsageError naming the offending flag.
  void validate() const;
};

/// One protocol run (ideal) or one Monte Carlo experiment (photonic).
std::string cmd_run(const RunConfig& config, const BitVector& inputs, const BitVector& paddings);

/// Every input vector of length n; all paddings for n <= 5, 64 seeded random
/// paddings per input above that. Ends with a summary row. Requires n <= 8.
std::string cmd_sweep(const RunConfig& config);

struct AuditCheck {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped: <reason>"
  double value = 0.0;
  std::string detail;
};

std::vector<AuditCheck> security_audit(const RunConfig& config);
std::string cmd_security_audit(const RunConfig& config);
std::string render_audit(const RunConfig& config, const std::vector<AuditCheck>& checks);

/// Parses `args` (args[0] is the program name) and dispatches. `env_seed` is
/// the value of QMPC_SEED, or null. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_seed);

}  // namespace qmpc::cli

#endif  // QMPC_CLI_H
