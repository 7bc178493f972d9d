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

#include "qmpc/cli.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmpc/oracle.h"
#include "qmpc/protocol.h"
#include "qmpc/random_source.h"
#include "qmpc/security.h"
#include "qmpc/serialize.h"

namespace qmpc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxRunClients = 32;
constexpr int kMaxSweepClients = 8;
constexpr int kExhaustivePaddingLimit = 5;
constexpr int kRandomPaddings = 64;
constexpr int kBlindingAngles = 100;

std::string format_number(double v) {
  std::ostringstream out;
  out << json(v).dump();
  return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Bits of `v` with x_1 as the most significant digit, so that counting
/// upwards lists inputs in lexicographic order.
BitVector lexicographic(std::uint64_t v, int n) {
  std::vector<Bit> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[i] = static_cast<Bit>((v >> (n - 1 - i)) & 1U);
  return BitVector(std::move(bits));
}

/// Minimal CSV writer: header from the first row's keys, scalar cells only.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(const json& row) { rows_.push_back(row); }

  std::string str() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << columns_[c];
    out << "\n";
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        out << (c ? "," : "") << cell(row.contains(columns_[c]) ? row.at(columns_[c]) : json());
      }
      out << "\n";
    }
    return out.str();
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_array()) {
      std::string s;
      for (const auto& b : v) s += std::to_string(b.get<int>());
      return s;
    }
    return v.dump();
  }

  std::vector<std::string> columns_;
  std::vector<json> rows_;
};

std::string render(const json& j, const std::vector<std::string>& columns, OutputFormat format) {
  if (format == OutputFormat::kJson) return dump(j);
  CsvTable table(columns);
  table.add(j);
  return table.str();
}

}  // namespace

void RunConfig::validate() const {
  if (n < 2) throw UsageError("--n: must be at least 2");
  if (n > kMaxRunClients) throw UsageError("--n: at most " + std::to_string(kMaxRunClients) + " clients");
  if (mode == Mode::kPhotonic && shots < 1) throw UsageError("--shots: must be at least 1");
  if (final_rotator && (*final_rotator < 1 || *final_rotator > n)) {
    throw UsageError("--final-rotator: must be in 1.." + std::to_string(n));
  }
  try {
    noise.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--noise-file: ") + e.what());
  }
}

std::string cmd_run(const RunConfig& config, const BitVector& inputs, const BitVector& paddings) {
  config.validate();
  if (inputs.size() != static_cast<std::size_t>(config.n)) {
    throw UsageError("--inputs: length " + std::to_string(inputs.size()) + " does not match n = " +
                     std::to_string(config.n));
  }
  if (paddings.size() != static_cast<std::size_t>(config.n)) {
    throw UsageError("--paddings: length " + std::to_string(paddings.size()) +
                     " does not match n = " + std::to_string(config.n));
  }
  if (config.mode == Mode::kIdeal) {
    SeededSource rng(config.seed);
    ProtocolResult result = run_protocol(inputs, paddings, rng, ProtocolConfig{config.final_rotator});
    return render(to_json(result, config.seed),
                  {"n", "inputs", "paddings", "server_outcome", "decoded", "expected", "transcript_len",
                   "seed"},
                  config.format);
  }
  ExperimentStats stats = run_noisy_experiment(inputs, paddings, config.noise, config.shots, config.seed);
  json j = to_json(stats);
  if (config.format == OutputFormat::kJson) return dump(j);
  json flat = j;
  flat["count0"] = j["counts"]["0"];
  flat["count1"] = j["counts"]["1"];
  return render(flat, {"inputs", "paddings", "shots", "detected", "count0", "count1", "correctness", "stderr"},
                config.format);
}

std::string cmd_sweep(const RunConfig& config) {
  config.validate();
  if (config.n > kMaxSweepClients) {
    throw UsageError("--n: sweeps support at most " + std::to_string(kMaxSweepClients) + " clients");
  }
  const int n = config.n;
  const bool photonic = config.mode == Mode::kPhotonic;
  const std::uint64_t inputs_count = std::uint64_t{1} << n;
  const ProtocolConfig protocol{config.final_rotator};

  json rows = json::array();
  std::uint64_t row_index = 0;
  std::uint64_t matches = 0;
  std::uint64_t total_detected = 0;
  std::uint64_t total_correct = 0;
  std::uint64_t total_shots = 0;

  for (std::uint64_t v = 0; v < inputs_count; ++v) {
    const BitVector inputs = lexicographic(v, n);
    std::vector<BitVector> paddings;
    if (n <= kExhaustivePaddingLimit) {
      for (std::uint64_t p = 0; p < inputs_count; ++p) paddings.push_back(lexicographic(p, n));
    } else {
      SeededSource pad_rng(derive_stream_seed(config.seed, 0x9ad), v);
      for (int k = 0; k < kRandomPaddings; ++k) {
        std::vector<Bit> bits(static_cast<std::size_t>(n));
        for (auto& b : bits) b = pad_rng.next_bit();
        paddings.emplace_back(std::move(bits));
      }
    }
    const Bit expected = pairwise_and(inputs);
    for (const auto& pad : paddings) {
      json row = {{"inputs", inputs.str()}, {"paddings", pad.str()}, {"expected", static_cast<int>(expected)}};
      if (photonic) {
        ExperimentStats stats = run_noisy_experiment(inputs, pad, config.noise, config.shots,
                                                     derive_stream_seed(config.seed, row_index));
        row["shots"] = stats.shots;
        row["detected"] = stats.detected;
        row["correct"] = stats.correct;
        row["correctness"] = round_probability(stats.correctness());
        total_shots += stats.shots;
        total_detected += stats.detected;
        total_correct += stats.correct;
      } else {
        SeededSource rng(config.seed, row_index);
        const Bit decoded = run_protocol(inputs, pad, rng, protocol).decoded;
        const bool match = decoded == expected;
        matches += match;
        row["decoded"] = static_cast<int>(decoded);
        row["match"] = match ? 1 : 0;
        row["correctness"] = match ? 1.0 : 0.0;
      }
      rows.push_back(std::move(row));
      ++row_index;
    }
  }

  json summary = {{"inputs", "summary"}, {"rows", row_index}};
  if (photonic) {
    summary["shots"] = total_shots;
    summary["detected"] = total_detected;
    summary["correct"] = total_correct;
    summary["correctness"] =
        round_probability(total_detected ? static_cast<double>(total_correct) / total_detected : 0.0);
  } else {
    summary["match"] = matches;
    summary["correctness"] = round_probability(static_cast<double>(matches) / row_index);
  }

  if (config.format == OutputFormat::kJson) {
    json out = {{"mode", photonic ? "photonic" : "ideal"},
                {"n", n},
                {"seed", config.seed},
                {"rows", rows},
                {"summary", summary}};
    if (photonic) out["noise"] = to_json(config.noise);
    return dump(out);
  }
  CsvTable table(photonic ? std::vector<std::string>{"inputs", "paddings", "expected", "shots", "detected",
                                                     "correct", "correctness"}
                          : std::vector<std::string>{"inputs", "paddings", "expected", "decoded", "match",
                                                     "correctness"});
  for (const auto& row : rows) table.add(row);
  table.add(summary);
  return table.str();
}

std::vector<AuditCheck> security_audit(const RunConfig& config) {
  config.validate();
  if (config.n > kMaxSweepClients) {
    throw UsageError("--n: audits support at most " + std::to_string(kMaxSweepClients) + " clients");
  }
  const int n = config.n;
  std::vector<AuditCheck> checks;
  auto verdict = [](bool ok) { return std::string(ok ? "pass" : "fail"); };

  {
    double worst = 0.0;
    for (Bit x : {Bit{0}, Bit{1}}) {
      for (int k = 0; k < kBlindingAngles; ++k) {
        const double phi = 2 * std::numbers::pi * k / kBlindingAngles;
        worst = std::max(worst, trace_distance(blinding_check(x, XZPlaneState{phi}),
                                               DensityMatrix::maximally_mixed()));
      }
    }
    checks.push_back({"blinding", verdict(worst <= kExactTol), worst,
                      "max trace distance from I/2 over x in {0,1} and 100 XZ-plane angles"});
  }
  {
    double worst = 0.0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      worst = std::max(worst, std::abs(server_marginal_analytic(lexicographic(v, n)) - 0.5));
    }
    checks.push_back({"marginal_analytic", verdict(worst <= 1e-15), worst,
                      "max |P(outcome=1) - 0.5| over all inputs, exact average over paddings"});
  }
  {
    SeededSource rng(config.seed, 0xa0d17);
    std::vector<Bit> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = rng.next_bit();
    const BitVector inputs(std::move(bits));
    const int shots = static_cast<int>(config.shots);
    const double estimate = server_marginal_sampled(inputs, shots, rng);
    const double band = 3.0 * std::sqrt(0.25 / shots);
    checks.push_back({"marginal_sampled", verdict(std::abs(estimate - 0.5) <= band), round_probability(estimate),
                      "inputs " + inputs.str() + ", " + std::to_string(shots) + " shots, 3 sigma band +/- " +
                          format_number(round_probability(band))});
  }
  if (n <= 5) {
    bool ok = true;
    for (int k = 1; k < n; ++k) ok = ok && share_privacy_check(n, k);
    checks.push_back({"share_privacy", verdict(ok), ok ? 1.0 : 0.0,
                      "every strict subset of shares is uniform, subset sizes 1.." + std::to_string(n - 1)});
  } else {
    checks.push_back({"share_privacy", "skipped: n > 5", 0.0, "exhaustive enumeration guard"});
  }
  if (n <= 4) {
    const int rotator = config.final_rotator.value_or(n);
    auto reports = transcript_leakage_all(n, LeakageOptions{rotator});
    for (const auto& report : reports) {
      const bool is_rotator = !report.party.is_server() && report.party.index == rotator;
      // The rotator learns the parity of the other inputs: one uniform bit.
      const double allowed = is_rotator ? 1.0 : 0.0;
      const bool ok = std::abs(report.mutual_information_bits - allowed) <= 1e-9;
      checks.push_back({"leakage_" + report.party.str(), verdict(ok),
                        round_probability(report.mutual_information_bits),
                        std::string("mutual information in bits, expected ") + (is_rotator ? "1" : "0") +
                            ", enumeration size " + std::to_string(report.enumeration_size)});
    }
  } else {
    checks.push_back({"leakage", "skipped: n > 4", 0.0, "exhaustive enumeration guard"});
  }
  return checks;
}

std::string cmd_security_audit(const RunConfig& config) {
  return render_audit(config, security_audit(config));
}

std::string render_audit(const RunConfig& config, const std::vector<AuditCheck>& checks) {
  bool all_passed = true;
  for (const auto& c : checks) all_passed = all_passed && c.status != "fail";
  if (config.format == OutputFormat::kJson) {
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"status", c.status}, {"value", c.value}, {"detail", c.detail}});
    }
    return dump({{"n", config.n}, {"seed", config.seed}, {"checks", list}, {"all_passed", all_passed}});
  }
  std::ostringstream out;
  out << "name,status,value,detail\n";
  for (const auto& c : checks) {
    out << c.name << "," << c.status << "," << format_number(c.value) << ",\"" << c.detail << "\"\n";
  }
  return out.str();
}

namespace {

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(what + ": '" + text + "' is not a 64-bit seed");
  return v;
}

BitVector parse_bits(const std::string& text, const std::string& flag) {
  try {
    return BitVector::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

NoiseModel load_noise(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--noise-file: cannot open '" + path + "'");
  try {
    return noise_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError("--noise-file: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw UsageError("--noise-file: " + std::string(e.what()));
  }
}

struct Flags {
  std::optional<int> n;
  std::string inputs;
  std::string paddings;
  std::string mode = "ideal";
  std::string seed;
  std::uint64_t shots = 3000;
  std::string noise_file;
  std::optional<int> final_rotator;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "Number of clients");
  cmd->add_option("--mode", f.mode, "Execution model")->check(CLI::IsMember({"ideal", "photonic"}));
  cmd->add_option("--seed", f.seed, "64-bit seed (falls back to QMPC_SEED)");
  cmd->add_option("--shots", f.shots, "Shots per configuration in photonic mode");
  cmd->add_option("--noise-file", f.noise_file, "JSON noise model for photonic mode");
  cmd->add_option("--final-rotator", f.final_rotator, "Client applying the final rotation (default n)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

RunConfig to_config(const Flags& f, int n, const char* env_seed) {
  RunConfig config;
  config.n = n;
  config.mode = f.mode == "photonic" ? Mode::kPhotonic : Mode::kIdeal;
  if (!f.seed.empty()) {
    config.seed = parse_seed(f.seed, "--seed");
  } else if (env_seed != nullptr && *env_seed != '\0') {
    config.seed = parse_seed(env_seed, "QMPC_SEED");
  }
  config.shots = f.shots;
  if (!f.noise_file.empty()) config.noise = load_noise(f.noise_file);
  config.final_rotator = f.final_rotator;
  config.format = f.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_seed) {
  CLI::App app{"Single-qubit multiparty pairwise-AND protocol simulator"};
  app.require_subcommand(1);
  Flags run_flags, sweep_flags, audit_flags;

  auto* run_cmd = app.add_subcommand("run", "Execute one protocol run");
  add_common(run_cmd, run_flags);
  run_cmd->add_option("--inputs", run_flags.inputs, "Input bits, x_1 first")->required();
  run_cmd->add_option("--paddings", run_flags.paddings, "Padding bits, r_1 first")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Run every input against its padding set");
  add_common(sweep_cmd, sweep_flags);

  auto* audit_cmd = app.add_subcommand("audit", "Run the security checks");
  add_common(audit_cmd, audit_flags);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      const BitVector inputs = parse_bits(run_flags.inputs, "--inputs");
      const BitVector paddings = parse_bits(run_flags.paddings, "--paddings");
      const int n = run_flags.n.value_or(static_cast<int>(inputs.size()));
      out << cmd_run(to_config(run_flags, n, env_seed), inputs, paddings);
    } else if (sweep_cmd->parsed()) {
      out << cmd_sweep(to_config(sweep_flags, sweep_flags.n.value_or(4), env_seed));
    } else {
      const RunConfig config = to_config(audit_flags, audit_flags.n.value_or(4), env_seed);
      const auto checks = security_audit(config);
      out << render_audit(config, checks);
      for (const auto& c : checks) {
        if (c.status == "fail") return kExitInternal;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace qmpc::cli
