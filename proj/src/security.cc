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

#include "qmpc/security.h"

#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

namespace qmpc {

QubitState XZPlaneState::state() const {
  return {Complex{std::cos(phi / 2)}, Complex{std::sin(phi / 2)}};
}

DensityMatrix blinding_check(Bit x, const XZPlaneState& psi) { return blinding_check(x, psi.state()); }

DensityMatrix blinding_check(Bit x, const QubitState& psi) {
  const DensityMatrix rho = dm_from_pure(psi);
  const Unitary2 ux = gate_u().pow(x);
  std::array<WeightedDensity, 2> terms = {
      WeightedDensity{0.5, apply(ux, rho)},
      WeightedDensity{0.5, apply(gate_v() * ux, rho)},
  };
  return dm_mix(terms);
}

double server_marginal_analytic(const BitVector& inputs) {
  const std::size_t n = inputs.size();
  if (n < 2) throw std::invalid_argument("server_marginal_analytic: n must be at least 2");
  if (n > 20) throw UnsupportedSizeError("server_marginal_analytic: n must be at most 20");
  double total = 0.0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t p = 0; p < count; ++p) {
    total += padded_chain_state(inputs, BitVector::from_index(p, n)).prob1();
  }
  return total / static_cast<double>(count);
}

double server_marginal_sampled(const BitVector& inputs, int shots, RandomSource& rng) {
  if (shots < 1) throw std::invalid_argument("server_marginal_sampled: shots must be positive");
  int ones = 0;
  for (int s = 0; s < shots; ++s) {
    std::vector<Bit> pad(inputs.size());
    for (auto& b : pad) b = rng.next_bit();
    ones += run_protocol(inputs, BitVector(std::move(pad)), rng).server_outcome;
  }
  return static_cast<double>(ones) / shots;
}

bool share_privacy_check(int n, int subset_size) {
  if (n < 2 || n > 5) throw std::invalid_argument("share_privacy_check: n must be in [2, 5]");
  if (subset_size < 1 || subset_size >= n) {
    throw std::invalid_argument("share_privacy_check: subset size must be in [1, n)");
  }
  const int draws = n - 1;
  const std::uint64_t patterns = std::uint64_t{1} << draws;
  const std::uint64_t expected = patterns >> subset_size;
  for (Bit secret : {Bit{0}, Bit{1}}) {
    std::vector<std::vector<Bit>> all;
    for (std::uint64_t t = 0; t < patterns; ++t) {
      TapeSource tape(t, draws);
      all.push_back(share_split(secret, n, tape));
    }
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != subset_size) continue;
      std::map<std::uint32_t, std::uint64_t> hist;
      for (const auto& shares : all) {
        std::uint32_t key = 0;
        int pos = 0;
        for (int i = 0; i < n; ++i) {
          if (mask & (1U << i)) key |= static_cast<std::uint32_t>(shares[i]) << pos++;
        }
        ++hist[key];
      }
      if (hist.size() != (std::size_t{1} << subset_size)) return false;
      for (const auto& [key, c] : hist) {
        if (c != expected) return false;
      }
    }
  }
  return true;
}

std::string classical_view_key(const ProtocolResult& run, const PartyId& party, ViewPart part,
                               bool include_output_reveal) {
  std::string key;
  auto bit = [](Bit b) { return static_cast<char>('0' + b); };
  if (!party.is_server()) {
    const ClientState& own = run.clients.at(party.index - 1);
    if (part != ViewPart::kRShares) key += std::string("x=") + bit(own.x) + ";";
    if (part != ViewPart::kXShares) key += std::string("r=") + bit(own.r) + ";";
  }
  for (const auto& msg : run.transcript.messages()) {
    if (!visible_to(msg, party)) continue;
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, QubitMsg>) {
            if (part == ViewPart::kAll) key += "Q" + m.from.str() + ">" + m.to.str() + ";";
          } else if constexpr (std::is_same_v<T, ShareMsg>) {
            const bool is_x = m.kind == ShareKind::kX;
            if (part == ViewPart::kAll || (is_x == (part == ViewPart::kXShares))) {
              key += std::string(is_x ? "SX" : "SR") + m.from.str() + ">" + m.to.str() + "=" +
                     bit(m.value) + ";";
            }
          } else if constexpr (std::is_same_v<T, TildeXMsg>) {
            if (part != ViewPart::kRShares) {
              key += "TX" + m.from.str() + ">" + m.to.str() + "=" + bit(m.value) + ";";
            }
          } else if constexpr (std::is_same_v<T, OutcomeMsg>) {
            if (part == ViewPart::kAll) key += std::string("O=") + bit(m.value) + ";";
          } else {
            if (include_output_reveal && part != ViewPart::kXShares) {
              key += "TR" + m.from.str() + "=" + bit(m.value) + ";";
            }
          }
        },
        msg);
  }
  return key;
}

namespace {

double entropy_bits(const std::vector<std::uint64_t>& counts, double total) {
  double h = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

template <typename Map>
std::vector<std::uint64_t> values_of(const Map& m) {
  std::vector<std::uint64_t> v;
  v.reserve(m.size());
  for (const auto& [k, c] : m) v.push_back(c);
  return v;
}

/// Interns strings into dense ids.
class Interner {
 public:
  std::uint32_t id(const std::string& s) {
    auto [it, inserted] = ids_.try_emplace(s, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
};

std::uint64_t honest_inputs(std::uint64_t x, const PartyId& party) {
  if (party.is_server()) return x;
  const int skip = party.index - 1;
  const std::uint64_t low = x & ((std::uint64_t{1} << skip) - 1);
  const std::uint64_t high = x >> (skip + 1);
  return low | (high << skip);
}

}  // namespace

std::vector<LeakageReport> transcript_leakage_all(int n, const LeakageOptions& options) {
  if (n < 2) throw std::invalid_argument("transcript_leakage: n must be at least 2");
  if (n > 4) throw UnsupportedSizeError("transcript_leakage: n > 4 is not supported");
  const int rotator = options.final_rotator.value_or(n);
  if (rotator < 1 || rotator > n) throw std::invalid_argument("final rotator must be in 1..n");
  const ProtocolConfig config{rotator};
  const bool reveal = options.include_output_reveal;

  const std::size_t nn = static_cast<std::size_t>(n);
  const int share_bits = n * (n - 1);  // per kind
  const int tape_len = 2 * share_bits;
  const std::uint64_t secrets = std::uint64_t{1} << n;
  const std::uint64_t tapes = std::uint64_t{1} << share_bits;
  const BitVector zeros = BitVector::from_index(0, nn);

  std::vector<PartyId> parties{PartyId::server()};
  for (int i = 1; i <= n; ++i) parties.push_back(PartyId::client(i));
  const std::size_t np = parties.size();

  // The view splits into an x-share part (a function of inputs and x-share
  // randomness), an r-share part (paddings and r-share randomness) and the
  // announced outcome (inputs and paddings). Enumerate each factor on its own.
  std::vector<Interner> a_ids(np), b_ids(np);
  // a_count[p][x][id], b_count[p][r][id]
  std::vector<std::vector<std::map<std::uint32_t, std::uint64_t>>> a_count(
      np, std::vector<std::map<std::uint32_t, std::uint64_t>>(secrets));
  auto b_count = a_count;

  for (std::uint64_t v = 0; v < secrets; ++v) {
    const BitVector secret = BitVector::from_index(v, nn);
    for (std::uint64_t t = 0; t < tapes; ++t) {
      TapeSource xt(t, tape_len);
      ProtocolResult rx = run_protocol(secret, zeros, xt, config);
      TapeSource rt(t << share_bits, tape_len);
      ProtocolResult rr = run_protocol(zeros, secret, rt, config);
      for (std::size_t p = 0; p < np; ++p) {
        ++a_count[p][v][a_ids[p].id(classical_view_key(rx, parties[p], ViewPart::kXShares, reveal))];
        ++b_count[p][v][b_ids[p].id(classical_view_key(rr, parties[p], ViewPart::kRShares, reveal))];
      }
    }
  }

  std::vector<std::vector<Bit>> outcome(secrets, std::vector<Bit>(secrets));
  for (std::uint64_t x = 0; x < secrets; ++x) {
    for (std::uint64_t r = 0; r < secrets; ++r) {
      TapeSource none(0, tape_len);
      outcome[x][r] = run_protocol(BitVector::from_index(x, nn), BitVector::from_index(r, nn), none, config)
                          .server_outcome;
    }
  }

  const double total = std::ldexp(1.0, 2 * n + tape_len);
  std::vector<LeakageReport> reports;
  for (std::size_t p = 0; p < np; ++p) {
    const PartyId& party = parties[p];
    std::unordered_map<std::uint64_t, std::uint64_t> joint, view, honest;
    for (std::uint64_t x = 0; x < secrets; ++x) {
      // Q[(b, o)] summed over paddings for this input vector.
      std::map<std::pair<std::uint32_t, Bit>, std::uint64_t> q;
      for (std::uint64_t r = 0; r < secrets; ++r) {
        for (const auto& [b, c] : b_count[p][r]) q[{b, outcome[x][r]}] += c;
      }
      const std::uint64_t h = honest_inputs(x, party);
      for (const auto& [a, ca] : a_count[p][x]) {
        for (const auto& [bo, cq] : q) {
          const std::uint64_t w = ca * cq;
          const std::uint64_t vkey =
              (static_cast<std::uint64_t>(a) << 33) | (static_cast<std::uint64_t>(bo.first) << 1) | bo.second;
          // 4 bits suffice for the honest inputs at n <= 4.
          joint[(vkey << 4) | h] += w;
          view[vkey] += w;
          honest[h] += w;
        }
      }
    }
    const double mi = entropy_bits(values_of(honest), total) + entropy_bits(values_of(view), total) -
                      entropy_bits(values_of(joint), total);
    reports.push_back({party, std::max(0.0, mi), static_cast<std::uint64_t>(total)});
  }
  return reports;
}

LeakageReport transcript_leakage(int n, const PartyId& party, const LeakageOptions& options) {
  if (!party.is_server() && (party.index < 1 || party.index > n)) {
    throw std::invalid_argument("transcript_leakage: client index out of range");
  }
  auto reports = transcript_leakage_all(n, options);
  return party.is_server() ? reports[0] : reports[static_cast<std::size_t>(party.index)];
}

}  // namespace qmpc
