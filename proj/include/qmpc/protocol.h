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

#ifndef QMPC_PROTOCOL_H
#define QMPC_PROTOCOL_H

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qmpc/bits.h"
#include "qmpc/qubit.h"
#include "qmpc/random_source.h"

namespace qmpc {

struct PartyId {
  enum class Role { kServer, kClient };

  Role role = Role::kServer;
  int index = 0;  // 1..n for clients, 0 for the server

  static PartyId server() { return {Role::kServer, 0}; }
  static PartyId client(int index) { return {Role::kClient, index}; }

  bool is_server() const { return role == Role::kServer; }
  /// "server" or "C<index>"
  std::string str() const;
  bool operator==(const PartyId&) const = default;
};

enum class ShareKind { kX, kR };

struct QubitMsg {
  QubitState state;
  PartyId from;
  PartyId to;
  bool operator==(const QubitMsg&) const = default;
};

struct ShareMsg {
  ShareKind kind;
  Bit value;
  PartyId from;
  PartyId to;
  bool operator==(const ShareMsg&) const = default;
};

/// A client's aggregate tilde_x, sent to the final rotator.
struct TildeXMsg {
  Bit value;
  PartyId from;
  PartyId to;
  bool operator==(const TildeXMsg&) const = default;
};

/// The server's announcement of the measured bit, broadcast to every client.
struct OutcomeMsg {
  Bit value;
  bool operator==(const OutcomeMsg&) const = default;
};

/// A client's tilde_r on the client broadcast channel (the server is not on it).
struct TildeRMsg {
  Bit value;
  PartyId from;
  bool operator==(const TildeRMsg&) const = default;
};

using Message = std::variant<QubitMsg, ShareMsg, TildeXMsg, OutcomeMsg, TildeRMsg>;

/// True iff `party` sent or received `msg`, or `msg` was broadcast on a
/// channel `party` listens to.
bool visible_to(const Message& msg, const PartyId& party);

class Transcript {
 public:
  void append(Message msg) { messages_.push_back(std::move(msg)); }

  const std::vector<Message>& messages() const { return messages_; }
  std::size_t size() const { return messages_.size(); }
  std::vector<Message> view(const PartyId& party) const;

  template <typename T>
  std::size_t count() const {
    std::size_t c = 0;
    for (const auto& m : messages_) c += std::holds_alternative<T>(m);
    return c;
  }

  /// Decoded output of each client, index 0 is C1. Empty until the reveal.
  std::vector<Bit> decoded;

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<Message> messages_;
};

struct ClientState {
  int index = 0;  // 1..n
  Bit x = 0;
  Bit r = 0;
  bool is_final_rotator = false;

  /// out_shares_*[i] is the share destined for client i+1 (own slot kept locally).
  std::vector<Bit> out_shares_x;
  std::vector<Bit> out_shares_r;
  /// in_shares_*[j] is the share received from client j+1.
  std::vector<Bit> in_shares_x;
  std::vector<Bit> in_shares_r;
  int received_x = 0;
  int received_r = 0;

  std::optional<Bit> tilde_x;
  std::optional<Bit> tilde_r;

  /// Final rotator only: tilde_x of every client, then their XOR.
  std::vector<std::optional<Bit>> collected_tilde_x;
  std::optional<Bit> gxor;

  bool applied_gates = false;
  std::vector<std::optional<Bit>> revealed_tilde_r;
  std::optional<Bit> decoded;
};

struct ServerState {
  std::optional<Bit> announced_outcome;
};

struct ProtocolConfig {
  /// Client applying the final (U^dagger)^gxor. Unset means C_n.
  std::optional<int> final_rotator;
};

struct ProtocolResult {
  Bit server_outcome = 0;
  /// Output of C1; every client decodes the same bit.
  Bit decoded = 0;
  QubitState pre_measurement = QubitState::zero();
  Transcript transcript;
  std::vector<ClientState> clients;
};

/// U = R_y(pi/2)
const Unitary2& gate_u();
/// V = R_y(pi)
const Unitary2& gate_v();

/// XOR shares of `secret`: the first n-1 are fresh bits, the last corrects the parity.
std::vector<Bit> share_split(Bit secret, int n, RandomSource& rng);

/// Fresh client states for the given inputs and paddings. Throws
/// std::invalid_argument on length mismatch, n < 2 or a rotator outside 1..n.
std::vector<ClientState> make_clients(const BitVector& inputs, const BitVector& paddings,
                                      const ProtocolConfig& config = {});

/// Runs the classical share routine to completion. Every client ends with
/// tilde_x and tilde_r, and the designated final rotator with gxor. Share
/// bits are drawn in a fixed order: all x-sharings by client index, then all
/// r-sharings. Messages are appended to `transcript` when given.
std::vector<ClientState> run_xor_routine(std::vector<ClientState> clients, RandomSource& rng,
                                         Transcript* transcript = nullptr);

/// V^r U^x s
QubitState client_apply(const QubitState& s, Bit x, Bit r);
/// (U^dagger)^gxor s
QubitState final_rotation(const QubitState& s, Bit gxor);

/// (U^dagger)^{parity} U^{x_n} ... U^{x_1} |0>
QubitState run_without_padding(const BitVector& inputs);

/// The padded chain applied directly to |0>, without parties or messages.
QubitState padded_chain_state(const BitVector& inputs, const BitVector& paddings);

/// Full run: share routine, qubit chain, measurement, announcement, reveal.
ProtocolResult run_protocol(const BitVector& inputs, const BitVector& paddings, RandomSource& rng,
                            const ProtocolConfig& config = {});

Bit decode(Bit server_outcome, std::span<const Bit> tilde_rs);

}  // namespace qmpc

#endif  // QMPC_PROTOCOL_H
