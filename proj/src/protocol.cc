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

#include "qmpc/protocol.h"

#include <deque>
#include <numbers>
#include <stdexcept>

namespace qmpc {

std::string PartyId::str() const {
  return is_server() ? std::string("server") : "C" + std::to_string(index);
}

bool visible_to(const Message& msg, const PartyId& party) {
  return std::visit(
      [&](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OutcomeMsg>) {
          return true;
        } else if constexpr (std::is_same_v<T, TildeRMsg>) {
          return !party.is_server();
        } else {
          return m.from == party || m.to == party;
        }
      },
      msg);
}

std::vector<Message> Transcript::view(const PartyId& party) const {
  std::vector<Message> out;
  for (const auto& m : messages_) {
    if (visible_to(m, party)) out.push_back(m);
  }
  return out;
}

const Unitary2& gate_u() {
  static const Unitary2 u = ry(std::numbers::pi / 2);
  return u;
}

const Unitary2& gate_v() {
  static const Unitary2 v = ry(std::numbers::pi);
  return v;
}

std::vector<Bit> share_split(Bit secret, int n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("share_split: n must be at least 1");
  if (secret > 1) throw std::invalid_argument("share_split: secret is not a bit");
  std::vector<Bit> shares(static_cast<std::size_t>(n));
  Bit acc = 0;
  for (int i = 0; i + 1 < n; ++i) {
    shares[i] = rng.next_bit();
    acc ^= shares[i];
  }
  shares[n - 1] = secret ^ acc;
  return shares;
}

std::vector<ClientState> make_clients(const BitVector& inputs, const BitVector& paddings,
                                      const ProtocolConfig& config) {
  if (inputs.size() != paddings.size()) {
    throw std::invalid_argument("inputs and paddings differ in length");
  }
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("the protocol needs at least 2 clients");
  const int rotator = config.final_rotator.value_or(n);
  if (rotator < 1 || rotator > n) throw std::invalid_argument("final rotator must be in 1..n");

  std::vector<ClientState> clients(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    clients[i].index = i + 1;
    clients[i].x = inputs[i];
    clients[i].r = paddings[i];
    clients[i].is_final_rotator = (i + 1 == rotator);
  }
  return clients;
}

QubitState client_apply(const QubitState& s, Bit x, Bit r) {
  return apply(gate_v().pow(r) * gate_u().pow(x), s);
}

QubitState final_rotation(const QubitState& s, Bit gxor) {
  return apply(gate_u().dagger().pow(gxor), s);
}

QubitState run_without_padding(const BitVector& inputs) {
  if (inputs.size() < 2) throw std::invalid_argument("run_without_padding: n must be at least 2");
  QubitState s = QubitState::zero();
  for (std::size_t i = 0; i < inputs.size(); ++i) s = apply(gate_u().pow(inputs[i]), s);
  return final_rotation(s, inputs.parity());
}

QubitState padded_chain_state(const BitVector& inputs, const BitVector& paddings) {
  if (inputs.size() != paddings.size()) {
    throw std::invalid_argument("inputs and paddings differ in length");
  }
  QubitState s = QubitState::zero();
  for (std::size_t i = 0; i < inputs.size(); ++i) s = client_apply(s, inputs[i], paddings[i]);
  return final_rotation(s, inputs.parity());
}

Bit decode(Bit server_outcome, std::span<const Bit> tilde_rs) {
  Bit acc = server_outcome;
  for (Bit b : tilde_rs) acc ^= b;
  return acc;
}

namespace {

struct Envelope {
  Message msg;
  PartyId to;
};

/// Single-threaded event loop. Messages are logged on send and delivered in
/// FIFO order; each phase drains the queue before the next one starts.
class Engine {
 public:
  Engine(std::vector<ClientState> clients, RandomSource& rng, Transcript* transcript)
      : clients_(std::move(clients)), rng_(rng), transcript_(transcript) {
    n_ = static_cast<int>(clients_.size());
    if (n_ < 2) throw std::invalid_argument("the XOR routine needs at least 2 clients");
    int rotators = 0;
    for (int i = 0; i < n_; ++i) {
      auto& c = clients_[i];
      if (c.index != i + 1) throw std::invalid_argument("client indices must be 1..n in order");
      if (c.is_final_rotator) {
        rotator_ = c.index;
        ++rotators;
      }
      c.in_shares_x.assign(n_, 0);
      c.in_shares_r.assign(n_, 0);
      c.received_x = c.received_r = 0;
    }
    if (rotators != 1) throw std::invalid_argument("exactly one client must be the final rotator");
    client(rotator_).collected_tilde_x.assign(n_, std::nullopt);
  }

  void run_share_phase() {
    for (ShareKind kind : {ShareKind::kX, ShareKind::kR}) {
      for (auto& c : clients_) deal(c, kind);
    }
    drain();
  }

  void run_quantum_phase() {
    send(QubitMsg{QubitState::zero(), PartyId::server(), PartyId::client(1)}, PartyId::client(1));
    drain();
  }

  void run_reveal_phase() {
    for (int i = 1; i <= n_; ++i) {
      client(i).revealed_tilde_r.assign(n_, std::nullopt);
    }
    // Simultaneous broadcast: every tilde_r is committed before any is delivered.
    std::vector<TildeRMsg> round;
    for (auto& c : clients_) round.push_back(TildeRMsg{*c.tilde_r, PartyId::client(c.index)});
    for (const auto& m : round) {
      log(m);
      for (int i = 1; i <= n_; ++i) queue_.push_back({m, PartyId::client(i)});
    }
    drain();
  }

  std::vector<ClientState>& clients() { return clients_; }
  const ServerState& server() const { return server_; }
  const std::optional<QubitState>& pre_measurement() const { return pre_measurement_; }

 private:
  ClientState& client(int index) { return clients_[index - 1]; }

  void log(const Message& msg) {
    if (transcript_) transcript_->append(msg);
  }

  void send(Message msg, PartyId to) {
    log(msg);
    queue_.push_back({std::move(msg), to});
  }

  void drain() {
    while (!queue_.empty()) {
      Envelope e = std::move(queue_.front());
      queue_.pop_front();
      std::visit([&](const auto& m) { deliver(m, e.to); }, e.msg);
    }
  }

  void deal(ClientState& c, ShareKind kind) {
    const bool is_x = kind == ShareKind::kX;
    auto shares = share_split(is_x ? c.x : c.r, n_, rng_);
    (is_x ? c.out_shares_x : c.out_shares_r) = shares;
    for (int i = 1; i <= n_; ++i) {
      if (i == c.index) {
        accept_share(c, kind, c.index, shares[i - 1]);
      } else {
        send(ShareMsg{kind, shares[i - 1], PartyId::client(c.index), PartyId::client(i)},
             PartyId::client(i));
      }
    }
  }

  void accept_share(ClientState& c, ShareKind kind, int from, Bit value) {
    if (kind == ShareKind::kX) {
      c.in_shares_x[from - 1] = value;
      ++c.received_x;
    } else {
      c.in_shares_r[from - 1] = value;
      ++c.received_r;
    }
    if (c.received_x == n_ && !c.tilde_x) {
      Bit t = 0;
      for (Bit b : c.in_shares_x) t ^= b;
      c.tilde_x = t;
      if (c.is_final_rotator) {
        collect_tilde_x(c, c.index, t);
      } else {
        send(TildeXMsg{t, PartyId::client(c.index), PartyId::client(rotator_)},
             PartyId::client(rotator_));
      }
    }
    if (c.received_r == n_ && !c.tilde_r) {
      Bit t = 0;
      for (Bit b : c.in_shares_r) t ^= b;
      c.tilde_r = t;
    }
  }

  void collect_tilde_x(ClientState& rot, int from, Bit value) {
    rot.collected_tilde_x[from - 1] = value;
    for (const auto& t : rot.collected_tilde_x) {
      if (!t) return;
    }
    Bit g = 0;
    for (const auto& t : rot.collected_tilde_x) g ^= *t;
    rot.gxor = g;
  }

  void deliver(const ShareMsg& m, PartyId to) { accept_share(client(to.index), m.kind, m.from.index, m.value); }

  void deliver(const TildeXMsg& m, PartyId to) { collect_tilde_x(client(to.index), m.from.index, m.value); }

  void deliver(const QubitMsg& m, PartyId to) {
    if (to.is_server()) {
      pre_measurement_ = m.state;
      Measurement meas = measure_z(m.state, rng_.next_unit());
      server_.announced_outcome = static_cast<Bit>(meas.outcome);
      OutcomeMsg announce{*server_.announced_outcome};
      log(announce);
      for (int i = 1; i <= n_; ++i) queue_.push_back({announce, PartyId::client(i)});
      return;
    }
    ClientState& c = client(to.index);
    QubitState s = m.state;
    const bool second_visit = c.applied_gates;
    if (!second_visit) {
      s = client_apply(s, c.x, c.r);
      c.applied_gates = true;
    }
    const bool chain_done = c.index == n_ || second_visit;
    if (chain_done && c.is_final_rotator) {
      if (!c.gxor) throw std::logic_error("final rotator lacks the global XOR");
      s = final_rotation(s, *c.gxor);
      forward(c, s, PartyId::server());
    } else if (chain_done) {
      forward(c, s, PartyId::client(rotator_));
    } else {
      forward(c, s, PartyId::client(c.index + 1));
    }
  }

  void forward(const ClientState& c, const QubitState& s, PartyId to) {
    send(QubitMsg{s, PartyId::client(c.index), to}, to);
  }

  void deliver(const OutcomeMsg&, PartyId) {}

  void deliver(const TildeRMsg& m, PartyId to) {
    ClientState& c = client(to.index);
    c.revealed_tilde_r[m.from.index - 1] = m.value;
    std::vector<Bit> all;
    for (const auto& t : c.revealed_tilde_r) {
      if (!t) return;
      all.push_back(*t);
    }
    c.decoded = decode(*server_.announced_outcome, all);
  }

  std::vector<ClientState> clients_;
  RandomSource& rng_;
  Transcript* transcript_;
  int n_ = 0;
  int rotator_ = 0;
  ServerState server_;
  std::optional<QubitState> pre_measurement_;
  std::deque<Envelope> queue_;
};

}  // namespace

std::vector<ClientState> run_xor_routine(std::vector<ClientState> clients, RandomSource& rng,
                                         Transcript* transcript) {
  Engine engine(std::move(clients), rng, transcript);
  engine.run_share_phase();
  return std::move(engine.clients());
}

ProtocolResult run_protocol(const BitVector& inputs, const BitVector& paddings, RandomSource& rng,
                            const ProtocolConfig& config) {
  ProtocolResult result;
  Engine engine(make_clients(inputs, paddings, config), rng, &result.transcript);
  engine.run_share_phase();
  engine.run_quantum_phase();
  engine.run_reveal_phase();

  result.server_outcome = *engine.server().announced_outcome;
  result.pre_measurement = *engine.pre_measurement();
  result.clients = std::move(engine.clients());
  for (const auto& c : result.clients) {
    if (!c.decoded) throw std::logic_error("client did not decode the output");
    result.transcript.decoded.push_back(*c.decoded);
  }
  result.decoded = result.transcript.decoded.front();
  return result;
}

}  // namespace qmpc
