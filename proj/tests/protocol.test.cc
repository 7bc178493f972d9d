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

#include <gtest/gtest.h>

#include <numbers>

#include "qmpc/oracle.h"

using namespace qmpc;

namespace {

bool same_up_to_phase(const QubitState& a, const QubitState& b) { return global_phase_equiv(a, b, kChainTol); }

std::vector<ClientState> clients_for(const BitVector& x, const BitVector& r) { return make_clients(x, r); }

}  // namespace

TEST(ShareSplit, SingleShareIsTheSecret) {
  SeededSource rng(1);
  EXPECT_EQ(share_split(0, 1, rng), std::vector<Bit>{0});
  EXPECT_EQ(share_split(1, 1, rng), std::vector<Bit>{1});
}

TEST(ShareSplit, SharesXorToSecret) {
  SeededSource rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    for (Bit secret : {Bit{0}, Bit{1}}) {
      auto shares = share_split(secret, 3, rng);
      ASSERT_EQ(shares.size(), 3u);
      EXPECT_EQ(shares[0] ^ shares[1] ^ shares[2], secret);
    }
  }
}

TEST(ShareSplit, EverySingleShareIsBalancedOverAllDraws) {
  // secret = 1, n = 3: four equally likely draw patterns.
  std::array<int, 3> zeros{};
  for (std::uint64_t t = 0; t < 4; ++t) {
    TapeSource tape(t, 2);
    auto shares = share_split(1, 3, tape);
    for (int i = 0; i < 3; ++i) zeros[i] += shares[i] == 0;
  }
  for (int z : zeros) EXPECT_EQ(z, 2);
}

TEST(ShareSplit, RejectsZeroParties) {
  SeededSource rng(1);
  EXPECT_THROW(share_split(1, 0, rng), std::invalid_argument);
}

TEST(XorRoutine, GlobalXorIsParity) {
  for (auto x : {BitVector{1, 0}, BitVector{1, 1, 0, 1}}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SeededSource rng(seed);
      auto clients = run_xor_routine(clients_for(x, BitVector::from_index(0, x.size())), rng);
      ASSERT_TRUE(clients.back().gxor.has_value());
      EXPECT_EQ(*clients.back().gxor, 1);
    }
  }
}

TEST(XorRoutine, ExhaustiveThreeClients) {
  // 3 clients x 2 kinds x 2 free share bits = 12 random bits.
  for (std::uint64_t v = 0; v < 8; ++v) {
    BitVector x = BitVector::from_index(v, 3);
    for (std::uint64_t t = 0; t < (1U << 12); ++t) {
      TapeSource tape(t, 12);
      auto clients = run_xor_routine(clients_for(x, BitVector{0, 1, 1}), tape);
      ASSERT_EQ(*clients[2].gxor, x.parity());
      for (const auto& c : clients) {
        Bit sx = 0, sr = 0, tx = 0, tr = 0;
        for (int i = 0; i < 3; ++i) {
          sx ^= c.out_shares_x[i];
          sr ^= c.out_shares_r[i];
          tx ^= c.in_shares_x[i];
          tr ^= c.in_shares_r[i];
        }
        ASSERT_EQ(sx, c.x);
        ASSERT_EQ(sr, c.r);
        ASSERT_EQ(*c.tilde_x, tx);
        ASSERT_EQ(*c.tilde_r, tr);
      }
      ASSERT_EQ(tape.consumed(), 12);
    }
  }
}

TEST(XorRoutine, RejectsSingleClient) {
  SeededSource rng(1);
  std::vector<ClientState> one(1);
  one[0].index = 1;
  one[0].is_final_rotator = true;
  EXPECT_THROW(run_xor_routine(one, rng), std::invalid_argument);
}

TEST(XorRoutine, AppendsShareTraffic) {
  SeededSource rng(3);
  Transcript t;
  run_xor_routine(clients_for(BitVector{1, 0, 1, 1}, BitVector{0, 0, 1, 0}), rng, &t);
  EXPECT_EQ(t.count<ShareMsg>(), 2u * 4 * 3);
  EXPECT_EQ(t.count<TildeXMsg>(), 3u);
}

TEST(ClientApply, Examples) {
  EXPECT_TRUE(same_up_to_phase(client_apply(QubitState::zero(), 0, 0), QubitState::zero()));
  EXPECT_TRUE(same_up_to_phase(client_apply(QubitState::zero(), 1, 0), QubitState::plus()));
  EXPECT_TRUE(same_up_to_phase(client_apply(QubitState::zero(), 0, 1), QubitState::one()));
}

TEST(FinalRotation, Examples) {
  QubitState s = QubitState::plus();
  EXPECT_EQ(final_rotation(s, 0), s);
  QubitState u0 = apply(gate_u(), QubitState::zero());
  EXPECT_TRUE(same_up_to_phase(final_rotation(u0, 1), QubitState::zero()));
  QubitState vu0 = apply(gate_v() * gate_u(), QubitState::zero());
  EXPECT_TRUE(same_up_to_phase(final_rotation(vu0, 1), QubitState::one()));
}

TEST(RunWithoutPadding, Examples) {
  EXPECT_TRUE(same_up_to_phase(run_without_padding({0, 0}), QubitState::zero()));
  EXPECT_TRUE(same_up_to_phase(run_without_padding({1, 1}), QubitState::one()));
  EXPECT_TRUE(same_up_to_phase(run_without_padding({1, 0}), QubitState::zero()));
}

TEST(RunWithoutPadding, MatchesOracleExhaustively) {
  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      BitVector x = BitVector::from_index(v, static_cast<std::size_t>(n));
      QubitState expected = pairwise_and(x) ? QubitState::one() : QubitState::zero();
      ASSERT_TRUE(same_up_to_phase(run_without_padding(x), expected)) << x.str();
    }
  }
}

TEST(RunProtocol, Examples) {
  SeededSource rng(1);
  auto a = run_protocol({1, 1}, {0, 0}, rng);
  EXPECT_EQ(a.server_outcome, 1);
  EXPECT_EQ(a.decoded, 1);
  auto b = run_protocol({1, 1}, {1, 0}, rng);
  EXPECT_EQ(b.server_outcome, 0);
  EXPECT_EQ(b.decoded, 1);
  for (std::uint64_t p = 0; p < 16; ++p) {
    BitVector pad = BitVector::from_index(p, 4);
    auto c = run_protocol({0, 0, 0, 0}, pad, rng);
    EXPECT_EQ(c.server_outcome, pad.parity());
    EXPECT_EQ(c.decoded, 0);
  }
}

TEST(RunProtocol, RejectsLengthMismatch) {
  SeededSource rng(1);
  EXPECT_THROW(run_protocol({1, 1, 1}, {1, 1}, rng), std::invalid_argument);
  EXPECT_THROW(run_protocol({1}, {1}, rng), std::invalid_argument);
  EXPECT_THROW(run_protocol({1, 1}, {1, 1}, rng, ProtocolConfig{3}), std::invalid_argument);
}

TEST(Decode, Examples) {
  EXPECT_EQ(decode(0, {}), 0);
  std::vector<Bit> a{1, 0, 0}, b{1, 1, 1, 1};
  EXPECT_EQ(decode(1, a), 0);
  EXPECT_EQ(decode(1, b), 1);
}

TEST(ProtocolProperties, CorrectForAllInputsAndPaddings) {
  SeededSource rng(99);
  for (int n = 2; n <= 8; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < count; ++v) {
      BitVector x = BitVector::from_index(v, static_cast<std::size_t>(n));
      const Bit f = pairwise_and(x);
      const int pads = n <= 5 ? static_cast<int>(count) : 64;
      for (int k = 0; k < pads; ++k) {
        BitVector pad = n <= 5 ? BitVector::from_index(static_cast<std::uint64_t>(k), x.size())
                               : BitVector::from_index(rng.engine()() & (count - 1), x.size());
        auto result = run_protocol(x, pad, rng);
        ASSERT_EQ(result.decoded, f) << x.str() << "/" << pad.str();
        ASSERT_EQ(result.server_outcome, pad.parity() ^ f);
        for (Bit d : result.transcript.decoded) ASSERT_EQ(d, f);
        // Pre-measurement state is a computational basis state.
        const double p0 = result.pre_measurement.prob0();
        ASSERT_TRUE(std::abs(p0) <= kExactTol || std::abs(p0 - 1.0) <= kExactTol) << p0;
      }
    }
  }
}

TEST(ProtocolProperties, TranscriptShape) {
  for (int n = 2; n <= 6; ++n) {
    SeededSource rng(static_cast<std::uint64_t>(n));
    auto result = run_protocol(BitVector::from_index(0b101101, static_cast<std::size_t>(n)),
                               BitVector::from_index(0b011, static_cast<std::size_t>(n)), rng);
    const auto& t = result.transcript;
    const std::size_t nn = static_cast<std::size_t>(n);
    EXPECT_EQ(t.count<QubitMsg>(), nn + 1);
    std::size_t sx = 0, sr = 0;
    for (const auto& m : t.messages()) {
      if (auto* s = std::get_if<ShareMsg>(&m)) (s->kind == ShareKind::kX ? sx : sr) += 1;
    }
    EXPECT_EQ(sx, nn * (nn - 1));
    EXPECT_EQ(sr, nn * (nn - 1));
    EXPECT_EQ(t.count<TildeXMsg>(), nn - 1);
    EXPECT_EQ(t.count<OutcomeMsg>(), 1u);
    EXPECT_EQ(t.count<TildeRMsg>(), nn);
    EXPECT_EQ(t.size(), (nn + 1) + 2 * nn * (nn - 1) + (nn - 1) + 1 + nn);
  }
}

TEST(ProtocolProperties, RevealFollowsAnnouncement) {
  SeededSource rng(4);
  auto result = run_protocol({1, 0, 1}, {1, 1, 0}, rng);
  const auto& msgs = result.transcript.messages();
  std::size_t outcome_at = msgs.size(), first_reveal = msgs.size(), last_qubit = 0;
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    if (std::holds_alternative<OutcomeMsg>(msgs[i])) outcome_at = i;
    if (std::holds_alternative<TildeRMsg>(msgs[i]) && first_reveal == msgs.size()) first_reveal = i;
    if (std::holds_alternative<QubitMsg>(msgs[i])) last_qubit = i;
  }
  EXPECT_LT(last_qubit, outcome_at);
  EXPECT_LT(outcome_at, first_reveal);
}

TEST(ProtocolProperties, QubitRouteThroughChain) {
  SeededSource rng(8);
  auto result = run_protocol({1, 1, 0, 1}, {0, 1, 0, 0}, rng);
  std::vector<std::string> hops;
  for (const auto& m : result.transcript.messages()) {
    if (auto* q = std::get_if<QubitMsg>(&m)) hops.push_back(q->from.str() + ">" + q->to.str());
  }
  EXPECT_EQ(hops, (std::vector<std::string>{"server>C1", "C1>C2", "C2>C3", "C3>C4", "C4>server"}));
}

TEST(ProtocolProperties, PaddingDoesNotChangeDecodedBit) {
  SeededSource rng(5);
  for (std::uint64_t v = 0; v < 32; ++v) {
    BitVector x = BitVector::from_index(v, 5);
    std::optional<Bit> first;
    for (std::uint64_t p = 0; p < 32; ++p) {
      Bit d = run_protocol(x, BitVector::from_index(p, 5), rng).decoded;
      if (!first) first = d;
      ASSERT_EQ(d, *first);
    }
  }
}

TEST(ProtocolProperties, ReplayDeterminism) {
  for (std::uint64_t seed : {0ULL, 1ULL, 0xdeadbeefULL}) {
    SeededSource a(seed), b(seed);
    auto ra = run_protocol({1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, a);
    auto rb = run_protocol({1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, b);
    EXPECT_EQ(ra.transcript, rb.transcript);
  }
}

TEST(ProtocolProperties, OtherFinalRotator) {
  // The qubit returns to the chosen rotator after C_n: one extra hop.
  for (int rot = 1; rot <= 4; ++rot) {
    SeededSource rng(6);
    for (std::uint64_t v = 0; v < 16; ++v) {
      BitVector x = BitVector::from_index(v, 4);
      auto result = run_protocol(x, {1, 0, 0, 1}, rng, ProtocolConfig{rot});
      ASSERT_EQ(result.decoded, pairwise_and(x));
      ASSERT_EQ(result.transcript.count<QubitMsg>(), rot == 4 ? 5u : 6u);
      ASSERT_TRUE(result.clients[rot - 1].gxor.has_value());
      for (const auto& m : result.transcript.messages()) {
        if (auto* t = std::get_if<TildeXMsg>(&m)) ASSERT_EQ(t->to, PartyId::client(rot));
      }
    }
  }
}

TEST(Transcript, ViewsFollowChannels) {
  SeededSource rng(2);
  auto result = run_protocol({1, 1, 0}, {0, 1, 1}, rng);
  const auto server_view = result.transcript.view(PartyId::server());
  // Server: sends the first qubit, receives the last, announces the outcome.
  EXPECT_EQ(server_view.size(), 3u);
  for (const auto& m : server_view) EXPECT_FALSE(std::holds_alternative<TildeRMsg>(m));
  for (const auto& m : server_view) EXPECT_FALSE(std::holds_alternative<ShareMsg>(m));

  const auto c2 = result.transcript.view(PartyId::client(2));
  std::size_t shares = 0, reveals = 0, outcomes = 0;
  for (const auto& m : c2) {
    if (auto* s = std::get_if<ShareMsg>(&m)) {
      ++shares;
      EXPECT_TRUE(s->from == PartyId::client(2) || s->to == PartyId::client(2));
    }
    reveals += std::holds_alternative<TildeRMsg>(m);
    outcomes += std::holds_alternative<OutcomeMsg>(m);
  }
  EXPECT_EQ(shares, 2u * 2 * 2);  // two kinds, two peers, both directions
  EXPECT_EQ(reveals, 3u);
  EXPECT_EQ(outcomes, 1u);
}
