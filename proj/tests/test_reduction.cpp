#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <seqgame/match.hpp>
#include <seqgame/reduction.hpp>
#include <seqgame/strategies.hpp>
#include <seqgame/trace.hpp>

using namespace seqgame;

namespace {

const MachineParams kAcc{8, 256, 12};

Trace blind_vs(const std::string& alice_kind, uint64_t a, uint64_t rounds) {
  uint64_t b = (uint64_t(1) << a) - 1;
  GameConfig config{a, b, rounds, 0};
  auto alice = alice_kind == "inductive" ? alice_inductive(a)
                                         : make_adversary(alice_kind, Side::Alice);
  auto bob = blind_bob_strategy(a, kAcc);
  return run_match(config, *alice, *bob, rounds);
}

GameState replay(const Trace& trace) {
  GameState state = new_game(trace.config);
  for (const auto& rec : trace.records) {
    const auto& live = rec.side == Side::Alice ? rec.live_alice : rec.live_bob;
    for (size_t l : live) state.declare_live(rec.side, l);
    state.apply_batch({rec.side, rec.appends});
  }
  return state;
}

}  // namespace

TEST_CASE("blind bob declares exactly the budgeted-total labels on turn one") {
  // of the first 7 programs, only PUSH0, INPUT and PUSH0 PUSH0 halt at all:
  // the four other single instructions fault on an empty stack
  Trace t = blind_vs("skipper", 3, 4);
  REQUIRE(t.records.size() == 8);
  const TraceRecord& first_bob = t.records[1];
  REQUIRE(first_bob.side == Side::Bob);
  CHECK(first_bob.live_bob == std::vector<size_t>{0, 5, 6});
  CHECK(t.records.back().live_bob == std::vector<size_t>{0, 5, 6});

  GameState state = replay(t);
  for (size_t j : {1, 2, 3, 4}) {
    CHECK_FALSE(state.seq(Side::Bob, j).live);
    CHECK(state.seq(Side::Bob, j).terms.empty());
  }
}

TEST_CASE("blind bob sequences agree with the program value tables") {
  Trace t = blind_vs("skipper", 3, 12);
  GameState state = replay(t);
  auto programs = enumerate_programs(kAcc.L);
  for (size_t j = 0; j < 7; ++j) {
    const Sequence& s = state.seq(Side::Bob, j);
    if (budgeted_totality(programs[j], kAcc)) {
      REQUIRE(s.terms.size() >= kAcc.K + 2);
      for (size_t x = 0; x < s.terms.size(); ++x) {
        auto res = run_program(programs[j], x, kAcc.S);
        REQUIRE(res.halted());
        CHECK(s.terms[x] == res.value);
      }
    } else {
      CHECK(s.terms.empty());
    }
  }
}

TEST_CASE("blind bob ignores the opposing strategy") {
  Trace quiet = blind_vs("skipper", 2, 30);
  Trace busy = blind_vs("inductive", 2, 30);
  REQUIRE(quiet.records.size() == busy.records.size());
  for (size_t i = 1; i < quiet.records.size(); i += 2) {
    const TraceRecord& q = quiet.records[i];
    const TraceRecord& u = busy.records[i];
    REQUIRE(q.side == Side::Bob);
    REQUIRE(u.side == Side::Bob);
    CHECK(q.appends == u.appends);
    CHECK(q.live_bob == u.live_bob);
  }
}

TEST_CASE("successor-of-input label converges to 1,2,3,...") {
  // INPUT INC sits at index 37: singles 0..5, then the 36 plain pairs in
  // lexicographic order, INPUT-first block starting at 36
  auto programs = enumerate_programs(kAcc.L);
  REQUIRE(program_to_text(programs[37]) == "INPUT INC");

  Trace t = blind_vs("skipper", 6, 14);
  GameState state = replay(t);
  const Sequence& s = state.seq(Side::Bob, 37);
  CHECK(s.live);
  REQUIRE(s.terms.size() >= 12);
  for (size_t x = 0; x < s.terms.size(); ++x) CHECK(s.terms[x] == x + 1);
}

TEST_CASE("a program that halts on one input only leaves a dead partial label") {
  // INPUT JNZ(-1) halts with value 0 on input 0 and spins forever otherwise
  auto programs = enumerate_programs(kAcc.L);
  REQUIRE(program_to_text(programs[354]) == "INPUT JNZ(-1)");
  CHECK_FALSE(budgeted_totality(programs[354], kAcc));
  CHECK(run_program(programs[354], 0, kAcc.S).halted());
  CHECK(run_program(programs[354], 1, kAcc.S).status == RunStatus::OutOfBudget);

  Trace t = blind_vs("skipper", 9, 8);
  GameState state = replay(t);
  const Sequence& s = state.seq(Side::Bob, 354);
  CHECK_FALSE(s.live);
  CHECK(s.terms == std::vector<uint64_t>{0});

  // a label that faults everywhere stays empty
  CHECK(state.seq(Side::Bob, 1).terms.empty());
  CHECK_FALSE(state.seq(Side::Bob, 1).live);
}

TEST_CASE("blind bob construction and reset guard their capacity") {
  CHECK_THROWS_AS(blind_bob_strategy(12, kAcc), Error);  // 4095 > 3746 programs
  CHECK_THROWS_AS(blind_bob_strategy(40, kAcc), Error);
  try {
    blind_bob_strategy(12, kAcc);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrograms);
  }

  auto bob = blind_bob_strategy(2, kAcc);
  GameConfig wrong{2, 4, 10, 0};
  CHECK_THROWS_AS(bob->reset(wrong), Error);
  try {
    bob->reset(wrong);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapacityMismatch);
  }
  CHECK(bob->name() == "blind_bob(a=2,K=8,S=256,L=12)");
}

TEST_CASE("level-zero demo wins by copying the zero program") {
  DemoReport r = lower_bound_demo(0, 50, kAcc);
  CHECK(r.n == 0);
  CHECK(r.a == 1);
  CHECK(r.b == 1);
  CHECK(r.verdict == Verdict::AliceWinWitnessed);
  CHECK(r.count_convention == "first_b_length_lex");
  CHECK(r.length_cut_bits == 3);
  REQUIRE(r.bobs.size() == 1);
  CHECK(r.bobs[0].program == "PUSH0");
  CHECK(r.bobs[0].total);
  REQUIRE(r.bobs[0].witness.has_value());
  CHECK(r.bobs[0].witness->index == 0);
  CHECK(r.bobs[0].witness->alice_label == 0);
  REQUIRE(r.alices.size() == 1);
  CHECK(r.alices[0].index_bits == 0);
  CHECK_FALSE(r.alices[0].context.empty());
  CHECK(r.trace.records.size() == 100);

  // equality witness: the copied value matches the source at the index
  GameState state = replay(r.trace);
  CHECK(state.seq(Side::Alice, 0).terms[0] == state.seq(Side::Bob, 0).terms[0]);
}

TEST_CASE("level-one demo witnesses every budgeted-total short program") {
  DemoReport r = lower_bound_demo(1, 400, kAcc);
  CHECK(r.a == 2);
  CHECK(r.b == 3);
  CHECK(r.verdict == Verdict::AliceWinWitnessed);
  CHECK(r.length_cut_bits == 3);
  REQUIRE(r.bobs.size() == 3);
  CHECK(r.bobs[0].program == "PUSH0");
  CHECK(r.bobs[1].program == "INC");
  CHECK(r.bobs[2].program == "ADD");
  CHECK(r.bobs[0].total);
  CHECK_FALSE(r.bobs[1].total);
  CHECK_FALSE(r.bobs[2].total);
  CHECK(r.bobs[0].witness.has_value());
  CHECK_FALSE(r.bobs[1].witness.has_value());
  CHECK_FALSE(r.bobs[2].witness.has_value());
  for (const auto& rec : r.alices) {
    CHECK(rec.index_bits == 1);
    CHECK(rec.context == r.alices[0].context);
  }
}

TEST_CASE("a one-round demo is reported inconclusive") {
  CHECK_THROWS_AS(lower_bound_demo(1, 1, kAcc), Error);
  try {
    lower_bound_demo(1, 1, kAcc);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DemoInconclusive);
    CHECK(std::string(e.what()).find("unwitnessed") != std::string::npos);
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}

TEST_CASE("demo rejects levels beyond the enumeration") {
  CHECK_THROWS_AS(lower_bound_demo(4, 10, kAcc), Error);  // 2^16 - 1 programs wanted
  try {
    lower_bound_demo(4, 10, kAcc);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrograms);
  }
  CHECK_THROWS_AS(lower_bound_demo(9, 10, kAcc), Error);
}

TEST_CASE("demo runs are deterministic") {
  DemoReport r1 = lower_bound_demo(1, 120, kAcc);
  DemoReport r2 = lower_bound_demo(1, 120, kAcc);
  CHECK(trace_to_jsonl(r1.trace) == trace_to_jsonl(r2.trace));
}
