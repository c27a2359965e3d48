#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>

#include "seqgame/match.hpp"
#include "seqgame/strategies.hpp"
#include "seqgame/trace.hpp"

using namespace seqgame;

namespace {

GameConfig cfg(uint64_t a, uint64_t b, uint64_t seed = 0) {
  return GameConfig{a, b, 100000, seed};
}

bool has_violation(const VerifyReport& report, const std::string& needle) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const TraceViolation& v) {
                       return v.message.find(needle) != std::string::npos;
                     });
}

std::unique_ptr<Strategy> pick_alice(const std::string& kind, uint64_t seed) {
  if (kind == "inductive") return alice_inductive(2);
  AdversaryParams p;
  p.seed = seed;
  return make_adversary(kind, Side::Alice, p);
}

std::unique_ptr<Strategy> pick_bob(const std::string& kind, uint64_t seed) {
  if (kind == "powerset") return bob_powerset(2);
  AdversaryParams p;
  p.seed = seed;
  return make_adversary(kind, Side::Bob, p);
}

// a small legal hand-built trace: alice appends once then goes quiet
Trace quiet_alice_trace(uint64_t alice_turns) {
  Trace trace;
  trace.config = cfg(1, 1);
  trace.rounds = alice_turns;
  trace.alice_strategy = "handmade";
  trace.bob_strategy = "skipper";
  for (uint64_t k = 1; k <= alice_turns; ++k) {
    TraceRecord alice;
    alice.turn = 2 * k - 1;
    alice.side = Side::Alice;
    alice.live_alice = {0};
    if (k == 1) alice.appends = {{0, 1}};
    alice.verdict = Verdict::AliceWinWitnessed;
    trace.records.push_back(alice);
    TraceRecord bob;
    bob.turn = 2 * k;
    bob.side = Side::Bob;
    bob.live_alice = {0};
    bob.verdict = Verdict::AliceWinWitnessed;
    trace.records.push_back(bob);
  }
  return trace;
}

}  // namespace

TEST_CASE("a double-skip match serializes to six empty batches") {
  auto alice = make_adversary("skipper", Side::Alice);
  auto bob = make_adversary("skipper", Side::Bob);
  Trace trace = run_match(cfg(1, 1), *alice, *bob, 3);
  REQUIRE(trace.records.size() == 6);
  for (const TraceRecord& r : trace.records) {
    CHECK(r.appends.empty());
    CHECK(r.live_alice.empty());
    CHECK(r.live_bob.empty());
    CHECK(r.verdict == Verdict::AliceWinWitnessed);
  }
  std::string text = trace_to_jsonl(trace);
  CHECK(text.find("\"alice_strategy\":\"skipper\"") != std::string::npos);
  CHECK(text.find("\"format_version\":1") != std::string::npos);
  CHECK(verify_trace(trace).ok());
}

TEST_CASE("serialization round-trips byte for byte") {
  std::vector<std::pair<std::string, std::string>> pairings = {
      {"inductive", "random_grower"},
      {"random_grower", "powerset"},
      {"copycat", "trigger_baiter"},
      {"burst", "burst"},
  };
  for (const auto& [ak, bk] : pairings) {
    GameConfig config = cfg(2, 4, 42);
    auto alice = pick_alice(ak, 3);
    auto bob = pick_bob(bk, 4);
    Trace trace = run_match(config, *alice, *bob, 40);
    std::string once = trace_to_jsonl(trace);
    Trace back = trace_from_jsonl(once);
    std::string twice = trace_to_jsonl(back);
    CHECK(once == twice);
    CHECK(back.records.size() == trace.records.size());
    CHECK(back.alice_strategy == trace.alice_strategy);
  }
}

TEST_CASE("trace files round-trip through disk") {
  auto alice = pick_alice("inductive", 0);
  auto bob = pick_bob("random_grower", 9);
  Trace trace = run_match(cfg(2, 3, 9), *alice, *bob, 25);
  std::string path = "test_trace_io_roundtrip.jsonl";
  write_trace_file(trace, path);
  Trace back = read_trace_file(path);
  CHECK(trace_to_jsonl(back) == trace_to_jsonl(trace));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_trace_file("no_such_dir/absent.jsonl"), Error);
}

TEST_CASE("every strategy pairing replays with zero violations") {
  std::vector<std::string> alices = {"inductive", "copycat", "random_grower", "burst",
                                     "skipper"};
  std::vector<std::string> bobs = {"powerset", "random_grower", "burst", "trigger_baiter",
                                   "skipper"};
  for (const std::string& ak : alices)
    for (const std::string& bk : bobs)
      for (uint64_t seed : {1, 2, 3, 4}) {
        GameConfig config = cfg(2, 4, seed);
        auto alice = pick_alice(ak, seed);
        auto bob = pick_bob(bk, seed + 100);
        Trace trace = run_match(config, *alice, *bob, 80);
        VerifyReport report = verify_trace(trace);
        INFO(ak << " vs " << bk << " seed " << seed);
        CHECK(report.ok());
      }
}

TEST_CASE("replay determinism holds across one hundred seeds") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GameConfig config = cfg(2, 3, seed);
    AdversaryParams p;
    p.seed = seed;
    auto alice = alice_inductive(2);
    auto bob = make_adversary("random_grower", Side::Bob, p);
    Trace trace = run_match(config, *alice, *bob, 60);
    VerifyReport report = verify_trace(trace);
    INFO("seed " << seed);
    CHECK(report.ok());
  }
}

TEST_CASE("observer sees every replayed turn in order") {
  struct Counter final : ReplayObserver {
    uint64_t calls = 0;
    bool ordered = true;
    void on_turn(const GameState& state, const TraceRecord& record) override {
      ++calls;
      ordered = ordered && record.turn == calls && state.turn() == record.turn;
    }
  };
  auto alice = pick_alice("random_grower", 1);
  auto bob = pick_bob("powerset", 0);
  Trace trace = run_match(cfg(2, 4, 5), *alice, *bob, 30);
  Counter counter;
  verify_trace(trace, &counter);
  CHECK(counter.calls == 60);
  CHECK(counter.ordered);
}

TEST_CASE("a tampered term is caught by the append-only check") {
  auto alice = pick_alice("inductive", 0);
  auto bob = pick_bob("random_grower", 7);
  Trace trace = run_match(cfg(2, 3, 7), *alice, *bob, 30);
  REQUIRE(verify_trace(trace).ok());

  // claim an append landed on an index far from the real frontier
  for (TraceRecord& r : trace.records) {
    if (r.turn < 10 || r.appends.empty()) continue;
    r.appends[0].at = 999999;
    break;
  }
  VerifyReport report = verify_trace(trace);
  CHECK(!report.ok());
  CHECK(has_violation(report, "append-only broken"));
}

TEST_CASE("faithful at annotations pass even within one batch") {
  Trace trace = quiet_alice_trace(2);
  trace.records[0].appends = {{0, 1, 0}, {0, 2, 1}};
  trace.records[2].appends = {{0, 0, 2}};
  CHECK(verify_trace(trace).ok());
  trace.records[2].appends = {{0, 0, 1}};
  CHECK(has_violation(verify_trace(trace), "append-only broken"));
}

TEST_CASE("a revoked liveness declaration is caught") {
  auto alice = pick_alice("random_grower", 2);
  auto bob = pick_bob("random_grower", 3);
  Trace trace = run_match(cfg(2, 4, 3), *alice, *bob, 20);
  REQUIRE(verify_trace(trace).ok());
  for (size_t i = trace.records.size(); i-- > 0;) {
    TraceRecord& r = trace.records[i];
    if (r.side == Side::Bob && !r.live_bob.empty()) {
      r.live_bob.erase(r.live_bob.begin());
      break;
    }
  }
  VerifyReport report = verify_trace(trace);
  CHECK(has_violation(report, "liveness not monotone (bob label"));
}

TEST_CASE("a liveness edit on the idle side is caught") {
  Trace trace = quiet_alice_trace(2);
  trace.records[1].live_alice = {0};  // fine, carried over
  trace.records[1].live_bob = {0};    // bob turn may declare
  trace.records[1].verdict = Verdict::BobLeading;
  trace.records[2].live_bob = {0};
  trace.records[2].verdict = Verdict::BobLeading;
  trace.records[3].live_bob = {0};
  trace.records[3].verdict = Verdict::BobLeading;
  REQUIRE(verify_trace(trace).ok());

  Trace tampered = trace;
  tampered.records[2].live_bob = {0};  // unchanged
  tampered.records[2].live_alice = {};
  // removing alice label 0 on an alice turn is monotonicity, not side, breakage
  CHECK(has_violation(verify_trace(tampered), "liveness not monotone (alice label 0)"));

  Trace sneak = trace;
  sneak.records[1].live_alice = {0};
  sneak.records[0].live_alice = {};
  sneak.records[0].appends.clear();
  // label 0 now first appears inside bob's turn
  CHECK(has_violation(verify_trace(sneak),
                      "liveness changed for non-moving side (alice label 0)"));
}

TEST_CASE("a doctored verdict is caught") {
  auto alice = pick_alice("inductive", 0);
  auto bob = pick_bob("trigger_baiter", 6);
  Trace trace = run_match(cfg(2, 3, 6), *alice, *bob, 30);
  REQUIRE(verify_trace(trace).ok());
  TraceRecord& last = trace.records.back();
  last.verdict = last.verdict == Verdict::AliceWinWitnessed ? Verdict::BobLeading
                                                            : Verdict::AliceWinWitnessed;
  VerifyReport report = verify_trace(trace);
  CHECK(has_violation(report, "verdict mismatch"));
}

TEST_CASE("a verdict that regresses after the bob set froze is caught") {
  Trace trace = quiet_alice_trace(3);
  for (size_t i : {1, 2, 3, 4, 5}) {
    trace.records[i].live_bob = {0};
    trace.records[i].verdict = Verdict::BobLeading;
  }
  trace.records[1].appends = {{0, 5}};
  trace.records[3].appends = {{0, 5}};
  trace.records[5].appends = {{0, 5}};
  REQUIRE(verify_trace(trace).ok());

  // claim alice got a witness mid-way, then claim she lost it again
  trace.records[3].verdict = Verdict::AliceWinWitnessed;
  VerifyReport report = verify_trace(trace);
  CHECK(has_violation(report, "verdict mismatch"));
  CHECK(has_violation(report, "verdict regressed after bob live-set froze"));
}

TEST_CASE("a silent live sequence trips the fairness window") {
  Trace trace = quiet_alice_trace(5);
  REQUIRE(trace.records.size() == 10);
  // alice label 0 appends on turn 1 then never again: 4 silent owner turns
  VerifyReport report = verify_trace(trace);
  CHECK(has_violation(report, "fairness broken for alice label 0"));
  CHECK(report.violations.size() == 1);

  // one append inside the window resets the clock
  Trace fair = quiet_alice_trace(5);
  fair.records[6].appends = {{0, 0}};
  CHECK(verify_trace(fair).ok());
}

TEST_CASE("structural breakage throws rather than reports") {
  auto alice = pick_alice("random_grower", 4);
  auto bob = pick_bob("random_grower", 5);
  Trace good = run_match(cfg(1, 2, 8), *alice, *bob, 10);

  Trace bad_turn = good;
  bad_turn.records[4].turn = 99;
  CHECK_THROWS_AS(verify_trace(bad_turn), Error);

  Trace bad_side = good;
  bad_side.records[2].side = Side::Bob;
  CHECK_THROWS_AS(verify_trace(bad_side), Error);

  Trace bad_label = good;
  bad_label.records[0].appends.push_back({7, 1});
  CHECK_THROWS_AS(verify_trace(bad_label), Error);

  try {
    verify_trace(bad_turn);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedTrace);
  }
}

TEST_CASE("the parser rejects broken text") {
  CHECK_THROWS_AS(trace_from_jsonl(""), Error);
  CHECK_THROWS_AS(trace_from_jsonl("not json\n"), Error);
  CHECK_THROWS_AS(trace_from_jsonl("{\"a\":1}\n"), Error);

  auto alice = pick_alice("skipper", 0);
  auto bob = pick_bob("skipper", 0);
  std::string text = trace_to_jsonl(run_match(cfg(1, 1, 0), *alice, *bob, 2));

  std::string bad_version = text;
  size_t pos = bad_version.find("\"format_version\":1");
  bad_version.replace(pos, 18, "\"format_version\":2");
  CHECK_THROWS_AS(trace_from_jsonl(bad_version), Error);

  std::string bad_side = text;
  pos = bad_side.find("\"side\":\"alice\"");
  bad_side.replace(pos, 14, "\"side\":\"carol\"");
  CHECK_THROWS_AS(trace_from_jsonl(bad_side), Error);

  std::string bad_verdict = text;
  pos = bad_verdict.find("\"verdict\":\"alice_win_witnessed\"");
  bad_verdict.replace(pos, 31, "\"verdict\":\"draw_somehow_called\"");
  CHECK_THROWS_AS(trace_from_jsonl(bad_verdict), Error);

  try {
    trace_from_jsonl("not json\n");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedTrace);
  }
}
