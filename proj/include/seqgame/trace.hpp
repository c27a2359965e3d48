#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqgame/game.hpp"

namespace seqgame {

struct TraceRecord {
  uint64_t turn = 0;
  Side side = Side::Alice;
  std::vector<AppendOp> appends;
  std::vector<size_t> live_alice;  // full post-turn live sets, ascending
  std::vector<size_t> live_bob;
  Verdict verdict = Verdict::AliceWinWitnessed;
};

struct Trace {
  GameConfig config;
  uint64_t rounds = 0;
  std::string alice_strategy;
  std::string bob_strategy;
  std::vector<TraceRecord> records;
};

// one JSON object per line: header first, then one record per turn;
// byte-exact for equal inputs
std::string trace_to_jsonl(const Trace& trace);
Trace trace_from_jsonl(const std::string& text);  // MalformedTrace

void write_trace_file(const Trace& trace, const std::string& path);
Trace read_trace_file(const std::string& path);

struct TraceViolation {
  uint64_t turn = 0;
  std::string message;
};

struct VerifyReport {
  std::vector<TraceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// hook for invariant checks that want the replayed state after each turn
class ReplayObserver {
 public:
  virtual ~ReplayObserver() = default;
  virtual void on_turn(const GameState& state, const TraceRecord& record) = 0;
};

// Replays the trace from the empty position and collects semantic violations:
// append-only discipline, liveness monotonicity, recorded-vs-recomputed
// verdicts, verdict permanence under a frozen Bob live-set, and the fairness
// contract (every live sequence appended at least once every 4 owner turns).
// Structural breakage (turn numbering, side order, unknown labels) throws
// MalformedTrace with the record index.
VerifyReport verify_trace(const Trace& trace, ReplayObserver* observer = nullptr);

constexpr uint64_t kFairnessWindow = 4;

}  // namespace seqgame
