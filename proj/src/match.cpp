#include "seqgame/match.hpp"

namespace seqgame {

namespace {

std::vector<size_t> live_labels(const std::vector<Sequence>& seqs) {
  std::vector<size_t> out;
  for (size_t i = 0; i < seqs.size(); ++i)
    if (seqs[i].live) out.push_back(i);
  return out;
}

}  // namespace

Trace run_match(const GameConfig& config, Strategy& alice, Strategy& bob,
                uint64_t rounds) {
  config.validate();
  if (rounds == 0 || rounds > config.max_rounds)
    throw Error(ErrorCode::ConfigError,
                "rounds must be in 1.." + std::to_string(config.max_rounds));
  if (alice.side() != Side::Alice || bob.side() != Side::Bob)
    throw Error(ErrorCode::WrongSide, "strategies mounted on the wrong sides");

  alice.reset(config);
  bob.reset(config);

  Trace trace;
  trace.config = config;
  trace.rounds = rounds;
  trace.alice_strategy = alice.name();
  trace.bob_strategy = bob.name();

  GameState state = new_game(config);
  for (uint64_t round = 0; round < rounds; ++round) {
    for (Side side : {Side::Alice, Side::Bob}) {
      Strategy& mover = side == Side::Alice ? alice : bob;
      StrategyMove move = mover.next_batch(state);
      for (size_t label : move.declare_live) state.declare_live(side, label);
      state.apply_batch({side, move.appends});
      TraceRecord record;
      record.turn = state.turn();
      record.side = side;
      record.appends = std::move(move.appends);
      record.live_alice = live_labels(state.alice());
      record.live_bob = live_labels(state.bob());
      record.verdict = state.verdict();
      trace.records.push_back(std::move(record));
    }
  }
  return trace;
}

}  // namespace seqgame
