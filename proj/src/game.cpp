#include "seqgame/game.hpp"

#include <algorithm>
#include <string>

namespace seqgame {

void GameConfig::validate() const {
  if (a == 0 || b == 0 || max_rounds == 0)
    throw Error(ErrorCode::DegenerateConfig,
                "need a >= 1, b >= 1, max_rounds >= 1 (got a=" + std::to_string(a) +
                    ", b=" + std::to_string(b) +
                    ", max_rounds=" + std::to_string(max_rounds) + ")");
}

GameState::GameState(const GameConfig& config) : config_(config) {
  config_.validate();
  alice_.resize(config_.a);
  bob_.resize(config_.b);
}

const Sequence& GameState::seq(Side side, size_t label) const {
  const std::vector<Sequence>& seqs = side == Side::Alice ? alice_ : bob_;
  if (label >= seqs.size())
    throw Error(ErrorCode::UnknownLabel,
                std::string(side_name(side)) + " label " + std::to_string(label) +
                    " out of range");
  return seqs[label];
}

void GameState::apply_batch(const MoveBatch& batch) {
  if (batch.side != side_to_move())
    throw Error(ErrorCode::WrongSide, std::string(side_name(batch.side)) +
                                          " moved on turn " + std::to_string(turn_ + 1));
  std::vector<Sequence>& seqs = batch.side == Side::Alice ? alice_ : bob_;
  for (const AppendOp& op : batch.appends) {
    if (op.label >= seqs.size())
      throw Error(ErrorCode::UnknownLabel,
                  std::string(side_name(batch.side)) + " label " +
                      std::to_string(op.label) + " out of range");
    if (op.value > kMaxTermValue)
      throw Error(ErrorCode::ValueOverflow,
                  "term value " + std::to_string(op.value) + " exceeds 2^63-1");
    seqs[op.label].terms.push_back(op.value);
  }
  ++turn_;
  history_.push_back(batch);
}

void GameState::declare_live(Side side, size_t label) {
  std::vector<Sequence>& seqs = side == Side::Alice ? alice_ : bob_;
  if (label >= seqs.size())
    throw Error(ErrorCode::UnknownLabel,
                std::string(side_name(side)) + " label " + std::to_string(label) +
                    " out of range");
  seqs[label].live = true;
}

std::optional<Witness> GameState::find_witness(size_t bob_label) const {
  const Sequence& bobseq = seq(Side::Bob, bob_label);
  size_t live_max_len = 0;
  for (const Sequence& s : alice_) {
    if (s.live) live_max_len = std::max(live_max_len, s.terms.size());
  }
  size_t horizon = std::min(bobseq.terms.size(), live_max_len);
  for (uint64_t t = 0; t < horizon; ++t) {
    for (size_t i = 0; i < alice_.size(); ++i) {
      const Sequence& s = alice_[i];
      if (s.live && s.terms.size() > t && s.terms[t] >= bobseq.terms[t])
        return Witness{bob_label, i, t};
    }
  }
  return std::nullopt;
}

Verdict GameState::verdict() const {
  for (size_t j = 0; j < bob_.size(); ++j) {
    if (bob_[j].live && !find_witness(j)) return Verdict::BobLeading;
  }
  return Verdict::AliceWinWitnessed;
}

}  // namespace seqgame
