#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqgame/error.hpp"

namespace seqgame {

enum class Side { Alice, Bob };

inline const char* side_name(Side s) { return s == Side::Alice ? "alice" : "bob"; }
inline Side other_side(Side s) { return s == Side::Alice ? Side::Bob : Side::Alice; }

struct GameConfig {
  uint64_t a = 1;
  uint64_t b = 1;
  uint64_t max_rounds = 1;
  uint64_t seed = 0;

  void validate() const;  // DegenerateConfig
};

// term values are capped; appends beyond this raise ValueOverflow
constexpr uint64_t kMaxTermValue = (uint64_t(1) << 63) - 1;

struct AppendOp {
  size_t label = 0;
  uint64_t value = 0;
  // expected write index; only fault-injecting tests set it, and replay flags
  // any mismatch with the actual sequence length
  std::optional<uint64_t> at;

  bool operator==(const AppendOp&) const = default;
};

struct MoveBatch {
  Side side = Side::Alice;
  std::vector<AppendOp> appends;
};

struct Sequence {
  std::vector<uint64_t> terms;
  bool live = false;
};

struct Witness {
  size_t bob_label = 0;
  size_t alice_label = 0;
  uint64_t index = 0;

  bool operator==(const Witness&) const = default;
};

enum class Verdict { AliceWinWitnessed, BobLeading };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::AliceWinWitnessed ? "alice_win_witnessed" : "bob_leading";
}

class GameState {
 public:
  explicit GameState(const GameConfig& config);

  const GameConfig& config() const { return config_; }
  uint64_t turn() const { return turn_; }
  const std::vector<Sequence>& alice() const { return alice_; }
  const std::vector<Sequence>& bob() const { return bob_; }
  const std::vector<MoveBatch>& history() const { return history_; }

  const Sequence& seq(Side side, size_t label) const;  // UnknownLabel
  Side side_to_move() const { return turn_ % 2 == 0 ? Side::Alice : Side::Bob; }

  // appends in batch order; turn advances by one
  // errors: WrongSide (not this side's turn), UnknownLabel, ValueOverflow
  void apply_batch(const MoveBatch& batch);

  // idempotent, never un-declares; does not advance the turn
  void declare_live(Side side, size_t label);

  // smallest index t, then smallest live Alice label i, with both terms
  // present and alice[t] >= bob[t]
  std::optional<Witness> find_witness(size_t bob_label) const;

  // AliceWinWitnessed iff every live Bob sequence has a witness
  Verdict verdict() const;

 private:
  GameConfig config_;
  uint64_t turn_ = 0;
  std::vector<Sequence> alice_;
  std::vector<Sequence> bob_;
  std::vector<MoveBatch> history_;
};

inline GameState new_game(const GameConfig& config) { return GameState(config); }

}  // namespace seqgame
