#pragma once

#include <string>
#include <vector>

#include "seqgame/game.hpp"

namespace seqgame {

struct StrategyMove {
  std::vector<AppendOp> appends;
  std::vector<size_t> declare_live;  // applied before the appends
};

class Strategy {
 public:
  virtual ~Strategy() = default;

  // stable, self-describing (resolved parameters included); valid after reset
  virtual std::string name() const = 0;
  virtual Side side() const = 0;

  // called once per match before the first move; CapacityMismatch if the
  // config cannot host this strategy
  virtual void reset(const GameConfig& config) = 0;

  virtual StrategyMove next_batch(const GameState& state) = 0;
};

}  // namespace seqgame
