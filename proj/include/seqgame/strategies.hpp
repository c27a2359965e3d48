#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqgame/strategy.hpp"

namespace seqgame {

// a-bit mask encoding of the subset handled by a Bob label; the mask IS the label
uint64_t subset_for_label(size_t label, uint64_t a);  // LabelOutOfRange

// One Bob sequence per subset X of Alice labels: length tracks the minimum
// length over X (empty X grows by one per turn), terms are 1 + max over X.
// Needs b >= 2^a; extra labels stay empty and non-live.
std::unique_ptr<Strategy> bob_powerset(uint64_t a);

// The level-a frame strategy: copy at the bottom, reserve-and-trigger above,
// restarting in shifted coordinates after each trigger. Wins with b < 2^a;
// still plays legally (degraded) when b >= 2^a.
std::unique_ptr<Strategy> alice_inductive(uint64_t a);

struct AdversaryParams {
  uint64_t seed = 0;
  std::optional<std::vector<size_t>> live_set;  // random_grower only
  uint64_t delay = 10;                          // burst
  uint64_t width = 4;                           // burst
};

// kinds: random_grower, burst, trigger_baiter (bob side), copycat (alice
// side), skipper
std::unique_ptr<Strategy> make_adversary(const std::string& kind, Side side,
                                         const AdversaryParams& params = {});

// shared deterministic seeding for strategies (config seed + param seed + side)
uint64_t mix_seed(uint64_t config_seed, uint64_t param_seed, Side side);

}  // namespace seqgame
