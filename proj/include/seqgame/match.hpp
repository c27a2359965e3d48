#pragma once

#include "seqgame/strategy.hpp"
#include "seqgame/trace.hpp"

namespace seqgame {

// Alternates Alice-then-Bob for `rounds` full rounds, applying each side's
// liveness declarations before its appends and recording a verdict after
// every turn. Deterministic given config.seed.
Trace run_match(const GameConfig& config, Strategy& alice, Strategy& bob,
                uint64_t rounds);

}  // namespace seqgame
