#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqgame/machine.hpp"
#include "seqgame/strategy.hpp"
#include "seqgame/trace.hpp"

namespace seqgame {

// Bob label j replays the j-th enumerated program: inputs 0,1,2,... are tried
// under doubling step budgets (capped at params.S), each newly observed halt
// appending one value per turn, in input order. Labels of budgeted-total
// programs are declared live on the first turn; Alice's moves are ignored.
// Wants exactly b = 2^a - 1 Bob sequences.
std::unique_ptr<Strategy> blind_bob_strategy(uint64_t a,
                                             const MachineParams& params);
// InsufficientPrograms when the enumeration under params.L is too small

struct DemoBobRecord {
  size_t label = 0;
  std::string program;  // source text of the program feeding this label
  bool total = false;
  std::optional<Witness> witness;
};

struct DemoAliceRecord {
  size_t label = 0;
  uint64_t index_bits = 0;  // bits to name this label among the 2^n
  std::string context;      // the shared fixed part of the description
};

struct DemoReport {
  uint64_t n = 0;
  uint64_t a = 0;  // 2^n
  uint64_t b = 0;  // 2^a - 1
  Verdict verdict = Verdict::BobLeading;
  std::vector<DemoBobRecord> bobs;
  std::vector<DemoAliceRecord> alices;
  uint64_t length_cut_bits = 0;  // realized bit-length cut of the chosen programs
  std::string count_convention;
  Trace trace;
};

// Plays the level-2^n game against all short programs and reports the
// witnesses; throws DemoInconclusive (listing unwitnessed labels) if the
// horizon ends without a full certificate.
DemoReport lower_bound_demo(uint64_t n, uint64_t rounds, const MachineParams& params);

}  // namespace seqgame
