#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "seqgame/machine.hpp"

namespace seqgame {

enum class DominatorKind { WeakFromCount, StrongFromBitvector };

// Evaluates programs of bit_length <= advice.n under doubling step budgets
// 1,2,4,...,S; collects (once, by canonical index) those seen to halt on every
// input 0..k; once advice.count are collected returns 1 + max of their values
// at k. advice.count == 0 evaluates to 0.
uint64_t weak_dominator_eval(const CountAdvice& advice, uint64_t k,
                             const MachineParams& params);  // AdviceUnsatisfiable

// 1 + max value at k over the flagged programs (0 with no flags set).
uint64_t strong_dominator_eval(const BitvectorAdvice& advice, uint64_t k,
                               const MachineParams& params);  // AdviceInconsistent

// g as an object: the advice pins the function, eval answers on 0..params.K
struct DominatorFunction {
  DominatorKind kind = DominatorKind::WeakFromCount;
  std::variant<CountAdvice, BitvectorAdvice> advice;
  MachineParams params;

  uint64_t eval(uint64_t k) const;
};

DominatorFunction weak_dominator(const CountAdvice& advice);
DominatorFunction strong_dominator(const BitvectorAdvice& advice);

struct ExceedanceReport {
  bool everywhere = false;
  std::optional<uint64_t> weakly_from;  // least k0 with f > g on [k0, K]
  uint64_t checked_to = 0;              // inclusive upper end of the scan
};

ExceedanceReport exceedance_report(const std::function<uint64_t(uint64_t)>& f,
                                   const std::function<uint64_t(uint64_t)>& g,
                                   uint64_t K);

}  // namespace seqgame
