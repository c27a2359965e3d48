#include "seqgame/dominators.hpp"

#include <algorithm>

#include "seqgame/error.hpp"

namespace seqgame {

namespace {

void check_window(uint64_t k, const MachineParams& params) {
  params.validate();
  if (k > params.K)
    throw Error(ErrorCode::ConfigError,
                "k=" + std::to_string(k) + " beyond the evaluation window K=" +
                    std::to_string(params.K));
}

}  // namespace

uint64_t weak_dominator_eval(const CountAdvice& advice, uint64_t k,
                             const MachineParams& params) {
  check_window(k, params);
  if (advice.count == 0) return 0;

  std::vector<Program> programs = enumerate_programs(advice.n);
  // full-budget runs decide each stage: halting within budget b equals
  // halting within S in at most b steps (clamp equivalence)
  std::vector<std::vector<ExecResult>> runs(programs.size());
  for (size_t i = 0; i < programs.size(); ++i) {
    runs[i].reserve(k + 1);
    for (uint64_t t = 0; t <= k; ++t)
      runs[i].push_back(run_program(programs[i], t, params.S));
  }

  std::vector<char> collected(programs.size(), 0);
  uint64_t found = 0;
  uint64_t best = 0;
  uint64_t budget = 1;
  while (true) {
    for (size_t i = 0; i < programs.size(); ++i) {
      if (collected[i]) continue;
      bool qualifies = true;
      for (uint64_t t = 0; qualifies && t <= k; ++t)
        qualifies = runs[i][t].halted() && runs[i][t].steps <= budget;
      if (!qualifies) continue;
      collected[i] = 1;
      ++found;
      best = std::max(best, runs[i][k].value);
      if (found == advice.count) return best + 1;
    }
    if (budget >= params.S) break;
    budget = std::min(budget * 2, params.S);
  }
  throw Error(ErrorCode::AdviceUnsatisfiable,
              "only " + std::to_string(found) + " of " + std::to_string(advice.count) +
                  " demanded programs halt on 0.." + std::to_string(k) + " within S=" +
                  std::to_string(params.S));
}

uint64_t strong_dominator_eval(const BitvectorAdvice& advice, uint64_t k,
                               const MachineParams& params) {
  check_window(k, params);
  std::vector<Program> programs = enumerate_programs(advice.n);
  if (advice.bits.size() != programs.size())
    throw Error(ErrorCode::AdviceInconsistent,
                "bitvector length " + std::to_string(advice.bits.size()) +
                    " does not match the " + std::to_string(programs.size()) +
                    " programs of bit_length <= " + std::to_string(advice.n));
  bool any = false;
  uint64_t best = 0;
  for (size_t i = 0; i < programs.size(); ++i) {
    if (!advice.bits[i]) continue;
    ExecResult r = run_program(programs[i], k, params.S);
    if (!r.halted())
      throw Error(ErrorCode::AdviceInconsistent,
                  "flagged program at index " + std::to_string(i) +
                      " does not halt on input " + std::to_string(k));
    any = true;
    best = std::max(best, r.value);
  }
  return any ? best + 1 : 0;
}

uint64_t DominatorFunction::eval(uint64_t k) const {
  if (kind == DominatorKind::WeakFromCount)
    return weak_dominator_eval(std::get<CountAdvice>(advice), k, params);
  return strong_dominator_eval(std::get<BitvectorAdvice>(advice), k, params);
}

DominatorFunction weak_dominator(const CountAdvice& advice) {
  return DominatorFunction{DominatorKind::WeakFromCount, advice, advice.params};
}

DominatorFunction strong_dominator(const BitvectorAdvice& advice) {
  return DominatorFunction{DominatorKind::StrongFromBitvector, advice, advice.params};
}

ExceedanceReport exceedance_report(const std::function<uint64_t(uint64_t)>& f,
                                   const std::function<uint64_t(uint64_t)>& g,
                                   uint64_t K) {
  ExceedanceReport report;
  report.checked_to = K;
  for (uint64_t k = K + 1; k-- > 0;) {
    if (f(k) > g(k))
      report.weakly_from = k;
    else
      break;
  }
  report.everywhere = report.weakly_from && *report.weakly_from == 0;
  return report;
}

}  // namespace seqgame
