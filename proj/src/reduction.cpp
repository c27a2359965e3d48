#include "seqgame/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "seqgame/error.hpp"
#include "seqgame/game.hpp"
#include "seqgame/match.hpp"
#include "seqgame/strategies.hpp"

namespace seqgame {
namespace {

class BlindBob final : public Strategy {
 public:
  BlindBob(uint64_t a, const MachineParams& params) : a_(a), params_(params) {
    params_.validate();
    if (a_ >= 32) {
      throw Error(ErrorCode::InsufficientPrograms,
                  "2^" + std::to_string(a_) + " - 1 programs wanted, enumeration cut is " +
                      std::to_string(params_.L) + " bits");
    }
    b_ = (uint64_t(1) << a_) - 1;
    auto all = enumerate_programs(params_.L);
    if (all.size() < b_) {
      throw Error(ErrorCode::InsufficientPrograms,
                  std::to_string(b_) + " programs wanted, only " + std::to_string(all.size()) +
                      " fit in " + std::to_string(params_.L) + " bits");
    }
    all.resize(b_);
    programs_ = std::move(all);
    total_.resize(b_);
    for (size_t j = 0; j < b_; ++j) total_[j] = budgeted_totality(programs_[j], params_);
  }

  std::string name() const override {
    std::ostringstream os;
    os << "blind_bob(a=" << a_ << ",K=" << params_.K << ",S=" << params_.S << ",L=" << params_.L
       << ")";
    return os.str();
  }

  Side side() const override { return Side::Bob; }

  void reset(const GameConfig& config) override {
    if (config.b != b_) {
      throw Error(ErrorCode::CapacityMismatch,
                  "blind bob feeds " + std::to_string(b_) + " sequences, config has " +
                      std::to_string(config.b));
    }
    next_input_.assign(b_, 0);
    turns_ = 0;
  }

  StrategyMove next_batch(const GameState&) override {
    ++turns_;
    uint64_t budget = turns_ < 64 ? std::min(params_.S, uint64_t(1) << (turns_ - 1)) : params_.S;
    StrategyMove mv;
    if (turns_ == 1) {
      for (size_t j = 0; j < b_; ++j) {
        if (total_[j]) mv.declare_live.push_back(j);
      }
    }
    for (size_t j = 0; j < b_; ++j) {
      auto res = run_program(programs_[j], next_input_[j], budget);
      if (res.halted()) {
        mv.appends.push_back({j, res.value, std::nullopt});
        ++next_input_[j];
      }
    }
    return mv;
  }

  const std::vector<Program>& programs() const { return programs_; }
  const std::vector<bool>& totality() const { return total_; }

 private:
  uint64_t a_;
  MachineParams params_;
  uint64_t b_ = 0;
  std::vector<Program> programs_;
  std::vector<bool> total_;
  std::vector<uint64_t> next_input_;
  uint64_t turns_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> blind_bob_strategy(uint64_t a, const MachineParams& params) {
  return std::make_unique<BlindBob>(a, params);
}

DemoReport lower_bound_demo(uint64_t n, uint64_t rounds, const MachineParams& params) {
  params.validate();
  if (n >= 6) {
    throw Error(ErrorCode::ConfigError, "demo level " + std::to_string(n) + " is out of reach");
  }
  DemoReport report;
  report.n = n;
  report.a = uint64_t(1) << n;
  report.b = (uint64_t(1) << report.a) - 1;
  report.count_convention = "first_b_length_lex";

  auto alice = alice_inductive(report.a);
  BlindBob blind(report.a, params);

  GameConfig config{report.a, report.b, std::max<uint64_t>(rounds, 1), 0};
  report.trace = run_match(config, *alice, blind, rounds);
  report.verdict = report.trace.records.back().verdict;

  GameState state = new_game(config);
  for (const auto& rec : report.trace.records) {
    const auto& live = rec.side == Side::Alice ? rec.live_alice : rec.live_bob;
    for (size_t l : live) state.declare_live(rec.side, l);
    state.apply_batch({rec.side, rec.appends});
  }

  std::ostringstream cx;
  cx << "index into " << alice->name() << " vs " << blind.name() << ", rounds=" << rounds;
  for (size_t l = 0; l < config.a; ++l) {
    report.alices.push_back({l, n, cx.str()});
  }

  std::vector<size_t> unwitnessed;
  for (size_t j = 0; j < config.b; ++j) {
    DemoBobRecord rec;
    rec.label = j;
    rec.program = program_to_text(blind.programs()[j]);
    rec.total = blind.totality()[j];
    rec.witness = state.find_witness(j);
    if (state.seq(Side::Bob, j).live && !rec.witness) unwitnessed.push_back(j);
    report.length_cut_bits =
        std::max(report.length_cut_bits, uint64_t(blind.programs()[j].bit_length()));
    report.bobs.push_back(std::move(rec));
  }

  if (report.verdict != Verdict::AliceWinWitnessed || !unwitnessed.empty()) {
    std::ostringstream os;
    os << "no full certificate after " << rounds << " rounds; unwitnessed labels:";
    if (unwitnessed.empty()) {
      os << " (none live)";
    } else {
      for (size_t j : unwitnessed) os << " " << j;
    }
    throw Error(ErrorCode::DemoInconclusive, os.str());
  }
  return report;
}

}  // namespace seqgame
