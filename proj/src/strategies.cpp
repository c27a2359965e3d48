#include "seqgame/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "seqgame/trace.hpp"

namespace seqgame {

namespace {

constexpr size_t npos = size_t(-1);

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string live_set_text(const std::vector<size_t>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

class BobPowerset final : public Strategy {
 public:
  explicit BobPowerset(uint64_t a) : a_(a) {}

  std::string name() const override { return "bob_powerset(a=" + std::to_string(a_) + ")"; }
  Side side() const override { return Side::Bob; }

  void reset(const GameConfig& config) override {
    if (config.a != a_)
      throw Error(ErrorCode::CapacityMismatch,
                  name() + " expects a=" + std::to_string(a_) + " alice sequences");
    if (config.b < (uint64_t(1) << a_))
      throw Error(ErrorCode::CapacityMismatch, name() + " needs b >= 2^a");
    declared_.assign(size_t(1) << a_, false);
  }

  StrategyMove next_batch(const GameState& state) override {
    StrategyMove move;
    const std::vector<Sequence>& alice = state.alice();
    for (uint64_t mask = 0; mask < (uint64_t(1) << a_); ++mask) {
      size_t label = size_t(mask);
      const Sequence& own = state.bob()[label];
      if (!declared_[label]) {
        bool all_live = true;
        for (uint64_t i = 0; i < a_; ++i)
          if ((mask >> i) & 1) all_live = all_live && alice[i].live;
        if (all_live) {
          move.declare_live.push_back(label);
          declared_[label] = true;
        }
      }
      uint64_t target;
      if (mask == 0) {
        target = own.terms.size() + 1;
      } else {
        target = uint64_t(-1);
        for (uint64_t i = 0; i < a_; ++i)
          if ((mask >> i) & 1) target = std::min<uint64_t>(target, alice[i].terms.size());
      }
      for (uint64_t t = own.terms.size(); t < target; ++t) {
        uint64_t best = 0;
        for (uint64_t i = 0; i < a_; ++i)
          if ((mask >> i) & 1) best = std::max(best, alice[i].terms[t]);
        move.appends.push_back({label, best + 1});
      }
    }
    return move;
  }

 private:
  uint64_t a_;
  std::vector<bool> declared_;
};

class AliceInductive final : public Strategy {
 public:
  explicit AliceInductive(uint64_t a) : a_(a) {}

  std::string name() const override {
    return "alice_inductive(a=" + std::to_string(a_) + ")";
  }
  Side side() const override { return Side::Alice; }

  void reset(const GameConfig& config) override {
    if (config.a != a_)
      throw Error(ErrorCode::CapacityMismatch,
                  name() + " expects a=" + std::to_string(a_) + " alice sequences");
    config_ = config;
    live_.assign(a_, false);
    silent_.assign(a_, 0);
    chain_.clear();
    std::vector<size_t> pool(a_);
    std::iota(pool.begin(), pool.end(), size_t(0));
    build_chain(0, 0, pool);
  }

  StrategyMove next_batch(const GameState& state) override {
    for (size_t l = 0; l < a_; ++l) live_[l] = live_[l] || state.alice()[l].live;

    StrategyMove move;
    std::vector<uint64_t> len(a_);
    std::vector<bool> appended(a_, false);
    for (size_t l = 0; l < a_; ++l) len[l] = state.alice()[l].terms.size();

    auto push = [&](size_t l, uint64_t v) {
      move.appends.push_back({l, v});
      ++len[l];
      appended[l] = true;
    };
    auto declare = [&](size_t l) {
      if (!live_[l]) {
        live_[l] = true;
        move.declare_live.push_back(l);
        silent_[l] = 0;
      }
    };

    std::vector<std::vector<size_t>> juris;
    size_t trigger_at = scan_frames(state, juris);

    if (trigger_at != npos) {
      Frame& f = chain_[trigger_at];
      const std::vector<Sequence>& bob = state.bob();
      std::vector<size_t> crossed = f.arrivals;
      size_t r = f.head_label;
      uint64_t best = 0;
      if (!f.reserved_dirty) {
        for (size_t j : crossed) best = std::max(best, bob[j].terms[f.offset]);
      } else {
        uint64_t x = len[r];
        for (size_t j : crossed)
          if (bob[j].terms.size() > x) best = std::max(best, bob[j].terms[x]);
      }
      push(r, best + 1);
      declare(r);
      f.post = true;
      f.killed = std::move(f.arrivals);
      f.arrivals.clear();

      std::vector<size_t> pool;
      for (size_t k = trigger_at + 1; k < chain_.size(); ++k)
        pool.push_back(chain_[k].head_label);
      uint64_t nprime = f.offset;
      for (size_t w : pool) nprime = std::max(nprime, len[w]);
      for (size_t w : pool)
        while (len[w] < nprime) push(w, 0);
      std::sort(pool.begin(), pool.end());
      build_chain(trigger_at + 1, nprime, pool);
      scan_frames(state, juris);  // fresh frames cannot trigger this turn
    }

    // post-trigger reserved upkeep: clean ones get a 0 every turn; dirty ones
    // pad at the slowest fair cadence so lagging killed labels can still be
    // covered at the moving frontier
    for (Frame& f : chain_) {
      if (!f.post) continue;
      size_t r = f.head_label;
      if (appended[r]) continue;
      if (!f.reserved_dirty) {
        push(r, 0);
      } else if (silent_[r] >= kFairnessWindow - 1) {
        uint64_t x = len[r];
        uint64_t best = 0;
        for (size_t j : f.killed) {
          const Sequence& s = state.bob()[j];
          if (s.terms.size() > x) best = std::max(best, s.terms[x]);
        }
        push(r, best + 1);
      }
    }

    // copy frame: mirror the assigned source term for term
    {
      const std::vector<size_t>& sources = juris.back();
      size_t c = chain_.back().head_label;
      if (!sources.empty()) {
        const Sequence& src = state.bob()[sources[0]];
        if (src.live) declare(c);
        for (uint64_t x = len[c]; x < src.terms.size(); ++x) push(c, src.terms[x]);
      }
    }

    // keep-alive sweep: no live sequence goes 4 own turns without an append
    for (size_t l = 0; l < a_; ++l) {
      if (appended[l]) {
        silent_[l] = 0;
      } else if (live_[l]) {
        if (silent_[l] >= kFairnessWindow - 1) {
          push(l, 0);
          silent_[l] = 0;
        } else {
          ++silent_[l];
        }
      }
    }
    return move;
  }

 private:
  struct Frame {
    uint64_t level = 1;
    uint64_t offset = 0;
    bool post = false;
    bool reserved_dirty = false;
    size_t head_label = 0;          // reserved label; the copy label at level 1
    std::vector<size_t> arrivals;   // crossers of offset, first-crossing order
    std::vector<size_t> killed;
  };

  void build_chain(size_t from, uint64_t offset, std::vector<size_t> pool) {
    chain_.resize(from);
    while (pool.size() > 1) {
      size_t pick = npos;
      for (size_t l : pool)
        if (!live_[l] && (pick == npos || l > pick)) pick = l;
      bool dirty = pick == npos;
      if (dirty)
        for (size_t l : pool) pick = pick == npos ? l : std::max(pick, l);
      Frame f;
      f.level = pool.size();
      f.offset = offset;
      f.head_label = pick;
      f.reserved_dirty = dirty;
      chain_.push_back(std::move(f));
      pool.erase(std::find(pool.begin(), pool.end(), pick));
    }
    Frame copy;
    copy.level = 1;
    copy.offset = offset;
    copy.head_label = pool[0];
    chain_.push_back(std::move(copy));
  }

  // recompute jurisdictions top-down, absorb new crossers into arrival lists,
  // and return the topmost triggerable frame (if any)
  size_t scan_frames(const GameState& state, std::vector<std::vector<size_t>>& juris) {
    const std::vector<Sequence>& bob = state.bob();
    juris.assign(chain_.size(), {});
    juris[0].resize(config_.b);
    std::iota(juris[0].begin(), juris[0].end(), size_t(0));
    size_t trigger_at = npos;
    for (size_t i = 0; i < chain_.size(); ++i) {
      if (i > 0) {
        const Frame& parent = chain_[i - 1];
        if (parent.post) {
          for (size_t j : juris[i - 1])
            if (std::find(parent.killed.begin(), parent.killed.end(), j) ==
                parent.killed.end())
              juris[i].push_back(j);
        } else {
          juris[i] = parent.arrivals;
        }
      }
      Frame& f = chain_[i];
      if (f.post) continue;
      for (size_t j : juris[i]) {
        if (bob[j].terms.size() > f.offset &&
            std::find(f.arrivals.begin(), f.arrivals.end(), j) == f.arrivals.end())
          f.arrivals.push_back(j);
      }
      if (f.level >= 2 && trigger_at == npos &&
          f.arrivals.size() >= (uint64_t(1) << (f.level - 1)))
        trigger_at = i;
    }
    return trigger_at;
  }

  uint64_t a_;
  GameConfig config_;
  std::vector<Frame> chain_;
  std::vector<bool> live_;
  std::vector<uint64_t> silent_;
};

class RandomGrower final : public Strategy {
 public:
  RandomGrower(Side side, const AdversaryParams& params) : side_(side), params_(params) {}

  std::string name() const override {
    return "random_grower(seed=" + std::to_string(params_.seed) +
           ",live=" + live_set_text(live_set_) + ")";
  }
  Side side() const override { return side_; }

  void reset(const GameConfig& config) override {
    size_t n = side_ == Side::Alice ? config.a : config.b;
    rng_.seed(mix_seed(config.seed, params_.seed, side_));
    live_set_.clear();
    if (params_.live_set) {
      live_set_ = *params_.live_set;
      std::sort(live_set_.begin(), live_set_.end());
      for (size_t l : live_set_)
        if (l >= n)
          throw Error(ErrorCode::LabelOutOfRange,
                      "live set label " + std::to_string(l) + " out of range");
    } else {
      for (size_t l = 0; l < n; ++l)
        if (rng_() & 1) live_set_.push_back(l);
    }
    non_live_.clear();
    for (size_t l = 0; l < n; ++l)
      if (!std::binary_search(live_set_.begin(), live_set_.end(), l))
        non_live_.push_back(l);
    turns_ = 0;
  }

  StrategyMove next_batch(const GameState&) override {
    StrategyMove move;
    ++turns_;
    if (turns_ == 1) move.declare_live = live_set_;
    for (size_t l : live_set_) move.appends.push_back({l, rng_() & 0xFFFF});
    if (turns_ <= 8 && !non_live_.empty())
      move.appends.push_back({non_live_[(turns_ - 1) % non_live_.size()], rng_() & 0xFFFF});
    return move;
  }

 private:
  Side side_;
  AdversaryParams params_;
  std::vector<size_t> live_set_;
  std::vector<size_t> non_live_;
  std::mt19937_64 rng_;
  uint64_t turns_ = 0;
};

class Burst final : public Strategy {
 public:
  Burst(Side side, const AdversaryParams& params) : side_(side), params_(params) {}

  std::string name() const override {
    return "burst(delay=" + std::to_string(params_.delay) +
           ",width=" + std::to_string(params_.width) +
           ",seed=" + std::to_string(params_.seed) + ")";
  }
  Side side() const override { return side_; }

  void reset(const GameConfig& config) override {
    size_t n = side_ == Side::Alice ? config.a : config.b;
    width_ = std::min<uint64_t>(params_.width, n);
    rng_.seed(mix_seed(config.seed, params_.seed, side_));
    turns_ = 0;
  }

  StrategyMove next_batch(const GameState&) override {
    StrategyMove move;
    ++turns_;
    if (turns_ <= params_.delay) return move;
    if (turns_ == params_.delay + 1)
      for (size_t l = 0; l < width_; ++l) move.declare_live.push_back(l);
    for (size_t l = 0; l < width_; ++l) move.appends.push_back({l, rng_() & 0xFFFF});
    return move;
  }

 private:
  Side side_;
  AdversaryParams params_;
  uint64_t width_ = 0;
  std::mt19937_64 rng_;
  uint64_t turns_ = 0;
};

class TriggerBaiter final : public Strategy {
 public:
  explicit TriggerBaiter(const AdversaryParams& params) : params_(params) {}

  std::string name() const override {
    return "trigger_baiter(seed=" + std::to_string(params_.seed) + ")";
  }
  Side side() const override { return Side::Bob; }

  void reset(const GameConfig& config) override {
    rng_.seed(mix_seed(config.seed, params_.seed, Side::Bob));
    fast_ = std::min<uint64_t>(uint64_t(1) << (config.a - 1), config.b);
    b_ = config.b;
    opened_ = 0;
    turns_ = 0;
  }

  StrategyMove next_batch(const GameState&) override {
    StrategyMove move;
    ++turns_;
    bool open_now = opened_ < fast_ || (opened_ < b_ && turns_ % 6 == 0);
    if (open_now) move.declare_live.push_back(opened_++);
    for (size_t l = 0; l < opened_; ++l) move.appends.push_back({l, rng_() & 0xFFFF});
    return move;
  }

 private:
  AdversaryParams params_;
  std::mt19937_64 rng_;
  uint64_t fast_ = 0;
  uint64_t b_ = 0;
  size_t opened_ = 0;
  uint64_t turns_ = 0;
};

class Copycat final : public Strategy {
 public:
  std::string name() const override { return "copycat"; }
  Side side() const override { return Side::Alice; }
  void reset(const GameConfig&) override { declared_ = false; }

  StrategyMove next_batch(const GameState& state) override {
    StrategyMove move;
    const Sequence& src = state.bob()[0];
    if (src.live && !declared_) {
      move.declare_live.push_back(0);
      declared_ = true;
    }
    for (uint64_t x = state.alice()[0].terms.size(); x < src.terms.size(); ++x)
      move.appends.push_back({0, src.terms[x]});
    return move;
  }

 private:
  bool declared_ = false;
};

class Skipper final : public Strategy {
 public:
  explicit Skipper(Side side) : side_(side) {}
  std::string name() const override { return "skipper"; }
  Side side() const override { return side_; }
  void reset(const GameConfig&) override {}
  StrategyMove next_batch(const GameState&) override { return {}; }

 private:
  Side side_;
};

}  // namespace

uint64_t mix_seed(uint64_t config_seed, uint64_t param_seed, Side side) {
  uint64_t salt = side == Side::Alice ? 0x415349ull : 0x424f42ull;
  return mix64(config_seed ^ mix64(param_seed ^ salt));
}

uint64_t subset_for_label(size_t label, uint64_t a) {
  if (a >= 64 || label >= (size_t(1) << a))
    throw Error(ErrorCode::LabelOutOfRange,
                "label " + std::to_string(label) + " has no subset at a=" + std::to_string(a));
  return label;
}

std::unique_ptr<Strategy> bob_powerset(uint64_t a) {
  return std::make_unique<BobPowerset>(a);
}

std::unique_ptr<Strategy> alice_inductive(uint64_t a) {
  return std::make_unique<AliceInductive>(a);
}

std::unique_ptr<Strategy> make_adversary(const std::string& kind, Side side,
                                         const AdversaryParams& params) {
  if (kind == "random_grower" || kind == "RandomGrower")
    return std::make_unique<RandomGrower>(side, params);
  if (kind == "burst" || kind == "Burst") return std::make_unique<Burst>(side, params);
  if (kind == "trigger_baiter" || kind == "TriggerBaiter") {
    if (side != Side::Bob)
      throw Error(ErrorCode::ConfigError, "trigger_baiter plays the bob side");
    return std::make_unique<TriggerBaiter>(params);
  }
  if (kind == "copycat" || kind == "Copycat") {
    if (side != Side::Alice)
      throw Error(ErrorCode::ConfigError, "copycat plays the alice side");
    return std::make_unique<Copycat>();
  }
  if (kind == "skipper" || kind == "Skipper") return std::make_unique<Skipper>(side);
  throw Error(ErrorCode::UnknownKind, "unknown adversary kind '" + kind + "'");
}

}  // namespace seqgame
