#include "seqgame/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqgame/dominators.hpp"
#include "seqgame/error.hpp"
#include "seqgame/match.hpp"
#include "seqgame/reduction.hpp"
#include "seqgame/strategies.hpp"
#include "seqgame/trace.hpp"

namespace seqgame {
namespace {

using nlohmann::ordered_json;

void emit_line(std::ostream& out, const ordered_json& row, bool pretty) {
  out << (pretty ? row.dump(2) : row.dump()) << "\n";
}

void emit_raw(std::ostream& out, const std::string& compact, bool pretty) {
  if (pretty) {
    out << ordered_json::parse(compact).dump(2) << "\n";
  } else {
    out << compact << "\n";
  }
}

void emit_trace(std::ostream& out, const Trace& trace, bool pretty) {
  std::string text = trace_to_jsonl(trace);
  if (!pretty) {
    out << text;
    return;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) out << ordered_json::parse(line).dump(2) << "\n";
  }
}

std::unique_ptr<Strategy> make_alice(const std::string& kind, uint64_t a, uint64_t seed) {
  if (kind == "inductive") return alice_inductive(a);
  AdversaryParams params;
  params.seed = seed;
  return make_adversary(kind == "random" ? "random_grower" : kind, Side::Alice, params);
}

std::unique_ptr<Strategy> make_bob(const std::string& kind, uint64_t a, uint64_t seed,
                                   const MachineParams& machine) {
  if (kind == "powerset") return bob_powerset(a);
  if (kind == "blind") return blind_bob_strategy(a, machine);
  AdversaryParams params;
  params.seed = seed;
  return make_adversary(kind == "random" ? "random_grower" : kind, Side::Bob, params);
}

Verdict final_verdict(const Trace& trace) { return trace.records.back().verdict; }

int run_play(std::ostream& out, const GameConfig& config, const std::string& alice_kind,
             const std::string& bob_kind, uint64_t rounds, uint64_t seed,
             const MachineParams& machine, const std::string& trace_path, bool pretty) {
  auto alice = make_alice(alice_kind, config.a, seed);
  auto bob = make_bob(bob_kind, config.a, seed, machine);
  Trace trace = run_match(config, *alice, *bob, rounds);
  if (trace_path.empty()) {
    emit_trace(out, trace, pretty);
  } else {
    write_trace_file(trace, trace_path);
  }
  out << "verdict: " << verdict_name(final_verdict(trace)) << "\n";
  return 0;
}

int run_verify(std::ostream& out, const std::string& trace_path, bool pretty) {
  Trace trace = read_trace_file(trace_path);
  VerifyReport report = verify_trace(trace);
  for (const TraceViolation& v : report.violations) {
    emit_line(out, ordered_json{{"turn", v.turn}, {"message", v.message}}, pretty);
  }
  out << report.violations.size() << " violations\n";
  return report.ok() ? 0 : 1;
}

struct TournamentEntry {
  std::string kind;
  uint64_t seed = 0;
};

int run_tournament(std::ostream& out, std::ostream& err, const GameConfig& config,
                   const std::string& alice_kind, const std::string& bob_kind, uint64_t rounds,
                   uint64_t seed, uint64_t seeds, const std::string& expect,
                   const MachineParams& machine, bool pretty) {
  bool vary_alice = alice_kind.empty();
  std::vector<TournamentEntry> entries;
  if (!alice_kind.empty() && !bob_kind.empty()) {
    entries.push_back({vary_alice ? alice_kind : bob_kind, seed});
  } else if (vary_alice) {
    entries.push_back({"burst", seed});
    entries.push_back({"copycat", seed});
    entries.push_back({"inductive", seed});
    for (uint64_t s = 0; s < seeds; ++s) entries.push_back({"random", s});
    entries.push_back({"skipper", seed});
  } else {
    entries.push_back({"burst", seed});
    if (config.a < 20 && config.b + 1 == (uint64_t(1) << config.a)) {
      try {
        blind_bob_strategy(config.a, machine);
        entries.push_back({"blind", seed});
      } catch (const Error&) {
        // enumeration too small for this a; leave blind bob out
      }
    }
    if (config.a < 20 && config.b >= (uint64_t(1) << config.a)) {
      entries.push_back({"powerset", seed});
    }
    for (uint64_t s = 0; s < seeds; ++s) entries.push_back({"random", s});
    entries.push_back({"skipper", seed});
    entries.push_back({"trigger_baiter", seed});
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return std::tie(x.kind, x.seed) < std::tie(y.kind, y.seed);
  });

  uint64_t alice_wins = 0;
  uint64_t bob_leads = 0;
  for (const TournamentEntry& e : entries) {
    auto alice = vary_alice ? make_alice(e.kind, config.a, e.seed)
                            : make_alice(alice_kind, config.a, seed);
    auto bob = vary_alice ? make_bob(bob_kind, config.a, seed, machine)
                          : make_bob(e.kind, config.a, e.seed, machine);
    Trace trace = run_match(config, *alice, *bob, rounds);
    Verdict v = final_verdict(trace);
    (v == Verdict::AliceWinWitnessed ? alice_wins : bob_leads) += 1;
    emit_line(out,
              ordered_json{{"alice", trace.alice_strategy},
                           {"bob", trace.bob_strategy},
                           {"seed", e.seed},
                           {"rounds", rounds},
                           {"verdict", verdict_name(v)}},
              pretty);
  }
  out << "alice wins: " << alice_wins << ", bob leads: " << bob_leads << "\n";
  if (expect == "alice" && bob_leads > 0) {
    err << "error: expected every match to end alice_win_witnessed\n";
    return 1;
  }
  if (expect == "bob" && alice_wins > 0) {
    err << "error: expected every match to end bob_leading\n";
    return 1;
  }
  return 0;
}

int run_enumerate(std::ostream& out, uint64_t max_bits, const MachineParams& machine,
                  bool pretty) {
  auto programs = enumerate_programs(max_bits);
  for (size_t i = 0; i < programs.size(); ++i) {
    emit_line(out,
              ordered_json{{"index", i},
                           {"bits", programs[i].bit_length()},
                           {"text", program_to_text(programs[i])},
                           {"total", budgeted_totality(programs[i], machine)}},
              pretty);
  }
  out << programs.size() << " programs\n";
  return 0;
}

int run_dominate(std::ostream& out, std::ostream& err, uint64_t n, const MachineParams& machine,
                 bool pretty) {
  CountAdvice count = advice_count(n, machine);
  BitvectorAdvice bitvector = advice_bitvector(n, machine);
  emit_raw(out, advice_to_json(count), pretty);
  emit_raw(out, advice_to_json(bitvector), pretty);
  for (uint64_t k = 0; k <= machine.K; ++k) {
    emit_line(out,
              ordered_json{{"k", k},
                           {"weak", weak_dominator_eval(count, k, machine)},
                           {"strong", strong_dominator_eval(bitvector, k, machine)}},
              pretty);
  }
  out << "count advice: " << count.bit_size() << " bits, bitvector advice: "
      << bitvector.bit_size() << " bits\n";
  if (count.bit_size() >= bitvector.bit_size()) {
    err << "error: count advice is not smaller than the bitvector\n";
    return 1;
  }
  return 0;
}

int run_blind_bob(std::ostream& out, uint64_t n, uint64_t rounds, const MachineParams& machine,
                  const std::string& trace_path, bool pretty) {
  DemoReport report = lower_bound_demo(n, rounds, machine);
  emit_line(out,
            ordered_json{{"n", report.n},
                         {"a", report.a},
                         {"b", report.b},
                         {"verdict", verdict_name(report.verdict)},
                         {"length_cut_bits", report.length_cut_bits},
                         {"count_convention", report.count_convention}},
            pretty);
  for (const DemoBobRecord& rec : report.bobs) {
    ordered_json witness = nullptr;
    if (rec.witness) {
      witness = ordered_json{{"alice_label", rec.witness->alice_label},
                             {"index", rec.witness->index}};
    }
    emit_line(out,
              ordered_json{{"bob_label", rec.label},
                           {"program", rec.program},
                           {"total", rec.total},
                           {"witness", witness}},
              pretty);
  }
  for (const DemoAliceRecord& rec : report.alices) {
    emit_line(out,
              ordered_json{{"alice_label", rec.label},
                           {"index_bits", rec.index_bits},
                           {"context", rec.context}},
              pretty);
  }
  if (!trace_path.empty()) write_trace_file(report.trace, trace_path);
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"append-only sequence exceedance games on a toy stack machine"};
  app.name("seqgame");
  app.require_subcommand(1);

  uint64_t a = 1, b = 1, rounds = 1, seed = 0, seeds = 20;
  uint64_t n = 3, K = 8, S = 256, max_bits = 6;
  std::string alice_kind, bob_kind, trace_path, expect = "none";
  bool pretty = false;

  CLI::App* play = app.add_subcommand("play", "run one match and print its trace");
  play->add_option("--a", a, "alice sequence count")->required();
  play->add_option("--b", b, "bob sequence count")->required();
  play->add_option("--alice", alice_kind, "inductive|copycat|random|burst|skipper")->required();
  play->add_option("--bob", bob_kind, "powerset|blind|random|burst|trigger_baiter|skipper")
      ->required();
  play->add_option("--rounds", rounds, "rounds to play")->required();
  play->add_option("--seed", seed, "base seed");
  play->add_option("--K", K, "totality window for blind bob");
  play->add_option("--S", S, "step budget for blind bob");
  play->add_option("--trace", trace_path, "write the trace to this file instead of stdout");
  play->add_flag("--pretty", pretty, "indent the records");

  CLI::App* verify = app.add_subcommand("verify", "replay a trace and report violations");
  verify->add_option("--trace", trace_path, "trace file to check")->required();
  verify->add_flag("--pretty", pretty, "indent the records");

  CLI::App* tournament =
      app.add_subcommand("tournament", "pit one strategy against the adversary suite");
  tournament->add_option("--a", a, "alice sequence count")->required();
  tournament->add_option("--b", b, "bob sequence count")->required();
  tournament->add_option("--rounds", rounds, "rounds per match")->required();
  tournament->add_option("--alice", alice_kind, "fixed alice strategy");
  tournament->add_option("--bob", bob_kind, "fixed bob strategy");
  tournament->add_option("--seed", seed, "seed for the fixed side and singleton adversaries");
  tournament->add_option("--seeds", seeds, "how many random_grower seeds to run");
  tournament->add_option("--expect", expect, "alice|bob|none")
      ->check(CLI::IsMember({"alice", "bob", "none"}));
  tournament->add_option("--K", K, "totality window for blind bob");
  tournament->add_option("--S", S, "step budget for blind bob");
  tournament->add_flag("--pretty", pretty, "indent the records");

  CLI::App* enumerate =
      app.add_subcommand("machine-enumerate", "list programs in canonical order");
  enumerate->add_option("--max-bits", max_bits, "length cut in bits")
      ->required()
      ->check(CLI::Range(uint64_t(3), uint64_t(15)));
  enumerate->add_option("--K", K, "totality window");
  enumerate->add_option("--S", S, "step budget per run");
  enumerate->add_flag("--pretty", pretty, "indent the records");

  CLI::App* dominate =
      app.add_subcommand("dominate", "build both advice forms and evaluate the dominators");
  dominate->add_option("--n", n, "program length cut in bits")
      ->required()
      ->check(CLI::Range(uint64_t(3), uint64_t(12)));
  dominate->add_option("--K", K, "totality window");
  dominate->add_option("--S", S, "step budget per run");
  dominate->add_flag("--pretty", pretty, "indent the records");

  CLI::App* blind = app.add_subcommand("blind-bob", "play the lower bound demo at level n");
  blind->add_option("--n", n, "demo level; alice gets 2^n sequences")->required();
  blind->add_option("--rounds", rounds, "rounds to play")->required();
  blind->add_option("--K", K, "totality window");
  blind->add_option("--S", S, "step budget per run");
  blind->add_option("--trace", trace_path, "also write the match trace to this file");
  blind->add_flag("--pretty", pretty, "indent the records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  MachineParams machine{K, S, 12};
  try {
    if (play->parsed()) {
      GameConfig config{a, b, rounds, seed};
      return run_play(out, config, alice_kind, bob_kind, rounds, seed, machine, trace_path,
                      pretty);
    }
    if (verify->parsed()) return run_verify(out, trace_path, pretty);
    if (tournament->parsed()) {
      if (alice_kind.empty() && bob_kind.empty()) {
        err << "usage error: tournament needs --alice or --bob\n";
        return 2;
      }
      GameConfig config{a, b, rounds, seed};
      return run_tournament(out, err, config, alice_kind, bob_kind, rounds, seed, seeds, expect,
                            machine, pretty);
    }
    if (enumerate->parsed()) {
      MachineParams cut{K, S, std::max<uint64_t>(max_bits, 3)};
      return run_enumerate(out, max_bits, cut, pretty);
    }
    if (dominate->parsed()) return run_dominate(out, err, n, machine, pretty);
    if (blind->parsed()) return run_blind_bob(out, n, rounds, machine, trace_path, pretty);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace seqgame
