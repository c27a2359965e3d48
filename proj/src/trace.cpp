#include "seqgame/trace.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace seqgame {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json appends_to_json(const std::vector<AppendOp>& appends) {
  json arr = json::array();
  for (const AppendOp& op : appends) {
    json entry = json::array({op.label, op.value});
    if (op.at) entry.push_back(*op.at);
    arr.push_back(std::move(entry));
  }
  return arr;
}

[[noreturn]] void malformed(size_t record_index, const std::string& what) {
  throw Error(ErrorCode::MalformedTrace,
              "record " + std::to_string(record_index) + ": " + what);
}

uint64_t take_uint(const json& j, const char* field, size_t record_index) {
  if (!j.contains(field) || !j[field].is_number_unsigned())
    malformed(record_index, std::string("missing or bad field '") + field + "'");
  return j[field].get<uint64_t>();
}

std::vector<size_t> take_label_list(const json& j, size_t record_index) {
  if (!j.is_array()) malformed(record_index, "live set is not an array");
  std::vector<size_t> labels;
  for (const json& e : j) {
    if (!e.is_number_unsigned()) malformed(record_index, "live label is not a natural");
    labels.push_back(e.get<size_t>());
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<size_t> live_labels(const std::vector<Sequence>& seqs) {
  std::vector<size_t> out;
  for (size_t i = 0; i < seqs.size(); ++i)
    if (seqs[i].live) out.push_back(i);
  return out;
}

}  // namespace

std::string trace_to_jsonl(const Trace& trace) {
  std::string out;
  ordered_json header;
  header["a"] = trace.config.a;
  header["b"] = trace.config.b;
  header["rounds"] = trace.rounds;
  header["seed"] = trace.config.seed;
  header["alice_strategy"] = trace.alice_strategy;
  header["bob_strategy"] = trace.bob_strategy;
  header["format_version"] = 1;
  out += header.dump();
  out += '\n';
  for (const TraceRecord& r : trace.records) {
    ordered_json j;
    j["turn"] = r.turn;
    j["side"] = side_name(r.side);
    j["appends"] = appends_to_json(r.appends);
    j["live"] = ordered_json{{"alice", r.live_alice}, {"bob", r.live_bob}};
    j["verdict"] = verdict_name(r.verdict);
    out += j.dump();
    out += '\n';
  }
  return out;
}

Trace trace_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<json> lines;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw Error(ErrorCode::MalformedTrace,
                  "line " + std::to_string(lineno) + ": not valid json");
    lines.push_back(std::move(j));
  }
  if (lines.empty()) throw Error(ErrorCode::MalformedTrace, "empty trace");

  const json& h = lines[0];
  Trace trace;
  trace.config.a = take_uint(h, "a", 0);
  trace.config.b = take_uint(h, "b", 0);
  trace.rounds = take_uint(h, "rounds", 0);
  trace.config.seed = take_uint(h, "seed", 0);
  trace.config.max_rounds = std::max<uint64_t>(trace.rounds, 1);
  if (!h.contains("alice_strategy") || !h["alice_strategy"].is_string() ||
      !h.contains("bob_strategy") || !h["bob_strategy"].is_string())
    throw Error(ErrorCode::MalformedTrace, "header: missing strategy names");
  trace.alice_strategy = h["alice_strategy"].get<std::string>();
  trace.bob_strategy = h["bob_strategy"].get<std::string>();
  if (take_uint(h, "format_version", 0) != 1)
    throw Error(ErrorCode::MalformedTrace, "header: unsupported format_version");

  for (size_t i = 1; i < lines.size(); ++i) {
    const json& j = lines[i];
    size_t idx = i - 1;
    TraceRecord r;
    r.turn = take_uint(j, "turn", idx);
    if (!j.contains("side") || !j["side"].is_string()) malformed(idx, "missing side");
    std::string side = j["side"].get<std::string>();
    if (side == "alice") r.side = Side::Alice;
    else if (side == "bob") r.side = Side::Bob;
    else malformed(idx, "unknown side '" + side + "'");
    if (!j.contains("appends") || !j["appends"].is_array())
      malformed(idx, "missing appends");
    for (const json& e : j["appends"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3 ||
          !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        malformed(idx, "append entry is not [label, value] or [label, value, at]");
      AppendOp op{e[0].get<size_t>(), e[1].get<uint64_t>(), std::nullopt};
      if (e.size() == 3) {
        if (!e[2].is_number_unsigned()) malformed(idx, "append 'at' is not a natural");
        op.at = e[2].get<uint64_t>();
      }
      r.appends.push_back(op);
    }
    if (!j.contains("live") || !j["live"].is_object() || !j["live"].contains("alice") ||
        !j["live"].contains("bob"))
      malformed(idx, "missing live sets");
    r.live_alice = take_label_list(j["live"]["alice"], idx);
    r.live_bob = take_label_list(j["live"]["bob"], idx);
    if (!j.contains("verdict") || !j["verdict"].is_string()) malformed(idx, "missing verdict");
    std::string v = j["verdict"].get<std::string>();
    if (v == "alice_win_witnessed") r.verdict = Verdict::AliceWinWitnessed;
    else if (v == "bob_leading") r.verdict = Verdict::BobLeading;
    else malformed(idx, "unknown verdict '" + v + "'");
    trace.records.push_back(std::move(r));
  }
  return trace;
}

void write_trace_file(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot open trace file for writing: " + path);
  out << trace_to_jsonl(trace);
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open trace file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return trace_from_jsonl(buf.str());
}

VerifyReport verify_trace(const Trace& trace, ReplayObserver* observer) {
  VerifyReport report;
  auto violation = [&](uint64_t turn, const std::string& message) {
    report.violations.push_back({turn, message});
  };

  GameConfig config = trace.config;
  config.max_rounds = std::max<uint64_t>({config.max_rounds, trace.rounds, 1});
  GameState state = [&] {
    try {
      return new_game(config);
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedTrace, std::string("header: ") + e.what());
    }
  }();

  std::vector<size_t> prev_live[2];  // by side
  std::map<std::pair<int, size_t>, uint64_t> silent;

  for (size_t idx = 0; idx < trace.records.size(); ++idx) {
    const TraceRecord& r = trace.records[idx];
    if (r.turn != idx + 1)
      malformed(idx, "turn number " + std::to_string(r.turn) + ", expected " +
                         std::to_string(idx + 1));
    Side expected = idx % 2 == 0 ? Side::Alice : Side::Bob;
    if (r.side != expected) malformed(idx, "side out of order");

    for (Side s : {Side::Alice, Side::Bob}) {
      const std::vector<size_t>& now = s == Side::Alice ? r.live_alice : r.live_bob;
      const std::vector<size_t>& before = prev_live[s == Side::Bob];
      for (size_t l : before) {
        if (!std::binary_search(now.begin(), now.end(), l))
          violation(r.turn, std::string("liveness not monotone (") + side_name(s) +
                                " label " + std::to_string(l) + ")");
      }
      for (size_t l : now) {
        if (std::binary_search(before.begin(), before.end(), l)) continue;
        if (s != r.side) {
          violation(r.turn, std::string("liveness changed for non-moving side (") +
                                side_name(s) + " label " + std::to_string(l) + ")");
        }
        try {
          state.declare_live(s, l);
        } catch (const Error& e) {
          malformed(idx, e.what());
        }
        silent[{s == Side::Bob, l}] = 0;  // declaration anchors the fairness clock
      }
    }

    std::map<size_t, uint64_t> batch_offset;
    for (const AppendOp& op : r.appends) {
      if (op.at) {
        try {
          uint64_t len = state.seq(r.side, op.label).terms.size() + batch_offset[op.label];
          if (*op.at != len)
            violation(r.turn, "append-only broken at turn " + std::to_string(r.turn));
        } catch (const Error& e) {
          malformed(idx, e.what());
        }
      }
      ++batch_offset[op.label];
    }
    try {
      state.apply_batch({r.side, r.appends});
    } catch (const Error& e) {
      malformed(idx, e.what());
    }

    if (state.verdict() != r.verdict) violation(r.turn, "verdict mismatch");

    const std::vector<size_t>& own_live = r.side == Side::Alice ? r.live_alice : r.live_bob;
    for (size_t l : own_live) {
      auto key = std::make_pair(r.side == Side::Bob, l);
      bool appended = false;
      for (const AppendOp& op : r.appends) appended = appended || op.label == l;
      bool fresh = !std::binary_search(prev_live[r.side == Side::Bob].begin(),
                                       prev_live[r.side == Side::Bob].end(), l);
      if (appended || fresh) {
        silent[key] = 0;
      } else if (++silent[key] >= kFairnessWindow) {
        violation(r.turn, std::string("fairness broken for ") + side_name(r.side) +
                              " label " + std::to_string(l));
        silent[key] = 0;
      }
    }

    prev_live[0] = r.live_alice;
    prev_live[1] = r.live_bob;

    if (observer) observer->on_turn(state, r);
  }

  // verdict permanence while the bob live-set stays frozen through the end
  size_t frozen_from = 0;
  for (size_t i = 1; i < trace.records.size(); ++i) {
    if (trace.records[i].live_bob != trace.records[i - 1].live_bob) frozen_from = i;
  }
  bool witnessed_seen = false;
  for (size_t i = frozen_from; i < trace.records.size(); ++i) {
    if (trace.records[i].verdict == Verdict::AliceWinWitnessed) {
      witnessed_seen = true;
    } else if (witnessed_seen) {
      violation(trace.records[i].turn, "verdict regressed after bob live-set froze");
    }
  }

  return report;
}

}  // namespace seqgame
