#include "seqgame/machine.hpp"

#include <array>
#include <bit>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace seqgame {

namespace {

const char* opcode_name(Opcode op) {
  switch (op) {
    case Opcode::Push0: return "PUSH0";
    case Opcode::Inc: return "INC";
    case Opcode::Add: return "ADD";
    case Opcode::Dup: return "DUP";
    case Opcode::Pop: return "POP";
    case Opcode::Input: return "INPUT";
    case Opcode::JnzBack:
    case Opcode::JnzFwd: return "JNZ";
  }
  return "?";
}

// all 22 encodable instructions in ascending encoding order
std::vector<Instr> instr_order() {
  std::vector<Instr> order;
  for (int op = 0; op < 6; ++op) order.push_back({Opcode(op), 0});
  for (int m = 0; m < 8; ++m) order.push_back({Opcode::JnzBack, uint8_t(m)});
  for (int m = 0; m < 8; ++m) order.push_back({Opcode::JnzFwd, uint8_t(m)});
  return order;
}

void emit_with_exact_bits(uint64_t remaining, const std::vector<Instr>& order,
                          Program& prefix, std::vector<Program>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (const Instr& ins : order) {
    if (uint64_t(ins.bits()) > remaining) continue;
    prefix.instrs.push_back(ins);
    emit_with_exact_bits(remaining - ins.bits(), order, prefix, out);
    prefix.instrs.pop_back();
  }
}

}  // namespace

Instr jnz(int offset) {
  if (offset >= 1 && offset <= 8) return {Opcode::JnzFwd, uint8_t(offset - 1)};
  if (offset <= -1 && offset >= -8) return {Opcode::JnzBack, uint8_t(-offset - 1)};
  throw Error(ErrorCode::ParseError,
              "JNZ offset " + std::to_string(offset) + " outside [-8,-1] and [1,8]");
}

size_t Program::bit_length() const {
  size_t total = 0;
  for (const Instr& ins : instrs) total += ins.bits();
  return total;
}

uint64_t Program::encoding_value() const {
  uint64_t value = 0;
  for (bool bit : encode_program(*this)) value = (value << 1) | uint64_t(bit);
  return value;
}

bool program_less(const Program& a, const Program& b) {
  size_t la = a.bit_length(), lb = b.bit_length();
  if (la != lb) return la < lb;
  return encode_program(a) < encode_program(b);  // same length: lex == numeric
}

std::vector<bool> encode_program(const Program& p) {
  std::vector<bool> bits;
  bits.reserve(p.bit_length());
  for (const Instr& ins : p.instrs) {
    uint8_t op = uint8_t(ins.op);
    for (int i = 2; i >= 0; --i) bits.push_back((op >> i) & 1);
    if (ins.is_jnz()) {
      for (int i = 2; i >= 0; --i) bits.push_back((ins.mag >> i) & 1);
    }
  }
  return bits;
}

Program decode_program(const std::vector<bool>& bits) {
  Program p;
  size_t pos = 0;
  auto take3 = [&](const char* what) {
    if (pos + 3 > bits.size())
      throw Error(ErrorCode::ParseError,
                  std::string("truncated ") + what + " at bit " + std::to_string(pos));
    uint8_t v = uint8_t(bits[pos] * 4 + bits[pos + 1] * 2 + bits[pos + 2]);
    pos += 3;
    return v;
  };
  while (pos < bits.size()) {
    uint8_t op = take3("opcode");
    Instr ins{Opcode(op), 0};
    if (ins.is_jnz()) ins.mag = take3("JNZ offset");
    p.instrs.push_back(ins);
  }
  return p;
}

std::string program_to_text(const Program& p) {
  std::string out;
  for (const Instr& ins : p.instrs) {
    if (!out.empty()) out += ' ';
    out += opcode_name(ins.op);
    if (ins.is_jnz()) {
      int off = ins.offset();
      out += '(';
      if (off > 0) out += '+';
      out += std::to_string(off);
      out += ')';
    }
  }
  return out;
}

Program parse_program_text(const std::string& text) {
  Program p;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "PUSH0") p.instrs.push_back({Opcode::Push0, 0});
    else if (tok == "INC") p.instrs.push_back({Opcode::Inc, 0});
    else if (tok == "ADD") p.instrs.push_back({Opcode::Add, 0});
    else if (tok == "DUP") p.instrs.push_back({Opcode::Dup, 0});
    else if (tok == "POP") p.instrs.push_back({Opcode::Pop, 0});
    else if (tok == "INPUT") p.instrs.push_back({Opcode::Input, 0});
    else if (tok.size() >= 6 && tok.rfind("JNZ(", 0) == 0 && tok.back() == ')') {
      int off = 0;
      try {
        size_t used = 0;
        std::string body = tok.substr(4, tok.size() - 5);
        off = std::stoi(body, &used);
        if (used != body.size()) throw std::invalid_argument(body);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad JNZ token '" + tok + "'");
      }
      p.instrs.push_back(jnz(off));
    } else {
      throw Error(ErrorCode::ParseError, "unknown mnemonic '" + tok + "'");
    }
  }
  return p;
}

ExecResult run_program(const Program& p, uint64_t input, uint64_t budget) {
  std::vector<uint64_t> stack;
  int64_t pc = 0;
  uint64_t steps = 0;
  const int64_t len = int64_t(p.instrs.size());

  while (true) {
    if (pc < 0 || pc >= len) {
      uint64_t top = stack.empty() ? 0 : stack.back();
      return {RunStatus::Halted, top, steps};
    }
    if (steps == budget) return {RunStatus::OutOfBudget, 0, steps};
    const Instr& ins = p.instrs[size_t(pc)];
    ++steps;
    switch (ins.op) {
      case Opcode::Push0:
        stack.push_back(0);
        ++pc;
        break;
      case Opcode::Inc:
        if (stack.empty()) return {RunStatus::StackFault, 0, steps};
        ++stack.back();
        ++pc;
        break;
      case Opcode::Add: {
        if (stack.size() < 2) return {RunStatus::StackFault, 0, steps};
        uint64_t a = stack.back();
        stack.pop_back();
        stack.back() += a;
        ++pc;
        break;
      }
      case Opcode::Dup:
        if (stack.empty()) return {RunStatus::StackFault, 0, steps};
        stack.push_back(stack.back());
        ++pc;
        break;
      case Opcode::Pop:
        if (stack.empty()) return {RunStatus::StackFault, 0, steps};
        stack.pop_back();
        ++pc;
        break;
      case Opcode::Input:
        stack.push_back(input);
        ++pc;
        break;
      case Opcode::JnzBack:
      case Opcode::JnzFwd: {
        if (stack.empty()) return {RunStatus::StackFault, 0, steps};
        uint64_t test = stack.back();
        stack.pop_back();
        pc = test != 0 ? pc + ins.offset() : pc + 1;
        break;
      }
    }
  }
}

ExecResult clamp_to_budget(const ExecResult& full, uint64_t budget) {
  if (full.status != RunStatus::OutOfBudget && full.steps <= budget) return full;
  return {RunStatus::OutOfBudget, 0, budget};
}

void MachineParams::validate() const {
  if (K < 1 || S < 1 || L < 3)
    throw Error(ErrorCode::ConfigError, "machine params need K >= 1, S >= 1, L >= 3");
}

std::vector<Program> enumerate_programs(uint64_t max_bits) {
  std::vector<Program> out;
  const std::vector<Instr> order = instr_order();
  Program prefix;
  for (uint64_t n = 3; n <= max_bits; n += 3) {
    emit_with_exact_bits(n, order, prefix, out);
  }
  return out;
}

uint64_t program_count(uint64_t max_bits) { return enumerate_programs(max_bits).size(); }

bool budgeted_totality(const Program& p, const MachineParams& params) {
  for (uint64_t x = 0; x <= params.K; ++x) {
    if (!run_program(p, x, params.S).halted()) return false;
  }
  return true;
}

uint64_t CountAdvice::bit_size() const { return std::bit_width(universe); }

CountAdvice advice_count(uint64_t n, const MachineParams& params) {
  params.validate();
  if (n > params.L)
    throw Error(ErrorCode::ConfigError, "advice size n exceeds enumeration limit L");
  CountAdvice advice{n, params, 0, 0};
  for (const Program& p : enumerate_programs(n)) {
    ++advice.universe;
    if (budgeted_totality(p, params)) ++advice.count;
  }
  return advice;
}

BitvectorAdvice advice_bitvector(uint64_t n, const MachineParams& params) {
  params.validate();
  if (n > params.L)
    throw Error(ErrorCode::ConfigError, "advice size n exceeds enumeration limit L");
  BitvectorAdvice advice{n, params, {}};
  for (const Program& p : enumerate_programs(n)) {
    advice.bits.push_back(budgeted_totality(p, params));
  }
  return advice;
}

std::string bits_to_hex(const std::vector<bool>& bits) {
  std::string out;
  size_t nbytes = (bits.size() + 7) / 8;
  for (size_t i = 0; i < nbytes; ++i) {
    unsigned byte = 0;
    for (size_t j = 0; j < 8 && i * 8 + j < bits.size(); ++j) {
      if (bits[i * 8 + j]) byte |= 1u << j;
    }
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", byte);
    out += buf;
  }
  return out;
}

std::string advice_to_json(const CountAdvice& a) {
  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["K"] = a.params.K;
  j["S"] = a.params.S;
  j["count"] = a.count;
  return j.dump();
}

std::string advice_to_json(const BitvectorAdvice& a) {
  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["K"] = a.params.K;
  j["S"] = a.params.S;
  j["bits"] = bits_to_hex(a.bits);
  return j.dump();
}

}  // namespace seqgame
