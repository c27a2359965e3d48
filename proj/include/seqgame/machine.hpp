#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqgame/error.hpp"

namespace seqgame {

// 3 opcode bits; JnzBack/JnzFwd carry 3 extra magnitude bits.
enum class Opcode : uint8_t {
  Push0 = 0,
  Inc = 1,
  Add = 2,
  Dup = 3,
  Pop = 4,
  Input = 5,
  JnzBack = 6,
  JnzFwd = 7,
};

struct Instr {
  Opcode op = Opcode::Push0;
  uint8_t mag = 0;  // |offset| - 1, meaningful only for JnzBack/JnzFwd

  bool is_jnz() const { return op == Opcode::JnzBack || op == Opcode::JnzFwd; }
  int bits() const { return is_jnz() ? 6 : 3; }
  int offset() const { return op == Opcode::JnzBack ? -(int(mag) + 1) : int(mag) + 1; }

  bool operator==(const Instr&) const = default;
};

Instr jnz(int offset);  // offset in [-8,-1] or [1,8], else ParseError

struct Program {
  std::vector<Instr> instrs;

  size_t bit_length() const;
  uint64_t encoding_value() const;  // encoded bits read MSB-first; needs bit_length <= 64

  bool operator==(const Program&) const = default;
};

// length-lex order: (bit_length, encoding value)
bool program_less(const Program& a, const Program& b);

std::vector<bool> encode_program(const Program& p);
Program decode_program(const std::vector<bool>& bits);  // ParseError if not an encoding

std::string program_to_text(const Program& p);
Program parse_program_text(const std::string& text);  // ParseError on bad mnemonics

enum class RunStatus { Halted, OutOfBudget, StackFault };

struct ExecResult {
  RunStatus status = RunStatus::OutOfBudget;
  uint64_t value = 0;  // top of stack at halt, 0 if the stack is empty
  uint64_t steps = 0;  // instructions started before the run settled

  bool halted() const { return status == RunStatus::Halted; }
  bool operator==(const ExecResult&) const = default;
};

ExecResult run_program(const Program& p, uint64_t input, uint64_t budget);

// What the same run would have returned under a smaller budget.
ExecResult clamp_to_budget(const ExecResult& full, uint64_t budget);

struct MachineParams {
  uint64_t K = 8;   // totality probed on inputs 0..K
  uint64_t S = 256; // step budget per run
  uint64_t L = 12;  // max program bit-length enumerated

  void validate() const;  // ConfigError unless K >= 1, S >= 1, L >= 3
  bool operator==(const MachineParams&) const = default;
};

// Every program with bit_length <= max_bits, in length-lex order.
// A program's position in this list is its canonical index.
std::vector<Program> enumerate_programs(uint64_t max_bits);

uint64_t program_count(uint64_t max_bits);  // P_n

bool budgeted_totality(const Program& p, const MachineParams& params);

struct CountAdvice {
  uint64_t n = 0;
  MachineParams params;
  uint64_t universe = 0;  // P_n
  uint64_t count = 0;     // budgeted-total programs with bit_length <= n

  uint64_t bit_size() const;  // ceil(log2(P_n + 1))
};

struct BitvectorAdvice {
  uint64_t n = 0;
  MachineParams params;
  std::vector<bool> bits;  // per program with bit_length <= n, length-lex order

  uint64_t bit_size() const { return bits.size(); }
};

CountAdvice advice_count(uint64_t n, const MachineParams& params);
BitvectorAdvice advice_bitvector(uint64_t n, const MachineParams& params);

std::string advice_to_json(const CountAdvice& a);
std::string advice_to_json(const BitvectorAdvice& a);

// bits packed LSB-first within each byte, trailing zero-padded, lowercase hex
std::string bits_to_hex(const std::vector<bool>& bits);

}  // namespace seqgame
