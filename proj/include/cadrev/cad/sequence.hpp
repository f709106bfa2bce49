// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cadrev/cad/command.hpp"

namespace cadrev::cad {

// 60 x 17 integer encoding: column 0 is the command kind index, columns 1-16
// the parameter bins (-1 for unused). Rows past the end of the sequence are
// Eos rows.
struct CommandMatrix {
  std::array<std::array<std::int16_t, kParamSlots + 1>, kMaxSequenceLength> rows{};

  std::string to_text() const;
  static CommandMatrix from_text(const std::string& text);

  bool operator==(const CommandMatrix& other) const = default;
};

struct CadSequence {
  std::vector<CadCommand> commands;

  bool operator==(const CadSequence& other) const = default;

  std::size_t size() const { return commands.size(); }
  bool empty() const { return commands.empty(); }

  // Canonical form used for position-wise comparison and vectorization:
  // trailing Eos commands stripped.
  CadSequence stripped() const;
};

struct Violation {
  int index;        // command index the rule fired on (or -1 for whole-sequence rules)
  std::string rule; // V1..V6
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Structural validity:
//   V1 curve commands only inside a loop opened by Sol
//   V2 every loop closes: a lone Circle, or >= 2 chained Line/Arc curves
//   V3 each run of loops is followed by Extrude, and every Extrude consumes
//      at least one loop
//   V4 the first Extrude starts a new body (b == 0)
//   V5 nothing follows Eos
//   V6 length <= 60
ValidationReport validate(const CadSequence& seq);

CommandMatrix to_vector(const CadSequence& seq);
CadSequence from_vector(const CommandMatrix& matrix);

}  // namespace cadrev::cad
