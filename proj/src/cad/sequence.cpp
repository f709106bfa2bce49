// SPDX-License-Identifier: Apache-2.0
#include "cadrev/cad/sequence.hpp"

#include <sstream>

#include "cadrev/error.hpp"

namespace cadrev::cad {

std::string CommandMatrix::to_text() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (int c = 0; c <= kParamSlots; ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

CommandMatrix CommandMatrix::from_text(const std::string& text) {
  CommandMatrix m;
  std::istringstream in(text);
  for (int r = 0; r < kMaxSequenceLength; ++r)
    for (int c = 0; c <= kParamSlots; ++c) {
      int v;
      if (!(in >> v))
        fail(errc::parse, "matrix text: expected 60x17 integers, ran out at row " +
                              std::to_string(r));
      m.rows[r][c] = static_cast<std::int16_t>(v);
    }
  return m;
}

CadSequence CadSequence::stripped() const {
  CadSequence out = *this;
  while (!out.commands.empty() && out.commands.back().kind == CommandKind::Eos)
    out.commands.pop_back();
  return out;
}

ValidationReport validate(const CadSequence& seq) {
  ValidationReport report;
  auto flag = [&](int index, const char* rule, std::string message) {
    report.valid = false;
    report.violations.push_back({index, rule, std::move(message)});
  };

  if (seq.size() > kMaxSequenceLength)
    flag(-1, "V6", "sequence holds " + std::to_string(seq.size()) +
                       " commands, limit is 60");

  bool in_loop = false;        // a Sol has opened a loop that is still being filled
  int loop_curves = 0;         // curves in the current loop
  bool loop_has_circle = false;
  int loop_start = -1;
  bool pending_profile = false;  // at least one finished loop awaits an Extrude
  bool seen_extrude = false;
  bool seen_eos = false;

  auto close_loop = [&](int at) {
    if (!in_loop) return;
    if (loop_curves == 0)
      flag(loop_start, "V2", "loop opened at " + std::to_string(loop_start) +
                                 " has no curves");
    else if (loop_has_circle && loop_curves > 1)
      flag(loop_start, "V2", "circle must be the only curve of its loop");
    else if (!loop_has_circle && loop_curves < 2)
      flag(loop_start, "V2",
           "line/arc loop needs at least 2 curves to close structurally");
    (void)at;
    in_loop = false;
    pending_profile = true;
  };

  const auto& cmds = seq.commands;
  for (int i = 0; i < static_cast<int>(cmds.size()); ++i) {
    const CadCommand& cmd = cmds[i];
    if (seen_eos) {
      flag(i, "V5", std::string(kind_name(cmd.kind)) + " after EOS");
      break;
    }
    switch (cmd.kind) {
      case CommandKind::Sol:
        close_loop(i);
        in_loop = true;
        loop_curves = 0;
        loop_has_circle = false;
        loop_start = i;
        break;
      case CommandKind::Line:
      case CommandKind::Arc:
      case CommandKind::Circle:
        if (!in_loop) {
          flag(i, "V1", std::string(kind_name(cmd.kind)) +
                            " outside any loop (no preceding SOL)");
        } else {
          ++loop_curves;
          if (cmd.kind == CommandKind::Circle) loop_has_circle = true;
        }
        break;
      case CommandKind::Extrude: {
        close_loop(i);
        if (!pending_profile)
          flag(i, "V3", "extrude at " + std::to_string(i) +
                            " has no sketch loops to consume");
        pending_profile = false;
        if (!seen_extrude && cmd.params[9] != 0)
          flag(i, "V4", "first extrude must start a new body (b=0), got b=" +
                            std::to_string(cmd.params[9]));
        seen_extrude = true;
        break;
      }
      case CommandKind::Eos:
        seen_eos = true;
        break;
    }
  }
  close_loop(static_cast<int>(cmds.size()));
  if (pending_profile) {
    int at = static_cast<int>(cmds.size()) - 1;
    flag(at, "V3", "sketch loops not followed by an extrude");
  }
  return report;
}

CommandMatrix to_vector(const CadSequence& seq) {
  CadSequence s = seq.stripped();
  if (s.size() > kMaxSequenceLength)
    fail(errc::capacity, "sequence holds " + std::to_string(s.size()) +
                             " commands, vectorization limit is 60");
  CommandMatrix m;
  for (int r = 0; r < kMaxSequenceLength; ++r) {
    auto& row = m.rows[r];
    if (r < static_cast<int>(s.size())) {
      const CadCommand& cmd = s.commands[r];
      row[0] = static_cast<std::int16_t>(cmd.kind);
      for (int j = 0; j < kParamSlots; ++j) row[j + 1] = cmd.params[j];
    } else {
      row[0] = static_cast<std::int16_t>(CommandKind::Eos);
      for (int j = 0; j < kParamSlots; ++j) row[j + 1] = kUnusedSlot;
    }
  }
  return m;
}

CadSequence from_vector(const CommandMatrix& matrix) {
  CadSequence seq;
  for (int r = 0; r < kMaxSequenceLength; ++r) {
    const auto& row = matrix.rows[r];
    if (row[0] < 0 || row[0] >= kCommandKindCount)
      fail(errc::decode, "row " + std::to_string(r) + ": kind index " +
                             std::to_string(row[0]) + " outside [0,5]");
    std::array<std::int16_t, kParamSlots> slots{};
    for (int j = 0; j < kParamSlots; ++j) {
      std::int16_t v = row[j + 1];
      if (v < kUnusedSlot || v > 255)
        fail(errc::decode, "row " + std::to_string(r) + " slot " +
                               std::to_string(j) + ": value " + std::to_string(v) +
                               " outside {-1} u [0,255]");
      slots[j] = v;
    }
    seq.commands.push_back(
        CadCommand::from_slots(static_cast<CommandKind>(row[0]), slots));
  }
  return seq.stripped();
}

}  // namespace cadrev::cad
