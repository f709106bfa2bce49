// SPDX-License-Identifier: Apache-2.0
#include "cadrev/cad/command.hpp"

#include <cmath>

#include "cadrev/error.hpp"

namespace cadrev::cad {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Slot layouts. Curve coordinates and plane origins live in [-1,1] (the
// model is normalized into the unit cube), sweep angles in [0,2*pi], radius
// and sketch scale in [0,1], extrude distances in [-1,1]. Discrete flags are
// stored directly as small bins.
const ParamSpec kLineSpec[] = {
    {"x", -1.0, 1.0, false, 0},
    {"y", -1.0, 1.0, false, 0},
};
const ParamSpec kArcSpec[] = {
    {"x", -1.0, 1.0, false, 0},
    {"y", -1.0, 1.0, false, 0},
    {"sweep", 0.0, 2.0 * kPi, false, 0},
    {"ccw", 0.0, 1.0, true, 2},
};
const ParamSpec kCircleSpec[] = {
    {"x", -1.0, 1.0, false, 0},
    {"y", -1.0, 1.0, false, 0},
    {"r", 0.0, 1.0, false, 0},
};
const ParamSpec kExtrudeSpec[] = {
    {"theta", 0.0, kPi, false, 0},
    {"phi", -kPi, kPi, false, 0},
    {"gamma", -kPi, kPi, false, 0},
    {"px", -1.0, 1.0, false, 0},
    {"py", -1.0, 1.0, false, 0},
    {"pz", -1.0, 1.0, false, 0},
    {"s", 0.0, 1.0, false, 0},
    {"e1", -1.0, 1.0, false, 0},
    {"e2", -1.0, 1.0, false, 0},
    {"b", 0.0, 3.0, true, 4},
    {"u", 0.0, 2.0, true, 3},
};

}  // namespace

const char* kind_name(CommandKind kind) {
  switch (kind) {
    case CommandKind::Sol: return "SOL";
    case CommandKind::Line: return "Line";
    case CommandKind::Arc: return "Arc";
    case CommandKind::Circle: return "Circle";
    case CommandKind::Extrude: return "Extrude";
    case CommandKind::Eos: return "EOS";
  }
  return "?";
}

int arity(CommandKind kind) {
  switch (kind) {
    case CommandKind::Sol: return 0;
    case CommandKind::Line: return 2;
    case CommandKind::Arc: return 4;
    case CommandKind::Circle: return 3;
    case CommandKind::Extrude: return 11;
    case CommandKind::Eos: return 0;
  }
  return 0;
}

const ParamSpec& param_spec(CommandKind kind, int slot) {
  if (slot < 0 || slot >= arity(kind))
    fail(errc::range, std::string("param_spec: slot ") + std::to_string(slot) +
                          " out of range for " + kind_name(kind));
  switch (kind) {
    case CommandKind::Line: return kLineSpec[slot];
    case CommandKind::Arc: return kArcSpec[slot];
    case CommandKind::Circle: return kCircleSpec[slot];
    case CommandKind::Extrude: return kExtrudeSpec[slot];
    default: break;
  }
  fail(errc::range, std::string(kind_name(kind)) + " has no parameters");
}

int quantize(double value, double lo, double hi) {
  if (!(lo < hi)) fail(errc::range, "quantize: lo must be < hi");
  if (!(value >= lo && value <= hi))
    fail(errc::range, "quantize: value " + std::to_string(value) +
                          " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  // round-half-up keeps the mapping deterministic across platforms
  int bin = static_cast<int>(std::floor((value - lo) / (hi - lo) * 255.0 + 0.5));
  if (bin < 0) bin = 0;
  if (bin > 255) bin = 255;
  return bin;
}

double dequantize(int bin, double lo, double hi) {
  if (bin < 0 || bin > 255)
    fail(errc::range, "dequantize: bin " + std::to_string(bin) + " outside [0,255]");
  return lo + static_cast<double>(bin) / 255.0 * (hi - lo);
}

bool is_curve(CommandKind kind) {
  return kind == CommandKind::Line || kind == CommandKind::Arc ||
         kind == CommandKind::Circle;
}

namespace {

std::int16_t checked_bin(int value, const char* field) {
  if (value < 0 || value > 255)
    fail(errc::range, std::string("parameter ") + field + " bin " +
                          std::to_string(value) + " outside [0,255]");
  return static_cast<std::int16_t>(value);
}

CadCommand make(CommandKind kind, std::initializer_list<int> values) {
  CadCommand cmd;
  cmd.kind = kind;
  cmd.params.fill(kUnusedSlot);
  int slot = 0;
  for (int v : values)
    cmd.params[slot] = checked_bin(v, param_spec(kind, slot).name), ++slot;
  return cmd;
}

}  // namespace

CadCommand CadCommand::sol() { return make(CommandKind::Sol, {}); }
CadCommand CadCommand::eos() { return make(CommandKind::Eos, {}); }

CadCommand CadCommand::line(int x, int y) {
  return make(CommandKind::Line, {x, y});
}

CadCommand CadCommand::arc(int x, int y, int sweep, int ccw) {
  return make(CommandKind::Arc, {x, y, sweep, ccw});
}

CadCommand CadCommand::circle(int x, int y, int r) {
  return make(CommandKind::Circle, {x, y, r});
}

CadCommand CadCommand::extrude(int theta, int phi, int gamma, int px, int py,
                               int pz, int s, int e1, int e2, int b, int u) {
  return make(CommandKind::Extrude, {theta, phi, gamma, px, py, pz, s, e1, e2, b, u});
}

CadCommand CadCommand::from_slots(CommandKind kind,
                                  const std::array<std::int16_t, kParamSlots>& slots) {
  CadCommand cmd;
  cmd.kind = kind;
  cmd.params.fill(kUnusedSlot);
  const int n = arity(kind);
  for (int j = 0; j < n; ++j) {
    std::int16_t v = slots[j];
    if (v == kUnusedSlot) v = 0;  // canonical arity mask: required slots always carry a bin
    if (v < 0 || v > 255)
      fail(errc::decode, std::string("slot ") + std::to_string(j) + " of " +
                             kind_name(kind) + " holds bin " + std::to_string(v));
    cmd.params[j] = v;
  }
  return cmd;
}

}  // namespace cadrev::cad
