// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cadrev::cad {

// Command vocabulary. A program is a flat list of these; sketch loops are
// opened by Sol, filled with curve commands, and turned into solids by
// Extrude. Eos terminates and pads.
enum class CommandKind : std::uint8_t {
  Sol = 0,
  Line = 1,
  Arc = 2,
  Circle = 3,
  Extrude = 4,
  Eos = 5,
};

inline constexpr int kCommandKindCount = 6;
inline constexpr int kParamSlots = 16;
inline constexpr int kMaxSequenceLength = 60;
inline constexpr int kQuantBins = 256;
// Matrix encoding of an unused parameter slot.
inline constexpr int kUnusedSlot = -1;

const char* kind_name(CommandKind kind);

// Number of parameter slots a command kind populates. Parameters are packed
// into the first `arity` slots; the rest stay unused.
//   Line:    x, y
//   Arc:     x, y, sweep, ccw
//   Circle:  x, y, r
//   Extrude: theta, phi, gamma, px, py, pz, s, e1, e2, b, u
int arity(CommandKind kind);

// Continuous normalization range of a parameter slot, or a discrete bin count.
struct ParamSpec {
  const char* name;
  double lo;
  double hi;
  bool discrete;   // stored directly as bins 0..cardinality-1
  int cardinality; // only meaningful when discrete
};

// Spec of slot `slot` for commands of kind `kind`; slot < arity(kind).
const ParamSpec& param_spec(CommandKind kind, int slot);

// 8-bit quantization over [lo, hi], round-half-up.
int quantize(double value, double lo, double hi);
double dequantize(int bin, double lo, double hi);

struct CadCommand {
  CommandKind kind = CommandKind::Eos;
  // Quantized bins in [0,255] for the first arity(kind) slots, kUnusedSlot
  // beyond. Canonical by construction.
  std::array<std::int16_t, kParamSlots> params{};

  static CadCommand sol();
  static CadCommand eos();
  static CadCommand line(int x, int y);
  static CadCommand arc(int x, int y, int sweep, int ccw);
  static CadCommand circle(int x, int y, int r);
  static CadCommand extrude(int theta, int phi, int gamma, int px, int py,
                            int pz, int s, int e1, int e2, int b, int u);

  // Builds a command from a raw slot array, forcing the canonical arity mask
  // (extra slots dropped, missing required slots default to bin 0).
  static CadCommand from_slots(CommandKind kind,
                               const std::array<std::int16_t, kParamSlots>& slots);

  bool operator==(const CadCommand& other) const = default;
};

bool is_curve(CommandKind kind);

}  // namespace cadrev::cad
