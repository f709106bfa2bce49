// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "cadrev/cad/sequence.hpp"

namespace cadrev::cad {

// Program files:
//   {"version":1,"commands":[{"kind":"SOL"},{"kind":"Line","x":..,"y":..},...]}
// All parameter values are quantized bins. Unknown fields are rejected.
std::string to_json(const CadSequence& seq);
CadSequence parse_json(const std::string& text);

CadSequence load_sequence(const std::string& path);
void save_sequence(const CadSequence& seq, const std::string& path);

}  // namespace cadrev::cad
