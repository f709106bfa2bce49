// SPDX-License-Identifier: Apache-2.0
#include "cadrev/cad/json_io.hpp"

#include <fstream>
#include <map>

#include <json.hpp>

#include "cadrev/error.hpp"

namespace cadrev::cad {

using nlohmann::json;

namespace {

// JSON field order per kind; index in this list is the slot index.
const std::map<std::string, std::pair<CommandKind, std::vector<std::string>>> kSchema = {
    {"SOL", {CommandKind::Sol, {}}},
    {"Line", {CommandKind::Line, {"x", "y"}}},
    {"Arc", {CommandKind::Arc, {"x", "y", "sweep", "ccw"}}},
    {"Circle", {CommandKind::Circle, {"x", "y", "r"}}},
    {"Extrude",
     {CommandKind::Extrude,
      {"theta", "phi", "gamma", "px", "py", "pz", "s", "e1", "e2", "b", "u"}}},
    {"EOS", {CommandKind::Eos, {}}},
};

int require_bin(const json& obj, const std::string& field, const std::string& path) {
  auto it = obj.find(field);
  if (it == obj.end())
    fail(errc::parse, path + ": missing field '" + field + "'");
  if (!it->is_number_integer())
    fail(errc::parse, path + "." + field + ": expected an integer bin");
  int v = it->get<int>();
  if (v < 0 || v > 255)
    fail(errc::arity, path + "." + field + ": bin " + std::to_string(v) +
                          " outside [0,255]");
  return v;
}

}  // namespace

std::string to_json(const CadSequence& seq) {
  json doc;
  doc["version"] = 1;
  json commands = json::array();
  for (const CadCommand& cmd : seq.commands) {
    json c;
    c["kind"] = kind_name(cmd.kind);
    const auto& fields = kSchema.at(kind_name(cmd.kind)).second;
    for (std::size_t j = 0; j < fields.size(); ++j)
      c[fields[j]] = static_cast<int>(cmd.params[j]);
    commands.push_back(std::move(c));
  }
  doc["commands"] = std::move(commands);
  return doc.dump(2);
}

CadSequence parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::parse, "$: expected an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "version" && key != "commands")
      fail(errc::parse, "$: unknown field '" + key + "'");
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    fail(errc::parse, "$.version: expected 1");
  if (!doc.contains("commands") || !doc["commands"].is_array())
    fail(errc::parse, "$.commands: expected an array");

  const json& commands = doc["commands"];
  if (commands.size() > kMaxSequenceLength)
    fail(errc::capacity, "$.commands: " + std::to_string(commands.size()) +
                             " commands, limit is 60");

  CadSequence seq;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string path = "$.commands[" + std::to_string(i) + "]";
    const json& c = commands[i];
    if (!c.is_object()) fail(errc::parse, path + ": expected an object");
    if (!c.contains("kind") || !c["kind"].is_string())
      fail(errc::parse, path + ".kind: expected a string");
    const std::string kind = c["kind"].get<std::string>();
    auto schema = kSchema.find(kind);
    if (schema == kSchema.end())
      fail(errc::parse, path + ".kind: unknown kind '" + kind + "'");
    const auto& fields = schema->second.second;
    for (const auto& [key, value] : c.items()) {
      (void)value;
      if (key == "kind") continue;
      bool known = false;
      for (const auto& f : fields) known |= (f == key);
      if (!known) fail(errc::parse, path + ": unknown field '" + key + "'");
    }
    CadCommand cmd;
    cmd.kind = schema->second.first;
    cmd.params.fill(kUnusedSlot);
    for (std::size_t j = 0; j < fields.size(); ++j)
      cmd.params[j] = static_cast<std::int16_t>(require_bin(c, fields[j], path));
    seq.commands.push_back(cmd);
  }
  return seq;
}

CadSequence load_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return parse_json(text);
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

void save_sequence(const CadSequence& seq, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io, "cannot write " + path);
  out << to_json(seq) << '\n';
}

}  // namespace cadrev::cad
