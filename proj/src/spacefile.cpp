// Copyright 2026 The choquet-tower Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctower/spacefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctower/error.hpp"

namespace ctower {

namespace {

using Json = nlohmann::ordered_json;

Scalar number(const Json& j, const std::string& where) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  // Integers stay exact; decimals are re-read from their shortest text form.
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number()) return Scalar::parse(j.dump());
  throw Error(ErrorCode::Parse, where + ": expected a number");
}

Capacity read_capacity(const FiniteSpace& space, const std::string& name, const Json& spec) {
  const std::string where = "capacity '" + name + "'";
  if (!spec.is_object() || !spec.contains("values")) throw Error(ErrorCode::Parse, where + ": needs \"values\"");
  const std::string mode = spec.value("mode", "full");
  const Json& values = spec.at("values");
  if (mode == "singletons-additive") {
    std::vector<Scalar> masses(space.size());
    if (values.is_array()) {
      if (values.size() != space.size()) throw Error(ErrorCode::Parse, where + ": one mass per point expected");
      for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = number(values[i], where);
    } else {
      std::vector<bool> seen(space.size(), false);
      for (const auto& [label, v] : values.items()) {
        std::size_t i = space.require_index(label);
        masses[i] = number(v, where);
        seen[i] = true;
      }
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw Error(ErrorCode::Parse, where + ": no mass for point '" + space.label(i) + "'");
      }
    }
    return Capacity::from_singletons(space, masses);
  }
  if (mode != "full") throw Error(ErrorCode::Parse, where + ": unknown mode '" + mode + "'");
  space.require_maskable();
  std::vector<Scalar> table(space.subset_count());
  std::vector<bool> seen(table.size(), false);
  seen[0] = true;
  for (const auto& [key, v] : values.items()) {
    if (key.size() != space.size() || key.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::Parse, where + ": bad subset key '" + key + "'");
    }
    Mask m = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == '1') m |= bit(i);
    }
    table[m] = number(v, where);
    seen[m] = true;
  }
  for (Mask m = 0; m < table.size(); ++m) {
    if (!seen[m]) throw Error(ErrorCode::Parse, where + ": no value for " + space.describe(m));
  }
  return Capacity::validate(space, std::move(table));
}

}  // namespace

const Act& SpaceFile::act(std::string_view name) const {
  for (const auto& [n, a] : acts) {
    if (n == name) return a;
  }
  throw Error(ErrorCode::NotFound, "no act named '" + std::string(name) + "'");
}

SpaceFile parse_space_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  try {
    if (!doc.contains("points") || !doc.contains("capacities")) {
      throw Error(ErrorCode::Parse, "space file needs \"points\" and \"capacities\"");
    }
    auto space = FiniteSpace::make(doc.at("points").get<std::vector<std::string>>());
    std::vector<std::string> names;
    std::vector<Capacity> caps;
    for (const auto& [name, spec] : doc.at("capacities").items()) {
      names.push_back(name);
      caps.push_back(read_capacity(space, name, spec));
    }
    SpaceFile file{UncertaintySpace::make(space, std::move(names), std::move(caps)), {}};
    if (doc.contains("acts")) {
      for (const auto& [name, spec] : doc.at("acts").items()) {
        std::vector<Scalar> values(space.size());
        if (spec.is_array()) {
          if (spec.size() != space.size()) throw Error(ErrorCode::Parse, "act '" + name + "': one value per point");
          for (std::size_t i = 0; i < values.size(); ++i) values[i] = number(spec[i], "act '" + name + "'");
        } else {
          std::vector<bool> seen(space.size(), false);
          for (const auto& [label, v] : spec.items()) {
            std::size_t i = space.require_index(label);
            values[i] = number(v, "act '" + name + "'");
            seen[i] = true;
          }
          for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) throw Error(ErrorCode::Parse, "act '" + name + "': no value at '" + space.label(i) + "'");
          }
        }
        file.acts.emplace_back(name, Act(space, std::move(values)));
      }
    }
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

SpaceFile load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_json(buf.str());
}

}  // namespace ctower
