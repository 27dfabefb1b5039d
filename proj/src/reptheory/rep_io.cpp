// Copyright 2026 The penrose-quantale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "penrose/rep_io.hpp"

#include <set>

#include "json.hpp"
#include "penrose/error.hpp"

namespace penrose {

using ordered_json = nlohmann::ordered_json;

std::string generator_key(std::size_t level, Tile tile) {
  return "W:" + std::to_string(level) + ":" + tile_char(tile);
}

std::string write_rep_json(const RelRep& rep, int indent) {
  ordered_json j;
  j["trunc_level"] = rep.trunc_level();
  j["states"] = rep.states();
  ordered_json gens = ordered_json::object();
  for (std::size_t n = 0; n < rep.trunc_level(); ++n) {
    for (Tile t : {Tile::L, Tile::S}) {
      ordered_json pairs = ordered_json::array();
      for (const auto& [x, y] : rep.generator(n, t).pairs()) pairs.push_back({x, y});
      gens[generator_key(n, t)] = std::move(pairs);
    }
  }
  j["generators"] = std::move(gens);
  return j.dump(indent) + "\n";
}

namespace {

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const ordered_json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

RelRep read_rep_json(std::string_view text) {
  const auto j = parse_json(text);
  const auto levels = field<std::size_t>(j, "trunc_level");
  auto states = field<std::vector<std::string>>(j, "states");
  const auto gens = field<ordered_json>(j, "generators");
  if (!gens.is_object()) throw FormatError("'generators' must be an object");

  std::set<std::string> expected;
  std::vector<Relation> relations;
  for (std::size_t n = 0; n < levels; ++n) {
    for (Tile t : {Tile::L, Tile::S}) {
      const auto key = generator_key(n, t);
      expected.insert(key);
      if (!gens.contains(key)) throw FormatError("missing generator '" + key + "'");
      std::vector<StatePair> pairs;
      try {
        pairs = gens.at(key).get<std::vector<StatePair>>();
      } catch (const nlohmann::json::exception& e) {
        throw FormatError("generator '" + key + "': " + e.what());
      }
      try {
        relations.push_back(Relation::from_pairs(states.size(), pairs));
      } catch (const RangeError& e) {
        throw FormatError("generator '" + key + "': " + e.what());
      }
    }
  }
  for (const auto& [key, value] : gens.items()) {
    if (!expected.contains(key)) throw FormatError("unexpected generator '" + key + "'");
  }
  return RelRep(std::move(states), levels, std::move(relations));
}

std::string write_sigma_json(const SigmaSpec& spec, int indent) {
  ordered_json j;
  j["trunc_level"] = spec.trunc_level;
  j["states"] = spec.states;
  j["blocks"] = spec.blocks;
  ordered_json sigma = ordered_json::array();
  for (const auto& s : spec.sigma) sigma.push_back(s.str());
  j["sigma"] = std::move(sigma);
  return j.dump(indent) + "\n";
}

SigmaSpec read_sigma_json(std::string_view text) {
  const auto j = parse_json(text);
  SigmaSpec spec;
  spec.trunc_level = field<std::size_t>(j, "trunc_level");
  spec.states = field<std::vector<std::string>>(j, "states");
  spec.blocks = field<std::vector<std::vector<std::size_t>>>(j, "blocks");
  for (const auto& s : field<std::vector<std::string>>(j, "sigma")) {
    try {
      spec.sigma.push_back(TruncSeq::parse(s));
    } catch (const RangeError& e) {
      throw FormatError(std::string("sigma: ") + e.what());
    }
  }
  return spec;
}

}  // namespace penrose
