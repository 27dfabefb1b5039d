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

#ifndef PENROSE_REP_IO_HPP
#define PENROSE_REP_IO_HPP

#include <string>
#include <string_view>

#include "penrose/representation.hpp"

namespace penrose {

/// {"trunc_level": L, "states": [...], "generators": {"W:<n>:<L|S>": [[i,j],...]}}
/// Only forward generators are written, pairs in row-major order, keys in
/// level order with L before S.
std::string write_rep_json(const RelRep& rep, int indent = 2);

/// Throws FormatError on malformed JSON, missing or unknown generator keys,
/// or out-of-range pairs.
RelRep read_rep_json(std::string_view text);

/// {"trunc_level": L, "states": [...], "blocks": [[i,...],...], "sigma": ["010",...]}
std::string write_sigma_json(const SigmaSpec& spec, int indent = 2);
SigmaSpec read_sigma_json(std::string_view text);

/// "W:<n>:<L|S>"
std::string generator_key(std::size_t level, Tile tile);

}  // namespace penrose

#endif  // PENROSE_REP_IO_HPP
