// Copyright 2026 The subvar Authors.
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

#ifndef SUBVAR_MODEL_IO_HPP_
#define SUBVAR_MODEL_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "subvar/factor_graph.hpp"
#include "subvar/set_function.hpp"

namespace subvar {

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model file contents:
///   {"n": 3, "modular": [..], "edges": [[u, v, w], ..],
///    "hops": [{"elements": [..], "scale": c, "phi": "z(1-z)"}, ..]}
/// Every key but "n" is optional.
struct ModelSpec {
  struct Hop {
    std::vector<std::size_t> elements;
    double scale = 0.0;
    std::string phi = "z(1-z)";
  };

  std::size_t n = 0;
  std::vector<double> modular;
  std::vector<WeightedEdge> edges;
  std::vector<Hop> hops;
};

/// Throws ModelFormatError on malformed JSON or invalid contents.
ModelSpec parse_model(const std::string& json_text);
ModelSpec load_model(const std::string& path);
std::string serialize_model(const ModelSpec& model);

/// Sum of the modular part, one cut over all edges, and one concave term per hop.
SubmodularOracle model_oracle(const ModelSpec& model);

/// Modular part as one factor over all variables, one cut factor per edge,
/// one concave-cardinality factor per hop.
FactorGraph model_factor_graph(const ModelSpec& model);

}  // namespace subvar

#endif  // SUBVAR_MODEL_IO_HPP_
