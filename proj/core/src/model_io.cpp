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

#include "subvar/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace subvar {

namespace {

using nlohmann::json;

std::size_t index_in_range(const json& value, std::size_t n, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      static_cast<std::size_t>(value.get<long long>()) >= n) {
    throw ModelFormatError(std::string(what) + " must be an element index below n");
  }
  return static_cast<std::size_t>(value.get<long long>());
}

double finite_number(const json& value, const char* what) {
  if (!value.is_number()) throw ModelFormatError(std::string(what) + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ModelFormatError(std::string(what) + " must be finite");
  return x;
}

ModelSpec from_json(const json& root) {
  if (!root.is_object()) throw ModelFormatError("model must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "n" && key != "modular" && key != "edges" && key != "hops") {
      throw ModelFormatError("unknown model key '" + key + "'");
    }
  }
  ModelSpec model;
  if (!root.contains("n") || !root["n"].is_number_integer() || root["n"].get<long long>() < 0) {
    throw ModelFormatError("\"n\" must be a nonnegative integer");
  }
  model.n = static_cast<std::size_t>(root["n"].get<long long>());
  if (root.contains("modular")) {
    const auto& modular = root["modular"];
    if (!modular.is_array() || modular.size() != model.n) {
      throw ModelFormatError("\"modular\" must be an array of n numbers");
    }
    for (const auto& v : modular) model.modular.push_back(finite_number(v, "modular weight"));
  }
  if (root.contains("edges")) {
    if (!root["edges"].is_array()) throw ModelFormatError("\"edges\" must be an array");
    for (const auto& e : root["edges"]) {
      if (!e.is_array() || e.size() != 3) throw ModelFormatError("each edge must be [u, v, w]");
      WeightedEdge edge{index_in_range(e[0], model.n, "edge endpoint"),
                        index_in_range(e[1], model.n, "edge endpoint"),
                        finite_number(e[2], "edge weight")};
      if (edge.u == edge.v) throw ModelFormatError("edge endpoints must differ");
      if (edge.weight < 0.0) throw ModelFormatError("edge weights must be nonnegative");
      model.edges.push_back(edge);
    }
  }
  if (root.contains("hops")) {
    if (!root["hops"].is_array()) throw ModelFormatError("\"hops\" must be an array");
    for (const auto& h : root["hops"]) {
      if (!h.is_object() || !h.contains("elements") || !h["elements"].is_array()) {
        throw ModelFormatError("each hop needs an \"elements\" array");
      }
      ModelSpec::Hop hop;
      for (const auto& v : h["elements"]) hop.elements.push_back(index_in_range(v, model.n, "hop element"));
      hop.scale = h.contains("scale") ? finite_number(h["scale"], "hop scale") : 1.0;
      if (hop.scale < 0.0) throw ModelFormatError("hop scale must be nonnegative");
      if (h.contains("phi")) {
        if (!h["phi"].is_string()) throw ModelFormatError("hop phi must be a string tag");
        hop.phi = h["phi"].get<std::string>();
      }
      try {
        ConcaveFunction::from_tag(hop.phi);
      } catch (const std::invalid_argument& e) {
        throw ModelFormatError(e.what());
      }
      model.hops.push_back(std::move(hop));
    }
  }
  return model;
}

SubmodularOracle hop_oracle(const ModelSpec::Hop& hop, std::size_t n,
                            std::vector<std::size_t> region) {
  try {
    return SubmodularOracle::concave_cardinality(n, std::move(region), hop.scale,
                                                 ConcaveFunction::from_tag(hop.phi));
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(e.what());
  }
}

}  // namespace

ModelSpec parse_model(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(root);
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelFormatError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string serialize_model(const ModelSpec& model) {
  json root;
  root["n"] = model.n;
  if (!model.modular.empty()) root["modular"] = model.modular;
  if (!model.edges.empty()) {
    json edges = json::array();
    for (const auto& e : model.edges) edges.push_back({e.u, e.v, e.weight});
    root["edges"] = edges;
  }
  if (!model.hops.empty()) {
    json hops = json::array();
    for (const auto& h : model.hops) {
      hops.push_back({{"elements", h.elements}, {"scale", h.scale}, {"phi", h.phi}});
    }
    root["hops"] = hops;
  }
  return root.dump(2);
}

SubmodularOracle model_oracle(const ModelSpec& model) {
  std::vector<SubmodularOracle> terms;
  terms.push_back(SubmodularOracle::modular(
      model.modular.empty() ? ModularVector(model.n) : ModularVector(model.modular)));
  if (!model.edges.empty()) terms.push_back(SubmodularOracle::cut(model.n, model.edges));
  for (const auto& hop : model.hops) terms.push_back(hop_oracle(hop, model.n, hop.elements));
  if (terms.size() == 1) return terms.front();
  return SubmodularOracle::sum(std::move(terms));
}

FactorGraph model_factor_graph(const ModelSpec& model) {
  std::vector<Factor> factors;
  std::vector<std::size_t> all(model.n);
  for (std::size_t v = 0; v < model.n; ++v) all[v] = v;
  factors.push_back(Factor{
      SubmodularOracle::modular(model.modular.empty() ? ModularVector(model.n)
                                                      : ModularVector(model.modular)),
      all});
  for (const auto& e : model.edges) {
    if (e.u == e.v) continue;
    factors.push_back(Factor{SubmodularOracle::cut(2, {{0, 1, e.weight}}), {e.u, e.v}});
  }
  for (const auto& hop : model.hops) {
    if (hop.elements.empty()) continue;
    std::vector<std::size_t> local(hop.elements.size());
    for (std::size_t k = 0; k < local.size(); ++k) local[k] = k;
    factors.push_back(Factor{hop_oracle(hop, hop.elements.size(), std::move(local)), hop.elements});
  }
  return FactorGraph(model.n, std::move(factors));
}

}  // namespace subvar
