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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "subvar/evaluation.hpp"
#include "subvar/image.hpp"
#include "subvar/inference.hpp"
#include "subvar/message_passing.hpp"
#include "subvar/model_io.hpp"
#include "subvar/report_io.hpp"
#include "subvar/segmentation.hpp"
#include "subvar/solvers.hpp"

namespace subvar {
namespace {

using nlohmann::json;

constexpr std::size_t kExactLimit = 20;

// Usage-level failure: bad flags, unreadable or malformed inputs.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InferMethod { kMinNorm, kDivideAndConquer, kFrankWolfe, kParallelMp, kSequentialEp };

InferMethod parse_infer_method(std::string name) {
  std::replace(name.begin(), name.end(), '_', '-');
  if (name == "mp" || name == "message-passing") return InferMethod::kParallelMp;
  if (name == "ep" || name == "sequential-ep") return InferMethod::kSequentialEp;
  try {
    switch (parse_lfield_method(name)) {
      case LFieldMethod::kMinNorm: return InferMethod::kMinNorm;
      case LFieldMethod::kDivideAndConquer: return InferMethod::kDivideAndConquer;
      case LFieldMethod::kFrankWolfe: return InferMethod::kFrankWolfe;
    }
  } catch (const std::invalid_argument&) {
  }
  throw UsageError("unknown method '" + name + "'");
}

std::string method_name(InferMethod method) {
  switch (method) {
    case InferMethod::kMinNorm: return "min_norm";
    case InferMethod::kDivideAndConquer: return "dc";
    case InferMethod::kFrankWolfe: return "frank_wolfe";
    case InferMethod::kParallelMp: return "mp";
    case InferMethod::kSequentialEp: return "ep";
  }
  return "?";
}

bool has_extension(const std::string& path, const std::string& ext) {
  std::string actual = std::filesystem::path(path).extension().string();
  std::transform(actual.begin(), actual.end(), actual.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return actual == ext;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Numbers separated by commas, whitespace or newlines. A first line that does
// not start with a number is treated as a header. With two columns per row
// the first is an index and must count up from 0.
std::vector<double> read_number_table(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    bool numeric = true;
    while (fields >> token) {
      char* end = nullptr;
      const double value = std::strtod(token.c_str(), &end);
      if (end != token.c_str() + token.size() || !std::isfinite(value)) {
        numeric = false;
      } else {
        row.push_back(value);
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw UsageError(path + ": malformed row '" + line + "'");
    }
    first = false;
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<double> values;
  const bool indexed = !rows.empty() && rows.front().size() == 2 &&
                       std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.size() == 2; });
  if (indexed) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][0] != static_cast<double>(i)) {
        throw UsageError(path + ": indices must be 0, 1, 2, ...");
      }
      values.push_back(rows[i][1]);
    }
  } else {
    for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  }
  return values;
}

std::vector<double> read_marginals(const std::string& path) {
  if (has_extension(path, ".pgm")) {
    const GrayImage image = read_pgm_file(path);
    std::vector<double> p(image.values.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = image.values[i] / 255.0;
    return p;
  }
  auto in = open_input(path);
  return read_marginals_csv(in);
}

std::vector<Region> read_label_map(const std::string& path, std::size_t width,
                                   std::size_t height) {
  if (has_extension(path, ".pgm")) return load_superpixels(read_pgm_file(path), width, height);
  std::vector<long> labels;
  for (double v : read_number_table(path)) {
    if (v != static_cast<double>(static_cast<long>(v))) {
      throw UsageError(path + ": labels must be integers");
    }
    labels.push_back(static_cast<long>(v));
  }
  return load_superpixels(labels, width, height);
}

std::string indent(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- infer

struct InferArgs {
  std::string model;
  std::string method = "min_norm";
  std::size_t iters = 0;
  double tol = 0.0;
  std::string marginals_out;
  std::string trace_out;
};

int run_infer(const InferArgs& args, std::ostream& out) {
  const InferMethod method = parse_infer_method(args.method);
  const ModelSpec spec = load_model(args.model);
  json report;
  InferenceResult result;
  std::optional<ConvergenceTrace> trace;
  if (method == InferMethod::kParallelMp || method == InferMethod::kSequentialEp) {
    MessagePassingOptions options;
    if (args.iters > 0) options.max_iterations = args.iters;
    if (args.tol > 0.0) options.tol = args.tol;
    const FactorGraph graph = model_factor_graph(spec);
    auto mp = method == InferMethod::kParallelMp ? run_parallel_mp(graph, options)
                                                 : run_sequential_ep(graph, options);
    result = std::move(mp.inference);
    trace = std::move(mp.trace);
  } else {
    LFieldOptions options;
    options.method = method == InferMethod::kMinNorm            ? LFieldMethod::kMinNorm
                     : method == InferMethod::kDivideAndConquer ? LFieldMethod::kDivideAndConquer
                                                                : LFieldMethod::kFrankWolfe;
    if (args.iters > 0) {
      options.frank_wolfe_iterations = args.iters;
      options.wolfe.max_major_cycles = args.iters;
    }
    if (args.tol > 0.0) options.wolfe.tol = args.tol;
    result = lfield_infer(model_oracle(spec), options);
  }
  if (!args.marginals_out.empty()) {
    std::ostringstream csv;
    write_marginals_csv(csv, result.marginals);
    write_text(args.marginals_out, csv.str());
  }
  if (!args.trace_out.empty()) {
    if (!trace) throw UsageError("--trace-out needs --method mp or ep");
    std::ostringstream csv;
    write_trace_csv(csv, *trace);
    write_text(args.trace_out, csv.str());
  }
  report = to_json(result);
  report["method"] = method_name(method);
  report["n"] = spec.n;
  out << indent(report);
  return 0;
}

// ---------------------------------------------------------------- segment

struct SegmentArgs {
  std::string image;
  SegmentationParams params;
  std::vector<std::size_t> blocks{4, 8};
  std::vector<std::string> labels;
  std::string seeds;
  std::string unaries;
  std::string mode = "both";
  std::string out_prefix;
  double tol = 1e-6;
  std::size_t max_iters = 5000;
};

int run_segment(const SegmentArgs& args, std::ostream& out) {
  const SegmentationMode mode = [&] {
    try {
      return parse_segmentation_mode(args.mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (args.seeds.empty() == args.unaries.empty()) {
    throw UsageError("segment needs exactly one of --seeds or --unaries");
  }
  const ImageGrid image = read_ppm_file(args.image);
  const std::size_t width = image.width();
  const std::size_t height = image.height();

  ModularVector unaries;
  if (!args.seeds.empty()) {
    const GrayImage mask = read_pgm_file(args.seeds);
    if (mask.width != width || mask.height != height) {
      throw UsageError("seed mask size does not match the image");
    }
    unaries = compute_unaries(image, seeds_from_mask(mask));
  } else {
    unaries = ModularVector(read_number_table(args.unaries));
    if (unaries.size() != image.pixel_count()) {
      throw UsageError("unary file has " + std::to_string(unaries.size()) + " values for " +
                       std::to_string(image.pixel_count()) + " pixels");
    }
  }

  std::vector<Region> regions;
  for (std::size_t block : args.blocks) {
    auto layer = grid_superpixels(width, height, block);
    regions.insert(regions.end(), layer.begin(), layer.end());
  }
  for (const auto& path : args.labels) {
    auto layer = read_label_map(path, width, height);
    regions.insert(regions.end(), layer.begin(), layer.end());
  }

  const std::string prefix = args.out_prefix.empty()
                                 ? std::filesystem::path(args.image).stem().string()
                                 : args.out_prefix;
  MessagePassingOptions options;
  options.tol = args.tol;
  options.max_iterations = args.max_iters;
  const auto start = std::chrono::steady_clock::now();
  const auto model = build_segmentation_model(image, unaries, std::move(regions), args.params);
  const auto result = segment(model, mode, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string marginal_pgm = prefix + "_marginals.pgm";
  const std::string marginal_csv = prefix + "_marginals.csv";
  const std::string map_pgm = prefix + "_map.pgm";
  write_pgm_file(marginal_pgm, result.marginal_image);
  {
    std::ostringstream csv;
    write_marginals_csv(csv, result.marginals);
    write_text(marginal_csv, csv.str());
  }
  write_pgm_file(map_pgm, result.map_mask);

  const SolverReport& report = result.inference.report;
  json summary{{"width", width},
               {"height", height},
               {"mode", to_string(mode)},
               {"alpha", args.params.alpha},
               {"beta", args.params.beta},
               {"gamma", args.params.gamma},
               {"theta", args.params.theta},
               {"factors", segmentation_factor_graph(model, mode).num_factors()},
               {"log_z_upper", result.inference.log_z_upper},
               {"converged", report.converged},
               {"report", to_json(report)},
               {"seconds", seconds},
               {"outputs", {marginal_pgm, marginal_csv, map_pgm}}};
  out << indent(summary);
  return 0;
}

// ---------------------------------------------------------------- eval

int run_eval(const std::string& marginals_path, const std::string& truth_path,
             std::size_t bands, std::ostream& out) {
  const GrayImage truth = read_pgm_file(truth_path);
  const std::vector<double> p = read_marginals(marginals_path);
  if (p.size() != truth.values.size()) {
    throw UsageError("marginals have " + std::to_string(p.size()) + " entries for " +
                     std::to_string(truth.values.size()) + " pixels");
  }
  std::vector<std::uint8_t> labels(truth.values.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = truth.values[i] > 0 ? 1 : 0;
  json report = to_json(evaluate_segmentation(p, labels, truth.width, truth.height, bands));
  out << indent(report);
  return 0;
}

// ---------------------------------------------------------------- exact

int run_exact(const std::string& model_path, std::ostream& out) {
  const ModelSpec spec = load_model(model_path);
  if (spec.n > kExactLimit) {
    throw UsageError("exact enumeration is limited to n <= " + std::to_string(kExactLimit) +
                     " (model has " + std::to_string(spec.n) + ")");
  }
  const SubmodularOracle f = model_oracle(spec);
  const SfmResult minimizers = sfm_brute_force(f);
  json report{{"n", spec.n},
              {"log_z", exact_partition(f)},
              {"marginals", exact_marginals(f)},
              {"min_value", minimizers.value},
              {"map_minimal", minimizers.minimal.indices()},
              {"map_maximal", minimizers.maximal.indices()}};
  out << indent(report);
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> sizes{8, 16, 32};
  std::vector<std::string> methods{"min_norm", "dc", "frank_wolfe", "mp"};
  std::size_t repeats = 3;
  std::uint64_t seed = 1;
  std::size_t fw_iters = 2000;
};

// Random unaries, a chain plus ~n extra random edges, and two halves as
// higher-order regions.
ModelSpec bench_model(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  ModelSpec spec;
  spec.n = n;
  for (std::size_t v = 0; v < n; ++v) spec.modular.push_back(normal(rng));
  for (std::size_t v = 0; v + 1 < n; ++v) spec.edges.push_back({v, v + 1, uniform(rng)});
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t u = pick(rng);
    const std::size_t v = pick(rng);
    if (u != v) spec.edges.push_back({u, v, uniform(rng)});
  }
  ModelSpec::Hop low;
  ModelSpec::Hop high;
  for (std::size_t v = 0; v < n; ++v) (v < n / 2 ? low : high).elements.push_back(v);
  for (auto* hop : {&low, &high}) {
    if (hop->elements.size() < 2) continue;
    hop->scale = 1.0;
    spec.hops.push_back(*hop);
  }
  return spec;
}

int run_bench(const BenchArgs& args, std::ostream& out) {
  std::vector<InferMethod> methods;
  for (const auto& name : args.methods) methods.push_back(parse_infer_method(name));
  for (std::size_t n : args.sizes) {
    if (n < 2) throw UsageError("bench sizes must be at least 2");
  }
  std::mt19937_64 rng(args.seed);
  out << "method,n,repeat,seconds,iterations,converged,log_z_upper\n";
  out.precision(9);
  for (std::size_t n : args.sizes) {
    for (std::size_t r = 0; r < args.repeats; ++r) {
      const ModelSpec spec = bench_model(rng, n);
      const SubmodularOracle f = model_oracle(spec);
      const FactorGraph graph = model_factor_graph(spec);
      for (InferMethod method : methods) {
        const auto start = std::chrono::steady_clock::now();
        InferenceResult result;
        if (method == InferMethod::kParallelMp) {
          result = run_parallel_mp(graph).inference;
        } else if (method == InferMethod::kSequentialEp) {
          result = run_sequential_ep(graph).inference;
        } else {
          LFieldOptions options;
          options.method = method == InferMethod::kMinNorm ? LFieldMethod::kMinNorm
                           : method == InferMethod::kDivideAndConquer
                               ? LFieldMethod::kDivideAndConquer
                               : LFieldMethod::kFrankWolfe;
          options.frank_wolfe_iterations = args.fw_iters;
          result = lfield_infer(f, options);
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << method_name(method) << ',' << n << ',' << r << ',' << seconds << ','
            << result.report.iterations << ',' << (result.report.converged ? 1 : 0) << ','
            << result.log_z_upper << '\n';
      }
    }
  }
  return 0;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational inference for log-submodular models"};
  app.name("subvar");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  InferArgs infer;
  auto* infer_cmd = app.add_subcommand("infer", "L-Field inference on a JSON model");
  infer_cmd->add_option("model", infer.model, "Model JSON")->required();
  infer_cmd->add_option("--method", infer.method,
                        "min_norm | dc | frank_wolfe | mp | ep")
      ->capture_default_str();
  infer_cmd->add_option("--iters", infer.iters,
                        "Frank-Wolfe steps, Wolfe major cycles or message-passing rounds");
  infer_cmd->add_option("--tol", infer.tol, "Stopping tolerance")->check(CLI::PositiveNumber);
  infer_cmd->add_option("--marginals-out", infer.marginals_out, "Write marginals CSV");
  infer_cmd->add_option("--trace-out", infer.trace_out, "Write convergence trace CSV (mp, ep)");

  SegmentArgs seg;
  auto* seg_cmd = app.add_subcommand("segment", "Binary segmentation of a PPM image");
  seg_cmd->add_option("image", seg.image, "Input PPM (P3 or P6)")->required();
  seg_cmd->add_option("--alpha", seg.params.alpha, "Unary scale")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  seg_cmd->add_option("--beta", seg.params.beta, "Pairwise scale")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  seg_cmd->add_option("--gamma", seg.params.gamma, "Superpixel scale")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  seg_cmd->add_option("--theta", seg.params.theta, "Colour sensitivity of edge weights")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  seg_cmd->add_option("--blocks", seg.blocks, "Block superpixel sizes, one layer each")
      ->delimiter(',')->capture_default_str();
  seg_cmd->add_option("--labels", seg.labels, "Superpixel label map (PGM or CSV), repeatable");
  seg_cmd->add_option("--seeds", seg.seeds, "Seed mask PGM: 255 foreground, 0 background");
  seg_cmd->add_option("--unaries", seg.unaries, "Per-pixel unary CSV, used verbatim");
  seg_cmd->add_option("--mode", seg.mode, "pairwise | hop | both")->capture_default_str();
  seg_cmd->add_option("--out-prefix", seg.out_prefix, "Output file prefix");
  seg_cmd->add_option("--tol", seg.tol, "Message-passing tolerance")
      ->check(CLI::PositiveNumber)->capture_default_str();
  seg_cmd->add_option("--max-iters", seg.max_iters, "Message-passing rounds")
      ->capture_default_str();

  std::string eval_marginals;
  std::string eval_truth;
  std::size_t eval_bands = 10;
  auto* eval_cmd = app.add_subcommand("eval", "AUC and trimap AUC of marginals");
  eval_cmd->add_option("marginals", eval_marginals, "Marginals CSV or PGM")->required();
  eval_cmd->add_option("truth", eval_truth, "Ground-truth mask PGM")->required();
  eval_cmd->add_option("--bands", eval_bands, "Trimap bands")->capture_default_str();

  std::string exact_model;
  auto* exact_cmd = app.add_subcommand("exact", "Exact log Z and marginals by enumeration");
  exact_cmd->add_option("model", exact_model, "Model JSON")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timing CSV on random models");
  bench_cmd->add_option("--sizes", bench.sizes, "Ground set sizes")
      ->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "Methods to time")
      ->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Models per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
  bench_cmd->add_option("--fw-iters", bench.fw_iters, "Frank-Wolfe steps")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (*infer_cmd) return run_infer(infer, out);
  if (*seg_cmd) return run_segment(seg, out);
  if (*eval_cmd) return run_eval(eval_marginals, eval_truth, eval_bands, out);
  if (*exact_cmd) return run_exact(exact_model, out);
  return run_bench(bench, out);
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"subvar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  } catch (const SolverError& e) {
    err << "subvar: solver failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "subvar: " << e.what() << '\n';
    return 1;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace subvar
