// Copyright 2026 The punct Authors.
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

// Command-line front end: normalize, stats, align, train, predict, eval.
//
// Exit codes: 0 success, 1 usage/config/io, 2 parse (incl. empty corpus),
// 3 alignment, 4 shape/line-count.

#ifndef PUNCT_TOOLS_PUNCT_CLI_HPP_
#define PUNCT_TOOLS_PUNCT_CLI_HPP_

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "punct/punct.hpp"

namespace punct::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kAlignmentError = 3,
  kShapeError = 4,
};

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kParse: return kParseError;
    case ErrorKind::kAlignment: return kAlignmentError;
    case ErrorKind::kShape: return kShapeError;
    case ErrorKind::kConfig:
    case ErrorKind::kIo: return kUsage;
  }
  return kUsage;
}

struct DataPair {
  std::string in_path;
  std::string expected_path;
};

inline DataPair parse_data_pair(const std::string& spec) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
    throw BadConfig("--data expects IN:EXPECTED, got '" + spec + "'");
  }
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

struct RunConfig {
  std::string input;
  std::string output;
  std::string in_path;
  std::string expected_path;
  std::string out_path;
  std::string model_path;
  std::vector<std::string> data;
  std::string format = "both";
  std::size_t chunk_size = 100;
  std::size_t overlap = 20;
  std::size_t epochs = 5;
  std::uint64_t seed = 42;
  std::size_t context_radius = 2;
  bool pauses = false;
  bool timed = false;
};

namespace detail {

inline std::vector<DataPair> collect_pairs(const RunConfig& cfg) {
  std::vector<DataPair> pairs;
  if (!cfg.in_path.empty() || !cfg.expected_path.empty()) {
    if (cfg.in_path.empty() || cfg.expected_path.empty()) {
      throw BadConfig("--in and --expected must be given together");
    }
    pairs.push_back({cfg.in_path, cfg.expected_path});
  }
  for (const auto& d : cfg.data) pairs.push_back(parse_data_pair(d));
  if (pairs.empty()) throw BadConfig("no input data: use --in/--expected or --data IN:EXPECTED");
  for (const auto& p : pairs) {
    for (const auto* path : {&p.in_path, &p.expected_path}) {
      if (!std::ifstream(*path)) throw IoError("cannot open '" + *path + "' for reading");
    }
  }
  return pairs;
}

inline std::vector<LabeledDocument> load_pair(const DataPair& pair, std::ostream& err) {
  AlignDiagnostics diag;
  auto docs = align_lines(read_in_file(pair.in_path), pair.in_path, read_text_file(pair.expected_path),
                          pair.expected_path, &diag);
  for (const auto& w : diag.warnings) err << "warning: " << pair.expected_path << ": " << w << '\n';
  return docs;
}

// Writes to `path`, or to `out` when path is empty or "-".
inline void emit(const std::string& path, const std::vector<std::string>& lines, std::ostream& out) {
  if (path.empty() || path == "-") {
    for (const auto& l : lines) out << l << '\n';
  } else {
    write_lines(path, lines);
  }
}

inline int cmd_normalize(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> result;
  if (cfg.timed) {
    for (const auto& doc : read_in_file(cfg.input)) result.push_back(normalize_ellipsis(strip_timestamps(doc)));
  } else {
    for (const auto& line : read_lines(cfg.input)) result.push_back(normalize_ellipsis(line));
  }
  emit(cfg.output, result, out);
  return kOk;
}

inline int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto pairs = collect_pairs(cfg);
  std::vector<std::string> rows;
  for (const auto& p : pairs) {
    const auto docs = load_pair(p, err);
    try {
      rows.push_back(format_stats_row(p.expected_path, compute_stats(docs)));
    } catch (Error& e) {
      e.set_location(p.expected_path, 0);
      throw;
    }
  }
  out << stats_table_header() << '\n';
  for (const auto& r : rows) out << r << '\n';
  return kOk;
}

inline int cmd_align(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto docs = load_pair({cfg.in_path, cfg.expected_path}, err);
  std::vector<std::string> lines;
  for (const auto& d : docs) {
    for (std::size_t i = 0; i < d.words.size(); ++i) lines.push_back(d.words[i] + "\t" + std::string(name(d.labels[i])));
    lines.emplace_back();
  }
  emit(cfg.output, lines, out);
  return kOk;
}

inline int cmd_train(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  FeatureConfig features;
  features.context_radius = cfg.context_radius;
  features.pauses.enabled = cfg.pauses;
  validate(features);
  const auto pairs = collect_pairs(cfg);

  std::vector<LabeledDocument> corpus;
  for (const auto& p : pairs) {
    auto docs = load_pair(p, err);
    corpus.insert(corpus.end(), std::make_move_iterator(docs.begin()), std::make_move_iterator(docs.end()));
  }
  const LinearModel model = train(corpus, cfg.epochs, cfg.seed, features);
  save_model(cfg.model_path, model);
  out << "trained on " << corpus.size() << " documents, " << model.weights.size() << " features -> "
      << cfg.model_path << '\n';
  return kOk;
}

inline int cmd_predict(const RunConfig& cfg, std::ostream& out) {
  const ChunkConfig chunking{cfg.chunk_size, cfg.overlap};
  validate(chunking);
  const LinearModel model = load_model(cfg.model_path);
  std::vector<std::string> lines;
  for (const auto& doc : read_in_file(cfg.in_path)) lines.push_back(render_punctuated(predict(model, doc, chunking)));
  emit(cfg.output, lines, out);
  return kOk;
}

inline int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AlignDiagnostics diag;
  const EvalReport report = evaluate_files(cfg.expected_path, cfg.out_path, cfg.in_path, &diag);
  for (const auto& w : diag.warnings) err << "warning: " << w << '\n';
  if (cfg.format == "table" || cfg.format == "both") out << format_report_table(report);
  if (cfg.format == "both") out << '\n';
  if (cfg.format == "kv" || cfg.format == "both") out << format_report_kv(report);
  return kOk;
}

}  // namespace detail

/// Runs the tool with `args` (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Punctuation prediction toolkit for timestamped ASR transcripts", "punct"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* normalize = app.add_subcommand("normalize", "Fold '...' into U+2026; optionally strip timestamps");
  normalize->add_option("--input,-i", cfg.input, "Text file, or in-file with --timed")->required()->check(CLI::ExistingFile);
  normalize->add_option("--output,-o", cfg.output, "Output file (default stdout)");
  normalize->add_flag("--timed", cfg.timed, "Input is an in-file; emit raw text without timestamps");

  auto* stats = app.add_subcommand("stats", "Dataset profile: samples, mean words, marks per 1000 words");
  stats->add_option("--in", cfg.in_path, "In-file")->check(CLI::ExistingFile);
  stats->add_option("--expected", cfg.expected_path, "Expected-file")->check(CLI::ExistingFile);
  stats->add_option("--data", cfg.data, "IN:EXPECTED pair, one table row each (repeatable)");

  auto* align = app.add_subcommand("align", "Write word<TAB>LABEL lines derived from gold text");
  align->add_option("--in", cfg.in_path, "In-file")->required()->check(CLI::ExistingFile);
  align->add_option("--expected", cfg.expected_path, "Expected-file")->required()->check(CLI::ExistingFile);
  align->add_option("--output,-o", cfg.output, "Output file (default stdout)");

  auto* train_cmd = app.add_subcommand("train", "Train the averaged-perceptron tagger");
  train_cmd->add_option("--in", cfg.in_path, "In-file")->check(CLI::ExistingFile);
  train_cmd->add_option("--expected", cfg.expected_path, "Expected-file")->check(CLI::ExistingFile);
  train_cmd->add_option("--data", cfg.data, "IN:EXPECTED pair, concatenated in order (repeatable)");
  train_cmd->add_option("--epochs", cfg.epochs, "Training epochs")->capture_default_str();
  train_cmd->add_option("--seed", cfg.seed, "Shuffle seed")->capture_default_str();
  train_cmd->add_option("--context-radius", cfg.context_radius, "Words of context on each side")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  train_cmd->add_flag("--pauses", cfg.pauses, "Add bucketed inter-word pause features");
  train_cmd->add_option("--model,-m", cfg.model_path, "Model file to write")->required();

  auto* predict_cmd = app.add_subcommand("predict", "Punctuate an in-file with a trained model");
  predict_cmd->add_option("--model,-m", cfg.model_path, "Model file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--in", cfg.in_path, "In-file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--chunk-size", cfg.chunk_size, "Words per window")->capture_default_str();
  predict_cmd->add_option("--overlap", cfg.overlap, "Words shared by adjacent windows")->capture_default_str();
  predict_cmd->add_option("--output,-o", cfg.output, "Out-file (default stdout)");

  auto* eval = app.add_subcommand("eval", "Score an out-file against an expected-file");
  eval->add_option("--expected", cfg.expected_path, "Expected-file")->required()->check(CLI::ExistingFile);
  eval->add_option("--out", cfg.out_path, "Out-file to score")->required()->check(CLI::ExistingFile);
  eval->add_option("--in", cfg.in_path, "In-file")->required()->check(CLI::ExistingFile);
  eval->add_option("--format", cfg.format, "table, kv or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "kv", "both"}));

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  if (storage.empty()) storage.emplace_back("punct");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (normalize->parsed()) return detail::cmd_normalize(cfg, out);
    if (stats->parsed()) return detail::cmd_stats(cfg, out, err);
    if (align->parsed()) return detail::cmd_align(cfg, out, err);
    if (train_cmd->parsed()) return detail::cmd_train(cfg, out, err);
    if (predict_cmd->parsed()) return detail::cmd_predict(cfg, out);
    if (eval->parsed()) return detail::cmd_eval(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace punct::cli

#endif  // PUNCT_TOOLS_PUNCT_CLI_HPP_
