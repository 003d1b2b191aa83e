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

// Per-class precision/recall/F1 and support-weighted F1 over suffix labels.
//
// Counting at each word position, with g the gold and p the predicted label:
//   g == p != BLANK   -> tp[g]
//   p != BLANK, p != g -> fp[p]
//   g != BLANK, p != g -> fn[g]
// A wrong mark therefore costs one fp and one fn. BLANK has no scores of its
// own. The weighted F1 averages class F1 by gold support; it is 0 when the
// gold contains no marks. All scores are on a 0-100 scale.

#ifndef PUNCT_EVALUATOR_HPP_
#define PUNCT_EVALUATOR_HPP_

#include <array>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>

#include "punct/corpus_io.hpp"
#include "punct/errors.hpp"
#include "punct/punct_class.hpp"

namespace punct {

struct ClassScores {
  PunctClass klass = PunctClass::kFullstop;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  std::size_t support() const { return tp + fn; }
};

struct EvalReport {
  std::array<ClassScores, kNumClasses - 1> per_class{};  // kMarkClasses order
  double weighted_f1 = 0.0;

  const ClassScores& scores(PunctClass c) const { return per_class[index_of(c) - 1]; }
  std::size_t support(PunctClass c) const { return scores(c).support(); }
};

/// Confusion tallies; merging is associative.
struct ConfusionCounts {
  std::array<std::size_t, kNumClasses> tp{};
  std::array<std::size_t, kNumClasses> fp{};
  std::array<std::size_t, kNumClasses> fn{};

  void add(PunctClass gold, PunctClass pred) {
    if (gold == pred) {
      if (gold != PunctClass::kBlank) ++tp[index_of(gold)];
      return;
    }
    if (pred != PunctClass::kBlank) ++fp[index_of(pred)];
    if (gold != PunctClass::kBlank) ++fn[index_of(gold)];
  }

  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      tp[i] += o.tp[i];
      fp[i] += o.fp[i];
      fn[i] += o.fn[i];
    }
    return *this;
  }
};

inline EvalReport report_from_counts(const ConfusionCounts& counts) {
  EvalReport report;
  double weighted_sum = 0.0;
  std::size_t total_support = 0;
  for (std::size_t k = 0; k < kMarkClasses.size(); ++k) {
    const PunctClass c = kMarkClasses[k];
    const std::size_t i = index_of(c);
    ClassScores& s = report.per_class[k];
    s.klass = c;
    s.tp = counts.tp[i];
    s.fp = counts.fp[i];
    s.fn = counts.fn[i];
    const double tp = static_cast<double>(s.tp);
    if (s.tp + s.fp > 0) s.precision = 100.0 * tp / static_cast<double>(s.tp + s.fp);
    if (s.tp + s.fn > 0) s.recall = 100.0 * tp / static_cast<double>(s.tp + s.fn);
    if (s.precision + s.recall > 0.0) s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
    weighted_sum += static_cast<double>(s.support()) * s.f1;
    total_support += s.support();
  }
  if (total_support > 0) report.weighted_f1 = weighted_sum / static_cast<double>(total_support);
  return report;
}

inline void count_document(ConfusionCounts& counts, const LabeledDocument& gold,
                           const LabeledDocument& pred, std::size_t doc_index) {
  if (gold.labels.size() != pred.labels.size()) {
    throw ShapeMismatch("document " + std::to_string(doc_index) + " has " +
                        std::to_string(gold.labels.size()) + " gold labels but " +
                        std::to_string(pred.labels.size()) + " predicted");
  }
  for (std::size_t i = 0; i < gold.labels.size(); ++i) counts.add(gold.labels[i], pred.labels[i]);
}

inline EvalReport evaluate(std::span<const LabeledDocument> gold, std::span<const LabeledDocument> pred) {
  if (gold.size() != pred.size()) {
    throw ShapeMismatch(std::to_string(gold.size()) + " gold documents but " +
                        std::to_string(pred.size()) + " predicted");
  }
  ConfusionCounts counts;
  for (std::size_t d = 0; d < gold.size(); ++d) count_document(counts, gold[d], pred[d], d);
  return report_from_counts(counts);
}

/// Scores an out-file against an expected-file; both are aligned to the
/// words of the in-file.
inline EvalReport evaluate_files(const std::string& expected_path, const std::string& out_path,
                                 const std::string& in_path, AlignDiagnostics* diag = nullptr) {
  const auto docs = read_in_file(in_path);
  const auto gold = align_lines(docs, in_path, read_text_file(expected_path), expected_path, diag);
  const auto pred = align_lines(docs, in_path, read_text_file(out_path), out_path, diag);
  return evaluate(gold, pred);
}

/// Two-line table in the column order Weighted-F1, then each mark's F1.
inline std::string format_report_table(const EvalReport& report) {
  std::string header = "Weighted-F1";
  for (PunctClass c : kMarkClasses) header += " | " + std::string(display_name(c)) + "-F1";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", report.weighted_f1);
  std::string row = buf;
  for (const auto& s : report.per_class) {
    std::snprintf(buf, sizeof buf, " | %.2f", s.f1);
    row += buf;
  }
  return header + "\n" + row + "\n";
}

/// key=value block, one line per figure.
inline std::string format_report_kv(const EvalReport& report) {
  char buf[96];
  std::string out;
  std::snprintf(buf, sizeof buf, "weighted_f1=%.2f\n", report.weighted_f1);
  out += buf;
  for (const auto& s : report.per_class) {
    std::string key(name(s.klass));
    for (auto& ch : key) ch = static_cast<char>(ch - 'A' + 'a');
    std::snprintf(buf, sizeof buf, "%s.precision=%.2f\n%s.recall=%.2f\n%s.f1=%.2f\n", key.c_str(),
                  s.precision, key.c_str(), s.recall, key.c_str(), s.f1);
    out += buf;
    out += key + ".tp=" + std::to_string(s.tp) + "\n";
    out += key + ".fp=" + std::to_string(s.fp) + "\n";
    out += key + ".fn=" + std::to_string(s.fn) + "\n";
    out += key + ".support=" + std::to_string(s.support()) + "\n";
  }
  return out;
}

}  // namespace punct

#endif  // PUNCT_EVALUATOR_HPP_
