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

#ifndef PUNCT_STATS_HPP_
#define PUNCT_STATS_HPP_

#include <array>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>

#include "punct/corpus_io.hpp"
#include "punct/errors.hpp"
#include "punct/punct_class.hpp"

namespace punct {

/// Raw counts; merging is associative, so corpora can be counted in pieces.
struct CorpusCounts {
  std::size_t samples = 0;
  std::size_t words = 0;
  std::array<std::size_t, kNumClasses> label_counts{};

  void add(const LabeledDocument& doc) {
    ++samples;
    words += doc.words.size();
    for (PunctClass c : doc.labels) ++label_counts[index_of(c)];
  }

  CorpusCounts& operator+=(const CorpusCounts& other) {
    samples += other.samples;
    words += other.words;
    for (std::size_t i = 0; i < kNumClasses; ++i) label_counts[i] += other.label_counts[i];
    return *this;
  }
};

/// Dataset profile: sample count, mean words per sample, and occurrences of
/// each mark per 1000 words.
struct CorpusStats {
  std::size_t samples = 0;
  std::size_t total_words = 0;
  double mean_words_per_sample = 0.0;
  std::array<double, kNumClasses> rate_per_1000{};  // BLANK slot stays 0

  double rate(PunctClass c) const { return rate_per_1000[index_of(c)]; }
};

inline CorpusStats stats_from_counts(const CorpusCounts& counts) {
  if (counts.samples == 0 || counts.words == 0) throw EmptyCorpus();
  CorpusStats s;
  s.samples = counts.samples;
  s.total_words = counts.words;
  s.mean_words_per_sample = static_cast<double>(counts.words) / static_cast<double>(counts.samples);
  for (PunctClass c : kMarkClasses) {
    s.rate_per_1000[index_of(c)] =
        1000.0 * static_cast<double>(counts.label_counts[index_of(c)]) / static_cast<double>(counts.words);
  }
  return s;
}

inline CorpusStats compute_stats(std::span<const LabeledDocument> docs) {
  CorpusCounts counts;
  for (const auto& d : docs) counts.add(d);
  return stats_from_counts(counts);
}

/// Column header matching the row layout of `format_stats_row`.
inline std::string stats_table_header() {
  std::string h = "Dataset | Samples | Mean Words per Sample";
  for (PunctClass c : kMarkClasses) {
    h += " | ";
    h += display_name(c);
  }
  return h;
}

/// One table row: mean with 2 decimals, rates with 3.
inline std::string format_stats_row(const std::string& dataset, const CorpusStats& s) {
  char buf[64];
  std::string row = dataset + " | " + std::to_string(s.samples);
  std::snprintf(buf, sizeof buf, " | %.2f", s.mean_words_per_sample);
  row += buf;
  for (PunctClass c : kMarkClasses) {
    std::snprintf(buf, sizeof buf, " | %.3f", s.rate(c));
    row += buf;
  }
  return row;
}

}  // namespace punct

#endif  // PUNCT_STATS_HPP_
