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

// Averaged multi-class perceptron over context-window features.
//
// Feature templates (keys are plain strings):
//   bias                      always
//   word@K=<w>                lowercased word at offset K in [-r, +r];
//                             "<PAD>" outside the window. K is written as
//                             -2, -1, 0, +1, +2.
//   suffixN@0=<s>             last N code points (N = 1..3) of the focus word,
//                             lowercased, when the word is at least N long
//   position=last             focus is the final word of the window
//   nextcap=1 | nextcap=0     whether the next word starts upper-case
//   pause<E | pause>=E        bucketed silence before the next word, only
//                             when pause features are enabled and timings
//                             are known
// A prediction at position p therefore depends only on words within
// max(r, 1) of p, which is what makes chunked prediction exact.

#ifndef PUNCT_TAGGER_HPP_
#define PUNCT_TAGGER_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "punct/chunker.hpp"
#include "punct/corpus_io.hpp"
#include "punct/errors.hpp"
#include "punct/punct_class.hpp"
#include "punct/utf8.hpp"

namespace punct {

struct PauseFeatureConfig {
  bool enabled = false;
  std::vector<std::int64_t> bucket_edges_ms = {100, 250, 500, 1000};

  friend bool operator==(const PauseFeatureConfig&, const PauseFeatureConfig&) = default;
};

struct FeatureConfig {
  std::size_t context_radius = 2;
  PauseFeatureConfig pauses;

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

inline void validate(const FeatureConfig& config) {
  if (config.context_radius < 1) throw BadConfig("context radius must be at least 1");
  const auto& edges = config.pauses.bucket_edges_ms;
  if (config.pauses.enabled && edges.empty()) throw BadConfig("pause features need bucket edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] < 0 || (i > 0 && edges[i] <= edges[i - 1])) {
      throw BadConfig("pause bucket edges must be non-negative and strictly ascending");
    }
  }
}

/// Feature extraction over one window of words. Lowercased forms and
/// capitalization are computed once per window.
class FeatureExtractor {
 public:
  FeatureExtractor(std::span<const std::string> words, std::span<const TimeSpan> timings,
                   const FeatureConfig& config)
      : words_(words), timings_(timings), config_(config) {
    lower_.reserve(words.size());
    capitalized_.reserve(words.size());
    for (const auto& w : words) {
      const std::u32string cps = utf8::decode(w);
      lower_.push_back(utf8::to_lower(std::u32string_view(cps)));
      capitalized_.push_back(!cps.empty() && utf8::is_upper(cps.front()));
    }
  }

  std::size_t size() const { return words_.size(); }

  std::vector<std::string> at(std::size_t position) const {
    if (position >= words_.size()) throw IndexOutOfRange(position, words_.size());
    std::vector<std::string> feats;
    feats.reserve(2 * config_.context_radius + 8);
    feats.emplace_back("bias");

    const auto r = static_cast<std::ptrdiff_t>(config_.context_radius);
    const auto p = static_cast<std::ptrdiff_t>(position);
    const auto n = static_cast<std::ptrdiff_t>(words_.size());
    for (std::ptrdiff_t k = -r; k <= r; ++k) {
      std::string key = "word@";
      if (k > 0) key.push_back('+');
      key += std::to_string(k);
      key.push_back('=');
      const std::ptrdiff_t q = p + k;
      key += (q < 0 || q >= n) ? std::string("<PAD>") : utf8::encode(lower_[static_cast<std::size_t>(q)]);
      feats.push_back(std::move(key));
    }

    const std::u32string& focus = lower_[position];
    for (std::size_t len = 1; len <= 3 && len <= focus.size(); ++len) {
      feats.push_back("suffix" + std::to_string(len) + "@0=" +
                      utf8::encode(std::u32string_view(focus).substr(focus.size() - len)));
    }

    if (position + 1 == words_.size()) {
      feats.emplace_back("position=last");
    } else {
      feats.emplace_back(capitalized_[position + 1] ? "nextcap=1" : "nextcap=0");
      if (config_.pauses.enabled && timings_.size() == words_.size()) {
        const std::int64_t gap =
            std::max<std::int64_t>(0, timings_[position + 1].start_ms - timings_[position].end_ms);
        feats.push_back(pause_bucket(gap));
      }
    }
    return feats;
  }

 private:
  std::string pause_bucket(std::int64_t gap_ms) const {
    for (std::int64_t edge : config_.pauses.bucket_edges_ms) {
      if (gap_ms < edge) return "pause<" + std::to_string(edge);
    }
    return "pause>=" + std::to_string(config_.pauses.bucket_edges_ms.back());
  }

  std::span<const std::string> words_;
  std::span<const TimeSpan> timings_;
  FeatureConfig config_;
  std::vector<std::u32string> lower_;
  std::vector<bool> capitalized_;
};

/// Features of one position. `timings` may be empty.
inline std::vector<std::string> extract_features(std::span<const std::string> words,
                                                 std::span<const TimeSpan> timings, std::size_t position,
                                                 const FeatureConfig& config = {}) {
  if (position >= words.size()) throw IndexOutOfRange(position, words.size());
  return FeatureExtractor(words, timings, config).at(position);
}

using ClassWeights = std::array<double, kNumClasses>;

struct LinearModel {
  std::unordered_map<std::string, ClassWeights> weights;
  bool averaged = true;
  std::size_t epochs_trained = 0;
  FeatureConfig features;

  ClassWeights scores(std::span<const std::string> feats) const {
    ClassWeights s{};
    for (const auto& f : feats) {
      auto it = weights.find(f);
      if (it == weights.end()) continue;
      for (std::size_t c = 0; c < kNumClasses; ++c) s[c] += it->second[c];
    }
    return s;
  }

  /// Argmax; ties go to the class that comes first in PunctClass order.
  PunctClass classify(std::span<const std::string> feats) const {
    const ClassWeights s = scores(feats);
    std::size_t best = 0;
    for (std::size_t c = 1; c < kNumClasses; ++c) {
      if (s[c] > s[best]) best = c;
    }
    return class_at(best);
  }

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

// ---------------------------------------------------------------------------
// Training

namespace detail {

// Fisher-Yates driven directly by mt19937_64 so the order does not depend on
// the standard library's distribution implementations.
inline void seeded_shuffle(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

}  // namespace detail

/// Trains an averaged perceptron. Documents are visited in a seeded random
/// order each epoch; within a document positions are visited in order.
inline LinearModel train(std::span<const LabeledDocument> corpus, std::size_t epochs, std::uint64_t seed,
                         const FeatureConfig& config = {}) {
  validate(config);
  if (corpus.empty()) throw EmptyCorpus("training corpus has no documents");

  // Feature strings are interned once; updates then work on dense ids.
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::string> keys;
  struct Instance {
    std::vector<std::size_t> feats;
    PunctClass gold;
  };
  std::vector<std::vector<Instance>> docs(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const LabeledDocument& doc = corpus[d];
    if (doc.labels.size() != doc.words.size()) {
      throw ShapeMismatch("training document " + std::to_string(d) + " has " +
                          std::to_string(doc.words.size()) + " words but " +
                          std::to_string(doc.labels.size()) + " labels");
    }
    const FeatureExtractor fx(doc.words, doc.timings, config);
    docs[d].reserve(doc.words.size());
    for (std::size_t p = 0; p < doc.words.size(); ++p) {
      Instance inst{{}, doc.labels[p]};
      for (auto& f : fx.at(p)) {
        auto [it, inserted] = ids.try_emplace(std::move(f), keys.size());
        if (inserted) keys.push_back(it->first);
        inst.feats.push_back(it->second);
      }
      docs[d].push_back(std::move(inst));
    }
  }

  using Row = std::array<std::int64_t, kNumClasses>;
  std::vector<Row> w(keys.size(), Row{});
  std::vector<Row> total(keys.size(), Row{});
  std::vector<Row> stamp(keys.size(), Row{});
  std::int64_t step = 0;

  auto bump = [&](std::size_t f, std::size_t c, std::int64_t delta) {
    total[f][c] += (step - stamp[f][c]) * w[f][c];
    stamp[f][c] = step;
    w[f][c] += delta;
  };

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(docs.size());
  for (std::size_t e = 0; e < epochs; ++e) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    detail::seeded_shuffle(order, rng);
    for (std::size_t d : order) {
      for (const Instance& inst : docs[d]) {
        std::array<std::int64_t, kNumClasses> s{};
        for (std::size_t f : inst.feats) {
          for (std::size_t c = 0; c < kNumClasses; ++c) s[c] += w[f][c];
        }
        std::size_t guess = 0;
        for (std::size_t c = 1; c < kNumClasses; ++c) {
          if (s[c] > s[guess]) guess = c;
        }
        const std::size_t gold = index_of(inst.gold);
        if (guess != gold) {
          for (std::size_t f : inst.feats) {
            bump(f, gold, +1);
            bump(f, guess, -1);
          }
        }
        ++step;
      }
    }
  }

  LinearModel model;
  model.averaged = true;
  model.epochs_trained = epochs;
  model.features = config;
  if (step == 0) return model;
  for (std::size_t f = 0; f < keys.size(); ++f) {
    ClassWeights avg{};
    bool nonzero = false;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      const std::int64_t sum = total[f][c] + (step - stamp[f][c]) * w[f][c];
      avg[c] = static_cast<double>(sum) / static_cast<double>(step);
      nonzero = nonzero || sum != 0;
    }
    if (nonzero) model.weights.emplace(keys[f], avg);
  }
  return model;
}

// ---------------------------------------------------------------------------
// Prediction

/// Labels every position of one window, with the window edges treated as
/// document edges.
inline std::vector<PunctClass> predict_window(const LinearModel& model, std::span<const std::string> words,
                                              std::span<const TimeSpan> timings) {
  const FeatureExtractor fx(words, timings, model.features);
  std::vector<PunctClass> labels;
  labels.reserve(words.size());
  for (std::size_t p = 0; p < words.size(); ++p) labels.push_back(model.classify(fx.at(p)));
  return labels;
}

inline std::vector<PunctClass> predict_labels(const LinearModel& model, std::span<const std::string> words,
                                              std::span<const TimeSpan> timings, const ChunkConfig& chunking) {
  const auto chunks = make_chunks(words.size(), chunking);
  const bool timed = timings.size() == words.size();
  std::vector<std::vector<PunctClass>> per_chunk;
  per_chunk.reserve(chunks.size());
  for (const Chunk& c : chunks) {
    per_chunk.push_back(predict_window(model, words.subspan(c.begin, c.size()),
                                       timed ? timings.subspan(c.begin, c.size()) : timings.first(0)));
  }
  return stitch(chunks, per_chunk);
}

inline LabeledDocument predict(const LinearModel& model, const RawDocument& doc,
                               const ChunkConfig& chunking = {}) {
  LabeledDocument out;
  out.doc_id = doc.doc_id;
  out.words = doc.texts();
  out.timings = doc.spans();
  out.labels = predict_labels(model, out.words, out.timings, chunking);
  return out;
}

// ---------------------------------------------------------------------------
// Persistence
//
//   punct-linear-model<TAB>1
//   context_radius<TAB>2
//   averaged<TAB>1
//   epochs<TAB>5
//   pauses<TAB>0
//   pause_edges<TAB>100,250,500,1000
//   features<TAB>N
//   <key><TAB>w0<TAB>...<TAB>w6        N lines, sorted by key bytes
//
// Weights use the shortest decimal form that reads back to the same double.

inline constexpr std::string_view kModelMagic = "punct-linear-model";
inline constexpr int kModelVersion = 1;

inline void write_model(std::ostream& out, const LinearModel& model) {
  out << kModelMagic << '\t' << kModelVersion << '\n';
  out << "context_radius\t" << model.features.context_radius << '\n';
  out << "averaged\t" << (model.averaged ? 1 : 0) << '\n';
  out << "epochs\t" << model.epochs_trained << '\n';
  out << "pauses\t" << (model.features.pauses.enabled ? 1 : 0) << '\n';
  out << "pause_edges\t";
  for (std::size_t i = 0; i < model.features.pauses.bucket_edges_ms.size(); ++i) {
    if (i > 0) out << ',';
    out << model.features.pauses.bucket_edges_ms[i];
  }
  out << '\n';
  out << "features\t" << model.weights.size() << '\n';

  std::vector<const std::pair<const std::string, ClassWeights>*> rows;
  rows.reserve(model.weights.size());
  for (const auto& kv : model.weights) rows.push_back(&kv);
  std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->first < b->first; });
  char buf[32];
  for (const auto* row : rows) {
    out << row->first;
    for (double v : row->second) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << '\t' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    parts.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ModelFormatError("line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

inline LinearModel read_model(std::istream& in) {
  LinearModel model;
  std::string line;
  std::size_t line_no = 0;
  auto header = [&](std::string_view expected_key) {
    if (!std::getline(in, line)) throw ModelFormatError("truncated header, missing " + std::string(expected_key));
    ++line_no;
    const auto parts = detail::split_tabs(line);
    if (parts.size() != 2 || parts[0] != expected_key) {
      throw ModelFormatError("line " + std::to_string(line_no) + ": expected '" + std::string(expected_key) + "'");
    }
    return std::string(parts[1]);
  };

  if (detail::parse_number<int>(header(kModelMagic), 1) != kModelVersion) {
    throw ModelFormatError("unsupported model version");
  }
  model.features.context_radius = detail::parse_number<std::size_t>(header("context_radius"), 2);
  model.averaged = detail::parse_number<int>(header("averaged"), 3) != 0;
  model.epochs_trained = detail::parse_number<std::size_t>(header("epochs"), 4);
  model.features.pauses.enabled = detail::parse_number<int>(header("pauses"), 5) != 0;
  model.features.pauses.bucket_edges_ms.clear();
  const std::string edges = header("pause_edges");
  if (!edges.empty()) {
    std::string_view rest = edges;
    while (true) {
      const auto comma = rest.find(',');
      model.features.pauses.bucket_edges_ms.push_back(
          detail::parse_number<std::int64_t>(rest.substr(0, comma), 6));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  const auto count = detail::parse_number<std::size_t>(header("features"), 7);
  model.weights.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ModelFormatError("expected " + std::to_string(count) + " feature rows");
    ++line_no;
    const auto parts = detail::split_tabs(line);
    if (parts.size() != kNumClasses + 1) {
      throw ModelFormatError("line " + std::to_string(line_no) + ": expected key and " +
                             std::to_string(kNumClasses) + " weights");
    }
    ClassWeights row{};
    for (std::size_t c = 0; c < kNumClasses; ++c) row[c] = detail::parse_number<double>(parts[c + 1], line_no);
    if (!model.weights.emplace(std::string(parts[0]), row).second) {
      throw ModelFormatError("line " + std::to_string(line_no) + ": duplicate feature");
    }
  }
  validate(model.features);
  return model;
}

inline void save_model(const std::string& path, const LinearModel& model) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_model(out, model);
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline LinearModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return read_model(in);
  } catch (Error& e) {
    e.set_location(path, 0);
    throw;
  }
}

// ---------------------------------------------------------------------------
// External predictions

/// Reads punctuated text produced by another system (one line per document)
/// and turns it into labels over the words of `in_docs`.
inline std::vector<LabeledDocument> load_external_predictions(const std::string& path,
                                                              const std::vector<RawDocument>& in_docs,
                                                              const std::string& in_path = "in-file",
                                                              AlignDiagnostics* diag = nullptr) {
  return align_lines(in_docs, in_path, read_text_file(path), path, diag);
}

}  // namespace punct

#endif  // PUNCT_TAGGER_HPP_
