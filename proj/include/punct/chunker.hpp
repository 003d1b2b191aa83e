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

// Overlapping fixed-size word windows and the merge of their predictions.
//
// Windows start every `chunk_size - overlap` words. Each window only keeps
// the predictions of its centre: floor(overlap/2) words are trimmed on the
// left and the remaining ceil(overlap/2) on the right, except at the document
// edges. The kept spans tile [0, word_count) exactly.

#ifndef PUNCT_CHUNKER_HPP_
#define PUNCT_CHUNKER_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "punct/errors.hpp"
#include "punct/punct_class.hpp"

namespace punct {

struct ChunkConfig {
  std::size_t chunk_size = 100;
  std::size_t overlap = 20;
};

struct Chunk {
  std::size_t begin = 0;  // word_span [begin, end)
  std::size_t end = 0;
  std::size_t keep_begin = 0;  // keep_span [keep_begin, keep_end)
  std::size_t keep_end = 0;

  std::size_t size() const { return end - begin; }

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

inline void validate(const ChunkConfig& config) {
  if (config.chunk_size < 1) throw BadConfig("chunk size must be at least 1");
  if (config.overlap >= config.chunk_size) throw BadConfig("overlap must be smaller than chunk size");
  if (2 * config.overlap >= config.chunk_size) {
    throw BadConfig("twice the overlap (" + std::to_string(2 * config.overlap) +
                    ") must be smaller than chunk size (" + std::to_string(config.chunk_size) + ")");
  }
}

inline std::vector<Chunk> make_chunks(std::size_t word_count, const ChunkConfig& config) {
  validate(config);
  std::vector<Chunk> chunks;
  if (word_count == 0) return chunks;
  if (word_count <= config.chunk_size) {
    chunks.push_back({0, word_count, 0, word_count});
    return chunks;
  }
  const std::size_t stride = config.chunk_size - config.overlap;
  const std::size_t left_trim = config.overlap / 2;
  const std::size_t right_trim = config.overlap - left_trim;
  for (std::size_t begin = 0;; begin += stride) {
    Chunk c;
    c.begin = begin;
    c.end = std::min(begin + config.chunk_size, word_count);
    c.keep_begin = begin == 0 ? 0 : begin + left_trim;
    c.keep_end = c.end == word_count ? word_count : c.end - right_trim;
    chunks.push_back(c);
    if (c.end == word_count) break;
  }
  return chunks;
}

inline std::vector<Chunk> make_chunks(std::size_t word_count, std::size_t chunk_size,
                                      std::size_t overlap) {
  return make_chunks(word_count, ChunkConfig{chunk_size, overlap});
}

/// Merges per-chunk label sequences: position p takes the label predicted by
/// the chunk whose keep span contains p.
inline std::vector<PunctClass> stitch(std::span<const Chunk> chunks,
                                      std::span<const std::vector<PunctClass>> per_chunk_labels) {
  if (chunks.size() != per_chunk_labels.size()) {
    throw ShapeMismatch(std::to_string(chunks.size()) + " chunks but " +
                        std::to_string(per_chunk_labels.size()) + " label sequences");
  }
  std::vector<PunctClass> out;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const Chunk& c = chunks[i];
    if (per_chunk_labels[i].size() != c.size()) {
      throw ShapeMismatch("chunk " + std::to_string(i) + " spans " + std::to_string(c.size()) +
                          " words but has " + std::to_string(per_chunk_labels[i].size()) + " labels");
    }
    if (c.keep_begin != out.size() || c.keep_begin < c.begin || c.keep_end > c.end ||
        c.keep_end <= c.keep_begin) {
      throw ShapeMismatch("chunk " + std::to_string(i) + " keep span does not continue the partition");
    }
    for (std::size_t p = c.keep_begin; p < c.keep_end; ++p) out.push_back(per_chunk_labels[i][p - c.begin]);
  }
  return out;
}

}  // namespace punct

#endif  // PUNCT_CHUNKER_HPP_
