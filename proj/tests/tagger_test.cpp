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

#include "punct/tagger.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "punct/evaluator.hpp"
#include "support/fixtures.hpp"
#include "support/synthetic.hpp"

namespace punct {
namespace {

bool contains(const std::vector<std::string>& feats, const std::string& f) {
  return std::find(feats.begin(), feats.end(), f) != feats.end();
}

std::vector<LabeledDocument> predict_all(const LinearModel& model, const std::vector<RawDocument>& docs,
                                         const ChunkConfig& chunking = {}) {
  std::vector<LabeledDocument> out;
  for (const auto& d : docs) out.push_back(predict(model, d, chunking));
  return out;
}

double accuracy(const LinearModel& model, const testing::SyntheticCorpus& corpus) {
  std::size_t right = 0, total = 0;
  for (std::size_t d = 0; d < corpus.raw.size(); ++d) {
    const auto labels = predict(model, corpus.raw[d]).labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      right += labels[i] == corpus.gold[d].labels[i];
      ++total;
    }
  }
  return static_cast<double>(right) / static_cast<double>(total);
}

class SyntheticTagger : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    train_set_ = new testing::SyntheticCorpus(testing::make_synthetic(2000, 42));
    held_out_ = new testing::SyntheticCorpus(testing::make_synthetic(200, 43));
    model_ = new LinearModel(train(train_set_->gold, 5, 42));
  }
  static void TearDownTestSuite() {
    delete train_set_;
    delete held_out_;
    delete model_;
  }

  static testing::SyntheticCorpus* train_set_;
  static testing::SyntheticCorpus* held_out_;
  static LinearModel* model_;
};

testing::SyntheticCorpus* SyntheticTagger::train_set_ = nullptr;
testing::SyntheticCorpus* SyntheticTagger::held_out_ = nullptr;
LinearModel* SyntheticTagger::model_ = nullptr;

TEST(ExtractFeatures, LastPositionPads) {
  const std::vector<std::string> words = {"To", "boli"};
  const auto feats = extract_features(words, {}, 1);
  EXPECT_TRUE(contains(feats, "position=last"));
  EXPECT_TRUE(contains(feats, "word@+1=<PAD>"));
  EXPECT_TRUE(contains(feats, "word@+2=<PAD>"));
  EXPECT_TRUE(contains(feats, "word@-1=to"));
  EXPECT_FALSE(contains(feats, "nextcap=0"));
}

TEST(ExtractFeatures, SampleFocusPogody) {
  const RawDocument raw = parse_timed_line(testing::kSampleInput);
  const auto words = raw.texts();
  const auto feats = extract_features(words, {}, 7);
  EXPECT_TRUE(contains(feats, "word@0=pogody"));
  EXPECT_TRUE(contains(feats, "suffix1@0=y"));
  EXPECT_TRUE(contains(feats, "suffix2@0=dy"));
  EXPECT_TRUE(contains(feats, "suffix3@0=ody"));
  EXPECT_TRUE(contains(feats, "word@+1=ała"));
  EXPECT_TRUE(contains(feats, "word@+2=nie"));
  EXPECT_TRUE(contains(feats, "word@-1=ładnej"));
  EXPECT_TRUE(contains(feats, "nextcap=1"));
  EXPECT_FALSE(contains(feats, "position=last"));
  for (const auto& f : feats) EXPECT_NE(f.rfind("pause", 0), 0u) << "pauses are off by default";
}

TEST(ExtractFeatures, PauseBuckets) {
  const RawDocument raw = parse_timed_line(testing::kSampleInput);
  const auto words = raw.texts();
  const auto spans = raw.spans();
  FeatureConfig config;
  config.pauses.enabled = true;
  // pogody ends at 8400, Ała starts at 8430.
  EXPECT_TRUE(contains(extract_features(words, spans, 7, config), "pause<100"));
  // Ała ends 8430, Nie starts 8760: 330 ms.
  EXPECT_TRUE(contains(extract_features(words, spans, 8, config), "pause<500"));
  config.pauses.bucket_edges_ms = {10, 20};
  EXPECT_TRUE(contains(extract_features(words, spans, 7, config), "pause>=20"));
}

TEST(ExtractFeatures, ShortWordSuffixesAndRange) {
  const std::vector<std::string> words = {"I"};
  const auto feats = extract_features(words, {}, 0);
  EXPECT_TRUE(contains(feats, "suffix1@0=i"));
  EXPECT_FALSE(contains(feats, "suffix2@0=i"));
  EXPECT_THROW(extract_features(words, {}, 1), IndexOutOfRange);
}

TEST(Train, ZeroEpochsPredictsBlank) {
  const auto corpus = testing::make_synthetic(20, 1);
  const LinearModel model = train(corpus.gold, 0, 42);
  EXPECT_TRUE(model.weights.empty());
  for (const auto& doc : predict_all(model, corpus.raw)) {
    for (PunctClass c : doc.labels) EXPECT_EQ(c, PunctClass::kBlank);
  }
}

TEST(Train, EmptyCorpus) {
  EXPECT_THROW(train(std::vector<LabeledDocument>{}, 3, 1), EmptyCorpus);
}

TEST(Predict, EmptyDocument) {
  EXPECT_TRUE(predict(LinearModel{}, RawDocument{}).labels.empty());
}

TEST(Predict, TieBreakPrefersEarlierClass) {
  LinearModel model;
  model.weights["bias"] = {0, 0, 1, 1, 0, 0, 1};
  const std::vector<std::string> feats = {"bias"};
  EXPECT_EQ(model.classify(feats), PunctClass::kComma);
}

TEST_F(SyntheticTagger, LearnsSentenceEnds) {
  const auto pred = predict_all(*model_, held_out_->raw);
  const EvalReport report = evaluate(held_out_->gold, pred);
  EXPECT_GE(report.scores(PunctClass::kFullstop).f1, 95.0);
  EXPECT_GE(report.weighted_f1, 95.0);
}

TEST_F(SyntheticTagger, LabelsMatchGeneratorPositions) {
  const auto pred = predict(*model_, held_out_->raw.front());
  EXPECT_EQ(pred.labels, held_out_->gold.front().labels);
  EXPECT_EQ(pred.words, held_out_->gold.front().words);
}

TEST_F(SyntheticTagger, SameSeedSameWeights) {
  const LinearModel again = train(train_set_->gold, 5, 42);
  EXPECT_TRUE(again == *model_);
  std::ostringstream a, b;
  write_model(a, *model_);
  write_model(b, again);
  EXPECT_EQ(a.str(), b.str());
}

TEST_F(SyntheticTagger, LastEpochNoWorseThanFirst) {
  const LinearModel one = train(train_set_->gold, 1, 42);
  EXPECT_GE(accuracy(*model_, *train_set_), accuracy(one, *train_set_));
}

TEST_F(SyntheticTagger, PersistenceRoundTrip) {
  std::ostringstream out;
  write_model(out, *model_);
  std::istringstream in(out.str());
  const LinearModel back = read_model(in);
  EXPECT_TRUE(back == *model_);
  std::ostringstream again;
  write_model(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST_F(SyntheticTagger, ChunkedEqualsUnchunked) {
  // Long documents: glue the held-out set into a few multi-hundred-word docs.
  std::vector<RawDocument> longs(3);
  for (std::size_t d = 0; d < held_out_->raw.size(); ++d) {
    auto& target = longs[d % 3].words;
    target.insert(target.end(), held_out_->raw[d].words.begin(), held_out_->raw[d].words.end());
  }
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = model_->features.context_radius;
    const std::size_t overlap = 2 * r + rng() % 6;
    const std::size_t size = 2 * overlap + 1 + rng() % 40;
    for (const auto& doc : longs) {
      const auto whole = predict(*model_, doc, ChunkConfig{doc.words.size() + 1, 0});
      const auto chunked = predict(*model_, doc, ChunkConfig{size, overlap});
      ASSERT_EQ(chunked.labels, whole.labels) << "size=" << size << " overlap=" << overlap;
    }
  }
}

TEST_F(SyntheticTagger, OutputLengthMatchesInput) {
  std::mt19937 rng(99);
  const auto vocab = testing::synthetic_vocabulary();
  for (int trial = 0; trial < 200; ++trial) {
    RawDocument doc;
    const std::size_t n = rng() % 300;
    for (std::size_t i = 0; i < n; ++i) doc.words.push_back({vocab[rng() % vocab.size()], 0, 0});
    const std::size_t overlap = rng() % 5;
    const auto out = predict(*model_, doc, ChunkConfig{2 * overlap + 1 + rng() % 40, overlap});
    EXPECT_EQ(out.labels.size(), n);
  }
}

TEST(Persistence, RejectsCorruptFiles) {
  std::istringstream wrong_magic("nope\t1\n");
  EXPECT_THROW(read_model(wrong_magic), ModelFormatError);
  std::istringstream truncated(
      "punct-linear-model\t1\ncontext_radius\t2\naveraged\t1\nepochs\t1\npauses\t0\npause_edges\t100\n"
      "features\t2\nbias\t0\t0\t0\t0\t0\t0\t0\n");
  EXPECT_THROW(read_model(truncated), ModelFormatError);
  std::istringstream bad_number(
      "punct-linear-model\t1\ncontext_radius\t2\naveraged\t1\nepochs\t1\npauses\t0\npause_edges\t100\n"
      "features\t1\nbias\t0\tx\t0\t0\t0\t0\t0\n");
  EXPECT_THROW(read_model(bad_number), ModelFormatError);
}

TEST(Persistence, PauseConfigSurvives) {
  LinearModel m;
  m.features.pauses.enabled = true;
  m.features.pauses.bucket_edges_ms = {50, 300};
  m.features.context_radius = 3;
  m.weights["pause<50"] = {0.1, -0.25, 1e-300, 0, 0, 0, 3.0 / 7.0};
  std::ostringstream out;
  write_model(out, m);
  std::istringstream in(out.str());
  EXPECT_TRUE(read_model(in) == m);
}

TEST(ExternalPredictions, GoldenTruthFile) {
  testing::TempDir dir;
  const std::string path = dir.file("out.tsv");
  testing::write_file(path, testing::kSampleGoldDots + "\n");
  const std::vector<RawDocument> docs = {parse_timed_line(testing::kSampleInput)};
  const auto labeled = load_external_predictions(path, docs);
  ASSERT_EQ(labeled.size(), 1u);
  EXPECT_EQ(labeled[0].labels, testing::sample_labels());
}

TEST(ExternalPredictions, UnpunctuatedAndMissingLines) {
  testing::TempDir dir;
  const std::string path = dir.file("out.tsv");
  const std::vector<RawDocument> docs = {parse_timed_line("a:0-1 b:2-3"), parse_timed_line("c:4-5")};
  testing::write_file(path, "a b\nc\n");
  for (const auto& d : load_external_predictions(path, docs)) {
    for (PunctClass c : d.labels) EXPECT_EQ(c, PunctClass::kBlank);
  }
  testing::write_file(path, "a b\n");
  EXPECT_THROW(load_external_predictions(path, docs), LineCountMismatch);
  testing::write_file(path, "a b\nx\n");
  try {
    load_external_predictions(path, docs);
    FAIL() << "expected AlignmentError";
  } catch (const AlignmentError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace punct
