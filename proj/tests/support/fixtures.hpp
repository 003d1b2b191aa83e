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

// Shared fixtures: the sample transcript and its golden truth from the
// challenge data, plus small file helpers.

#ifndef PUNCT_TESTS_SUPPORT_FIXTURES_HPP_
#define PUNCT_TESTS_SUPPORT_FIXTURES_HPP_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "punct/punct_class.hpp"

namespace punct::testing {

inline const std::string kSampleInput =
    "I:5880-5880 teraz:5940-6180 mamy:6330-6450 drugi:6480-6900 dzień:6960-7080 takiej:7170-7410 "
    "ładnej:7440-7650 pogody:7830-8400 Ała:8430-8430 Nie:8760-8820 bij:8850-8970 mnie:9120-9330 "
    "kijem:9450-9870 To:10020-10080 boli:10170-10260";

// Golden truth as distributed (three dots) and after ellipsis folding.
inline const std::string kSampleGoldDots =
    "I teraz mamy drugi dzień takiej ładnej pogody... Ała! Nie bij mnie kijem! To boli!";
inline const std::string kSampleGold =
    "I teraz mamy drugi dzień takiej ładnej pogody… Ała! Nie bij mnie kijem! To boli!";

inline std::vector<PunctClass> sample_labels() {
  std::vector<PunctClass> labels(15, PunctClass::kBlank);
  labels[7] = PunctClass::kEllipsis;      // pogody
  labels[8] = PunctClass::kExclamation;   // Ała
  labels[12] = PunctClass::kExclamation;  // kijem
  labels[14] = PunctClass::kExclamation;  // boli
  return labels;
}

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("punct-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace punct::testing

#endif  // PUNCT_TESTS_SUPPORT_FIXTURES_HPP_
