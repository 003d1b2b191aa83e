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

// Umbrella header for the punct library.

#ifndef PUNCT_PUNCT_HPP_
#define PUNCT_PUNCT_HPP_

#include "punct/chunker.hpp"
#include "punct/corpus_io.hpp"
#include "punct/errors.hpp"
#include "punct/evaluator.hpp"
#include "punct/punct_class.hpp"
#include "punct/stats.hpp"
#include "punct/tagger.hpp"
#include "punct/utf8.hpp"

#endif  // PUNCT_PUNCT_HPP_
