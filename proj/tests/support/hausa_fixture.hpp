// Copyright 2026 The hausanoise Authors.
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

// Deterministic Hausa-like text for tests and demos: a core of common
// Hausa words plus syllable-built words in boko orthography (including
// the hooked letters), drawn with Zipf-like frequencies.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hausanoise::fixture {

// Sorted, duplicate-free vocabulary of about `size` words; deterministic.
std::vector<std::string> hausa_vocabulary(std::size_t size = 6000);

// `count` sentences of 6-22 words, capitalised and ending in '.', '?' or
// '!'. Different seeds give disjoint-looking corpora over one vocabulary.
std::vector<std::string> hausa_sentences(std::size_t count, std::uint64_t seed);

}  // namespace hausanoise::fixture
