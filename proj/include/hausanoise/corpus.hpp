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

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace hausanoise::corpus {

/// A cleaned, newline-free sentence with its position in the corpus.
///
/// `text` has no leading/trailing whitespace and no internal runs of more
/// than one space. Ids are assigned in reading order and seed the
/// per-sentence noise generator, so they must be stable for a given file.
struct SentenceRecord {
  std::uint64_t id = 0;
  std::string text;
  std::string source;

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) =
      default;
};

/// Set of lowercase word forms. Lookups case-fold the query first.
class Lexicon {
 public:
  Lexicon() = default;

  template <typename Range>
  static Lexicon from_words(const Range& words) {
    Lexicon lex;
    for (const auto& w : words) lex.insert(w);
    return lex;
  }

  // One word per line; blank lines and lines starting with '#' are skipped.
  static Lexicon load(const std::filesystem::path& path);

  // Throws ValidationError if `word` contains whitespace.
  void insert(std::string_view word);
  bool contains(std::string_view word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::unordered_set<std::string>& entries() const noexcept {
    return entries_;
  }

 private:
  std::unordered_set<std::string> entries_;
};

// Removes hashtags, citation markers like "[12]", replaces U+00A0 and the
// literal marker "NBSP" with a space, drops control characters, collapses
// whitespace and trims. Idempotent. Throws DecodeError on invalid UTF-8.
std::string clean_text(std::string_view raw);

// Splits cleaned text after '.', '!' or '?' when followed by whitespace and
// then an uppercase letter (or the end of the text).
std::vector<SentenceRecord> segment_sentences(std::string_view text,
                                              std::uint64_t first_id = 0,
                                              std::string_view source = {});

// Whitespace split with leading and trailing punctuation peeled off into
// one-symbol tokens. Apostrophes stay inside words.
std::vector<std::string> tokenize_words(std::string_view sentence);

// Plain Unicode-whitespace split.
std::vector<std::string> split_whitespace(std::string_view text);

std::string join(std::span<const std::string> parts, std::string_view sep);

}  // namespace hausanoise::corpus
