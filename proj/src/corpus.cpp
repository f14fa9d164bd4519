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

#include "hausanoise/corpus.hpp"

#include <algorithm>

#include "hausanoise/errors.hpp"
#include "hausanoise/io.hpp"
#include "hausanoise/unicode.hpp"

namespace hausanoise::corpus {

namespace {

using unicode::is_space;

constexpr std::u32string_view kNbspMarker = U"NBSP";

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

// Apostrophes mark glottal stops in boko spelling ('yan, ya'ya).
bool is_word_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

bool is_strippable(char32_t c) {
  return unicode::is_punct(c) && !is_word_apostrophe(c);
}

std::u32string replace_nbsp(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size();) {
    if (in[i] == 0x00A0) {
      out.push_back(U' ');
      ++i;
    } else if (in.substr(i, kNbspMarker.size()) == kNbspMarker) {
      out.push_back(U' ');
      i += kNbspMarker.size();
    } else {
      out.push_back(in[i++]);
    }
  }
  return out;
}

std::u32string drop_controls(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (char32_t c : in) {
    if (is_space(c)) {
      out.push_back(U' ');
    } else if (!unicode::is_control(c)) {
      out.push_back(c);
    }
  }
  return out;
}

std::u32string drop_hashtags(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size();) {
    if (in[i] == U'#' && i + 1 < in.size() && !is_space(in[i + 1])) {
      ++i;
      while (i < in.size() && !is_space(in[i])) ++i;
    } else {
      out.push_back(in[i++]);
    }
  }
  return out;
}

std::u32string drop_citations(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size();) {
    if (in[i] == U'[') {
      std::size_t j = i + 1;
      while (j < in.size() && is_ascii_digit(in[j])) ++j;
      if (j > i + 1 && j < in.size() && in[j] == U']') {
        // A marker set off by a space ("rediyo [3].") takes the space too.
        while (!out.empty() && is_space(out.back())) out.pop_back();
        i = j + 1;
        continue;
      }
    }
    out.push_back(in[i++]);
  }
  return out;
}

std::u32string collapse_whitespace(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t c : in) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::u32string clean_once(std::u32string_view text) {
  auto s = replace_nbsp(text);
  s = drop_controls(s);
  s = drop_hashtags(s);
  s = drop_citations(s);
  return collapse_whitespace(s);
}

}  // namespace

std::string clean_text(std::string_view raw) {
  std::u32string text = unicode::decode(raw);
  // Removing one artifact can expose another ("NB[1]SP"), so iterate to a
  // fixed point. Every pass is length non-increasing.
  for (;;) {
    std::u32string next = clean_once(text);
    if (next == text) break;
    text = std::move(next);
  }
  return unicode::encode(text);
}

std::vector<SentenceRecord> segment_sentences(std::string_view text,
                                              std::uint64_t first_id,
                                              std::string_view source) {
  const std::u32string s = unicode::decode(text);
  std::vector<SentenceRecord> out;
  std::uint64_t id = first_id;

  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(s[begin])) ++begin;
    while (end > begin && is_space(s[end - 1])) --end;
    if (begin == end) return;
    out.push_back(SentenceRecord{
        id++, unicode::encode(std::u32string_view(s).substr(begin, end - begin)),
        std::string(source)});
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char32_t c = s[i];
    if (c != U'.' && c != U'!' && c != U'?') continue;
    if (i + 1 >= s.size() || !is_space(s[i + 1])) continue;
    std::size_t j = i + 1;
    while (j < s.size() && is_space(s[j])) ++j;
    if (j == s.size() || unicode::is_upper(s[j])) {
      emit(start, i + 1);
      start = j;
      i = j - 1;
    }
  }
  emit(start, s.size());
  return out;
}

std::vector<std::string> tokenize_words(std::string_view sentence) {
  const std::u32string s = unicode::decode(sentence);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t end = i;
    while (end < s.size() && !is_space(s[end])) ++end;
    if (i == end) break;

    std::size_t core_begin = i;
    while (core_begin < end && is_strippable(s[core_begin])) {
      tokens.push_back(unicode::encode(std::u32string_view(&s[core_begin], 1)));
      ++core_begin;
    }
    std::size_t core_end = end;
    while (core_end > core_begin && is_strippable(s[core_end - 1])) --core_end;
    if (core_end > core_begin) {
      tokens.push_back(unicode::encode(
          std::u32string_view(s).substr(core_begin, core_end - core_begin)));
    }
    for (std::size_t k = core_end; k < end; ++k) {
      tokens.push_back(unicode::encode(std::u32string_view(&s[k], 1)));
    }
    i = end;
  }
  return tokens;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  // ASCII fast path covers the overwhelmingly common case.
  const bool ascii_only = std::all_of(text.begin(), text.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii_only) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_space(static_cast<unsigned char>(text[i])))
        ++i;
      std::size_t end = i;
      while (end < text.size() &&
             !is_space(static_cast<unsigned char>(text[end])))
        ++end;
      if (end > i) out.emplace_back(text.substr(i, end - i));
      i = end;
    }
    return out;
  }
  const std::u32string s = unicode::decode(text);
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t end = i;
    while (end < s.size() && !is_space(s[end])) ++end;
    if (end > i) {
      out.push_back(
          unicode::encode(std::u32string_view(s).substr(i, end - i)));
    }
    i = end;
  }
  return out;
}

std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  io::LineReader reader(path);
  Lexicon lex;
  std::size_t line_no = 0;
  while (auto line = reader.next()) {
    ++line_no;
    const std::u32string s = unicode::decode(*line);
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    if (b == e || s[b] == U'#') continue;
    const std::string word =
        unicode::encode(std::u32string_view(s).substr(b, e - b));
    try {
      lex.insert(word);
    } catch (const ValidationError& err) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": " + err.what());
    }
  }
  return lex;
}

void Lexicon::insert(std::string_view word) {
  std::u32string s = unicode::decode(word);
  if (s.empty()) return;
  if (std::any_of(s.begin(), s.end(), is_space)) {
    throw ValidationError("lexicon entry contains whitespace: '" +
                          std::string(word) + "'");
  }
  entries_.insert(unicode::encode(unicode::to_lower(s)));
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.count(unicode::fold_case(word)) != 0;
}

}  // namespace hausanoise::corpus
