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

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "hausanoise/errors.hpp"
#include "hausanoise/metrics.hpp"
#include "hausanoise/unicode.hpp"

namespace hausanoise::metrics {

namespace {

using unicode::is_space;

bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

// [\{-\~\[-\` -\&\(-\+\:-\@\/]
bool is_13a_symbol(char32_t c) {
  return (c >= 0x7B && c <= 0x7E) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x20 && c <= 0x26) || (c >= 0x28 && c <= 0x2B) ||
         (c >= 0x3A && c <= 0x40) || c == 0x2F;
}

bool is_period_or_comma(char32_t c) { return c == U'.' || c == U','; }

void replace_all(std::u32string& s, std::u32string_view from,
                 std::u32string_view to) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, from.size(), from) == 0) {
      out.append(to);
      i += from.size();
    } else {
      out.push_back(s[i++]);
    }
  }
  s = std::move(out);
}

// Emulates a left-to-right, non-overlapping regex substitution of a
// two-symbol pattern.
template <typename Match, typename Emit>
std::u32string substitute_pairs(const std::u32string& s, Match match,
                                Emit emit) {
  std::u32string out;
  out.reserve(s.size() + s.size() / 4);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && match(s[i], s[i + 1])) {
      emit(out, s[i], s[i + 1]);
      i += 2;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

using NgramCounts = std::unordered_map<std::string, std::uint32_t>;

// Keys are the n-gram tokens joined by U+0001 and prefixed with the order.
NgramCounts count_ngrams(const std::vector<std::string>& tokens) {
  NgramCounts counts;
  for (int n = 1; n <= kBleuMaxOrder; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) break;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
      std::string key(1, static_cast<char>('0' + n));
      for (int k = 0; k < n; ++k) {
        key.push_back('\x01');
        key.append(tokens[i + static_cast<std::size_t>(k)]);
      }
      ++counts[key];
    }
  }
  return counts;
}

// Log that maps zero to a large negative value instead of -inf.
double safe_log(double x) { return x == 0.0 ? -9999999999.0 : std::log(x); }

}  // namespace

std::vector<std::string> tokenize_13a(std::string_view line) {
  std::u32string s = unicode::decode(line);
  while (!s.empty() && is_space(s.back())) s.pop_back();

  replace_all(s, U"<skipped>", U"");
  replace_all(s, U"-\n", U"");
  replace_all(s, U"\n", U" ");
  if (s.find(U'&') != std::u32string::npos) {
    replace_all(s, U"&quot;", U"\"");
    replace_all(s, U"&amp;", U"&");
    replace_all(s, U"&lt;", U"<");
    replace_all(s, U"&gt;", U">");
  }

  s = U" " + s + U" ";
  std::u32string padded;
  padded.reserve(s.size() * 3);
  for (char32_t c : s) {
    if (is_13a_symbol(c)) {
      padded.push_back(U' ');
      padded.push_back(c);
      padded.push_back(U' ');
    } else {
      padded.push_back(c);
    }
  }

  // Period and comma unless preceded by a digit.
  padded = substitute_pairs(
      padded,
      [](char32_t a, char32_t b) { return !is_ascii_digit(a) && is_period_or_comma(b); },
      [](std::u32string& out, char32_t a, char32_t b) {
        out.push_back(a);
        out.push_back(U' ');
        out.push_back(b);
        out.push_back(U' ');
      });
  // Period and comma unless followed by a digit.
  padded = substitute_pairs(
      padded,
      [](char32_t a, char32_t b) { return is_period_or_comma(a) && !is_ascii_digit(b); },
      [](std::u32string& out, char32_t a, char32_t b) {
        out.push_back(U' ');
        out.push_back(a);
        out.push_back(U' ');
        out.push_back(b);
      });
  // Dash when preceded by a digit.
  padded = substitute_pairs(
      padded,
      [](char32_t a, char32_t b) { return is_ascii_digit(a) && b == U'-'; },
      [](std::u32string& out, char32_t a, char32_t b) {
        out.push_back(a);
        out.push_back(U' ');
        out.push_back(b);
        out.push_back(U' ');
      });

  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < padded.size()) {
    while (i < padded.size() && is_space(padded[i])) ++i;
    std::size_t end = i;
    while (end < padded.size() && !is_space(padded[end])) ++end;
    if (end > i) {
      tokens.push_back(
          unicode::encode(std::u32string_view(padded).substr(i, end - i)));
    }
    i = end;
  }
  return tokens;
}

void BleuStats::merge(const BleuStats& other) {
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    correct[n] += other.correct[n];
    total[n] += other.total[n];
  }
  sys_len += other.sys_len;
  ref_len += other.ref_len;
}

double BleuStats::score() const {
  double bp = 1.0;
  if (sys_len < ref_len) {
    bp = sys_len > 0 ? std::exp(1.0 - static_cast<double>(ref_len) /
                                           static_cast<double>(sys_len))
                     : 0.0;
  }
  if (std::all_of(correct.begin(), correct.end(),
                  [](std::uint64_t c) { return c == 0; })) {
    return 0.0;
  }
  // Percent scale, mirroring the reference scorer's arithmetic.
  std::array<double, kBleuMaxOrder> precisions{};
  double smooth = 1.0;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    if (total[n] == 0) break;
    if (correct[n] == 0) {
      smooth *= 2.0;
      precisions[n] = 100.0 / (smooth * static_cast<double>(total[n]));
    } else {
      precisions[n] = 100.0 * static_cast<double>(correct[n]) /
                      static_cast<double>(total[n]);
    }
  }
  double log_sum = 0.0;
  for (double p : precisions) log_sum += safe_log(p);
  return bp * std::exp(log_sum / kBleuMaxOrder) / 100.0;
}

BleuStats bleu_stats(std::string_view ref, std::string_view hyp) {
  const auto ref_tokens = tokenize_13a(ref);
  const auto hyp_tokens = tokenize_13a(hyp);
  const auto ref_counts = count_ngrams(ref_tokens);
  const auto hyp_counts = count_ngrams(hyp_tokens);

  BleuStats stats;
  stats.sys_len = hyp_tokens.size();
  stats.ref_len = ref_tokens.size();
  for (const auto& [gram, count] : hyp_counts) {
    const int n = gram[0] - '1';
    stats.total[n] += count;
    auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) stats.correct[n] += std::min(count, it->second);
  }
  return stats;
}

double bleu_corpus(std::span<const std::string> refs,
                   std::span<const std::string> hyps) {
  if (refs.size() != hyps.size()) {
    throw ValidationError("BLEU needs one reference per hypothesis (" +
                          std::to_string(refs.size()) + " refs, " +
                          std::to_string(hyps.size()) + " hyps)");
  }
  BleuStats total;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    total.merge(bleu_stats(refs[i], hyps[i]));
  }
  return total.score();
}

}  // namespace hausanoise::metrics
