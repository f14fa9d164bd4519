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
#include <cstdio>
#include <map>
#include <string>

#include "hausanoise/corpus.hpp"
#include "hausanoise/errors.hpp"
#include "hausanoise/metrics.hpp"
#include "hausanoise/parallel.hpp"
#include "hausanoise/strdist.hpp"
#include "hausanoise/unicode.hpp"

namespace hausanoise::metrics {

namespace {

// Pairs per batched CER kernel call.
constexpr std::size_t kCerChunk = 1024;

double f1_from_tokens(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp) {
  if (ref.empty() && hyp.empty()) return 1.0;
  if (ref.empty() || hyp.empty()) return 0.0;
  std::map<std::string_view, std::size_t> counts;
  for (const auto& t : ref) ++counts[t];
  std::size_t overlap = 0;
  for (const auto& t : hyp) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double p = static_cast<double>(overlap) / static_cast<double>(hyp.size());
  const double r = static_cast<double>(overlap) / static_cast<double>(ref.size());
  return 2.0 * p * r / (p + r);
}

// Everything except the character edit count, which is batched separately.
PairStats word_level_stats(const std::string& ref, const std::string& hyp) {
  PairStats s;
  const auto ref_ws = corpus::split_whitespace(ref);
  const auto hyp_ws = corpus::split_whitespace(hyp);
  s.ref_words = ref_ws.size();
  s.word_edits = strdist::token_edit_distance(ref_ws, hyp_ws);
  s.bleu = bleu_stats(ref, hyp);
  s.meteor = meteor(ref, hyp);
  s.token_f1 = f1_from_tokens(corpus::tokenize_words(ref), corpus::tokenize_words(hyp));
  return s;
}

}  // namespace

double cer(std::string_view ref, std::string_view hyp) {
  const auto r = unicode::decode(ref);
  if (r.empty()) throw UndefinedMetricError("CER is undefined for an empty reference");
  const auto h = unicode::decode(hyp);
  return static_cast<double>(strdist::levenshtein(r, h)) /
         static_cast<double>(r.size());
}

double wer(std::string_view ref, std::string_view hyp) {
  const auto r = corpus::split_whitespace(ref);
  if (r.empty()) throw UndefinedMetricError("WER is undefined for an empty reference");
  const auto h = corpus::split_whitespace(hyp);
  return static_cast<double>(strdist::token_edit_distance(r, h)) /
         static_cast<double>(r.size());
}

double token_f1(std::string_view ref, std::string_view hyp) {
  return f1_from_tokens(corpus::tokenize_words(ref), corpus::tokenize_words(hyp));
}

void CorpusAccumulator::add(const PairStats& stats) {
  char_edits_ += stats.char_edits;
  ref_chars_ += stats.ref_chars;
  word_edits_ += stats.word_edits;
  ref_words_ += stats.ref_words;
  bleu_.merge(stats.bleu);
  meteor_sum_ += stats.meteor;
  f1_sum_ += stats.token_f1;
  ++pairs_;
}

void CorpusAccumulator::add_block(std::span<const std::string> refs,
                                  std::span<const std::string> hyps,
                                  std::size_t workers) {
  if (refs.size() != hyps.size()) {
    throw ValidationError("evaluation needs one hypothesis per reference (" +
                          std::to_string(refs.size()) + " refs, " +
                          std::to_string(hyps.size()) + " hyps)");
  }
  const std::size_t n = refs.size();
  std::vector<PairStats> stats(n);
  std::vector<std::u32string> ref_syms(n), hyp_syms(n);
  parallel_for(n, workers, [&](std::size_t i) {
    ref_syms[i] = unicode::decode(refs[i]);
    hyp_syms[i] = unicode::decode(hyps[i]);
    stats[i] = word_level_stats(refs[i], hyps[i]);
    stats[i].ref_chars = ref_syms[i].size();
  });

  // Character edits go through the batched kernel; results are exact
  // integers, so the kernel choice never changes the output.
  std::vector<std::uint32_t> edits(n);
  const std::size_t chunks = (n + kCerChunk - 1) / kCerChunk;
  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t begin = c * kCerChunk;
    const std::size_t end = std::min(n, begin + kCerChunk);
    std::vector<strdist::PairView> views;
    views.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      views.push_back({ref_syms[i], hyp_syms[i]});
    }
    strdist::levenshtein_batch(
        views, std::span<std::uint32_t>(edits).subspan(begin, end - begin));
  });

  for (std::size_t i = 0; i < n; ++i) {
    stats[i].char_edits = edits[i];
    add(stats[i]);
  }
}

void CorpusAccumulator::merge(const CorpusAccumulator& other) {
  char_edits_ += other.char_edits_;
  ref_chars_ += other.ref_chars_;
  word_edits_ += other.word_edits_;
  ref_words_ += other.ref_words_;
  bleu_.merge(other.bleu_);
  meteor_sum_ += other.meteor_sum_;
  f1_sum_ += other.f1_sum_;
  pairs_ += other.pairs_;
}

MetricReport CorpusAccumulator::report() const {
  if (pairs_ == 0) throw UndefinedMetricError("no sentence pairs to evaluate");
  if (ref_chars_ == 0 || ref_words_ == 0) {
    throw UndefinedMetricError("references are empty; CER and WER are undefined");
  }
  MetricReport r;
  r.pair_count = pairs_;
  r.bleu = bleu_.score();
  r.meteor = meteor_sum_ / static_cast<double>(pairs_);
  r.token_f1 = f1_sum_ / static_cast<double>(pairs_);
  r.wer = static_cast<double>(word_edits_) / static_cast<double>(ref_words_);
  r.cer = static_cast<double>(char_edits_) / static_cast<double>(ref_chars_);
  return r;
}

MetricReport evaluate_corpus(std::span<const std::string> refs,
                             std::span<const std::string> hyps,
                             std::size_t workers) {
  CorpusAccumulator acc;
  acc.add_block(refs, hyps, workers);
  return acc.report();
}

Json MetricReport::to_json() const {
  Json doc = Json::object();
  doc["pairs"] = pair_count;
  doc["bleu"] = bleu;
  doc["meteor"] = meteor;
  doc["token_f1"] = token_f1;
  doc["wer"] = wer;
  doc["cer"] = cer;
  doc["bleu_signature"] = "nrefs:1|case:mixed|eff:no|tok:13a|smooth:exp";
  return doc;
}

std::string MetricReport::to_table() const {
  std::string out = "metric    value\n";
  const std::pair<const char*, double> rows[] = {
      {"BLEU", bleu}, {"METEOR", meteor}, {"F1", token_f1},
      {"WER", wer},   {"CER", cer},
  };
  char line[64];
  for (const auto& [name, value] : rows) {
    std::snprintf(line, sizeof line, "%-8s  %.4f\n", name, value);
    out += line;
  }
  std::snprintf(line, sizeof line, "%-8s  %zu\n", "pairs", pair_count);
  out += line;
  return out;
}

}  // namespace hausanoise::metrics
