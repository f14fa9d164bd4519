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

// Correction-quality metrics. All scores are on [0, 1] except WER and CER,
// which exceed 1 when hypotheses are much longer than references.
//
//   BLEU     corpus BLEU, 13a tokenization, mixed case, 4-grams, exponential
//            smoothing, no effective order. Matches the
//            "nrefs:1|case:mixed|eff:no|tok:13a|smooth:exp" reference scorer.
//   METEOR   exact unigram matching only; Fmean = 10PR / (R + 9P),
//            penalty = 0.5 (chunks / matches)^3. Corpus value is the mean.
//   F1       multiset token overlap (tokenize_words); corpus value is the
//            mean over pairs.
//   WER      whitespace-token edit distance / reference tokens, pooled.
//   CER      symbol edit distance (spaces included) / reference symbols,
//            pooled.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hausanoise/json.hpp"

namespace hausanoise::metrics {

inline constexpr int kBleuMaxOrder = 4;

struct MetricReport {
  double bleu = 0.0;
  double meteor = 0.0;
  double token_f1 = 0.0;
  double wer = 0.0;
  double cer = 0.0;
  std::size_t pair_count = 0;

  Json to_json() const;
  std::string to_table() const;
};

// Single-pair metrics. cer/wer throw UndefinedMetricError on an empty
// reference.
double cer(std::string_view ref, std::string_view hyp);
double wer(std::string_view ref, std::string_view hyp);
double meteor(std::string_view ref, std::string_view hyp);
double token_f1(std::string_view ref, std::string_view hyp);

// 13a tokenization as used by the standard MT scorers.
std::vector<std::string> tokenize_13a(std::string_view line);

struct BleuStats {
  std::array<std::uint64_t, kBleuMaxOrder> correct{};
  std::array<std::uint64_t, kBleuMaxOrder> total{};
  std::uint64_t sys_len = 0;
  std::uint64_t ref_len = 0;

  void merge(const BleuStats& other);
  // On [0, 1].
  double score() const;
};

BleuStats bleu_stats(std::string_view ref, std::string_view hyp);
// Throws ValidationError when the lists differ in length.
double bleu_corpus(std::span<const std::string> refs,
                   std::span<const std::string> hyps);

struct MeteorAlignment {
  std::size_t matches = 0;
  std::size_t chunks = 0;
};

// Maximum exact-match alignment with the fewest chunks.
MeteorAlignment meteor_align(std::span<const std::string> ref,
                             std::span<const std::string> hyp);

// Per-pair sufficient statistics. Folding them in order is associative,
// which is what makes block-parallel evaluation deterministic.
struct PairStats {
  std::uint64_t char_edits = 0;
  std::uint64_t ref_chars = 0;
  std::uint64_t word_edits = 0;
  std::uint64_t ref_words = 0;
  BleuStats bleu;
  double meteor = 0.0;
  double token_f1 = 0.0;
};

class CorpusAccumulator {
 public:
  void add(const PairStats& stats);
  // Scores a block of aligned pairs (in parallel) and folds them in order.
  void add_block(std::span<const std::string> refs,
                 std::span<const std::string> hyps, std::size_t workers = 1);
  void merge(const CorpusAccumulator& other);

  // Throws UndefinedMetricError when no pairs (or no reference symbols)
  // were seen.
  MetricReport report() const;

  std::size_t pairs() const noexcept { return pairs_; }

 private:
  std::uint64_t char_edits_ = 0;
  std::uint64_t ref_chars_ = 0;
  std::uint64_t word_edits_ = 0;
  std::uint64_t ref_words_ = 0;
  BleuStats bleu_;
  double meteor_sum_ = 0.0;
  double f1_sum_ = 0.0;
  std::size_t pairs_ = 0;
};

// Copy baseline: evaluate_corpus(clean, noisy).
MetricReport evaluate_corpus(std::span<const std::string> refs,
                             std::span<const std::string> hyps,
                             std::size_t workers = 1);

}  // namespace hausanoise::metrics
