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

// Probabilistic writing-error model and parallel corpus generation.
//
// A sentence is corrupted by four stages applied in a fixed order:
//
//   1. hooked-letter substitution   (incorrect_characters)
//   2. character operations          (delete/duplicate/substitute/transpose)
//   3. word-level 2-symbol chunks    (delete_chunk, insert_chunk)
//   4. spacing                       (random_spacing, remove_spaces)
//
// Probabilities apply per eligible site: per hooked letter, per non-space
// symbol, per word, per space or intra-word boundary. Every stage draws from
// one generator seeded with mix_seed(config.seed, sentence id), so a pair
// depends only on (clean text, id, config).
//
// Each fired operation is logged in a NoiseTrace as (name, position,
// before, after) with the position in symbols of the text as it stood when
// the operation fired. Replaying the log on the clean text in order yields
// the noisy text.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hausanoise/corpus.hpp"
#include "hausanoise/json.hpp"
#include "hausanoise/random.hpp"

namespace hausanoise::noise {

struct NoiseConfig {
  double random_spacing = 0.0;
  double remove_spaces = 0.0;
  double incorrect_characters = 0.0;
  double delete_characters = 0.0;
  double duplicate_characters = 0.0;
  double substitute_characters = 0.0;
  double transpose_characters = 0.0;
  double delete_chunk = 0.0;
  double insert_chunk = 0.0;
  std::uint64_t seed = 0;

  static constexpr std::size_t kNumProbabilities = 9;
  static constexpr std::array<std::string_view, kNumProbabilities> kKeys{
      "random_spacing",       "remove_spaces",         "incorrect_characters",
      "delete_characters",    "duplicate_characters",  "substitute_characters",
      "transpose_characters", "delete_chunk",          "insert_chunk"};

  // The published character-level configuration.
  static NoiseConfig table1();

  double probability(std::size_t index) const;
  void set_probability(std::size_t index, double value);

  // Throws ConfigError naming the first out-of-range key.
  void validate() const;

  Json to_json() const;
  // Exactly the nine probability keys plus an optional "seed"; unknown or
  // missing keys are ConfigErrors.
  static NoiseConfig from_json(const Json& doc);
  static NoiseConfig load(const std::filesystem::path& path);

  friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

struct TraceOp {
  std::string_view op;  // one of NoiseConfig::kKeys
  std::size_t position = 0;
  std::u32string before;
  std::u32string after;

  friend bool operator==(const TraceOp&, const TraceOp&) = default;
};

struct NoiseTrace {
  std::vector<TraceOp> ops;

  // Throws ValidationError if an op does not match the text it is applied to.
  std::u32string replay(std::u32string_view clean) const;

  Json to_json() const;
  static NoiseTrace from_json(const Json& ops);
};

struct ParallelPair {
  std::uint64_t id = 0;
  std::string clean;
  std::string noisy;
  NoiseTrace trace;
};

// Letters the substitute_characters operation draws from: basic Latin in
// both cases, the hooked letters in both cases, and the apostrophe.
std::u32string_view substitution_alphabet();

// The `trace` argument is optional for every stage.
std::u32string substitute_hooked(std::u32string_view text, double p, Rng& rng,
                                 NoiseTrace* trace = nullptr);
std::u32string perturb_spacing(std::u32string_view text, double p_insert,
                               double p_remove, Rng& rng,
                               NoiseTrace* trace = nullptr);
std::u32string perturb_characters(std::u32string_view text,
                                  const NoiseConfig& config, Rng& rng,
                                  NoiseTrace* trace = nullptr);
std::u32string perturb_chunks(std::u32string_view text, double p_delete,
                              double p_insert, Rng& rng,
                              NoiseTrace* trace = nullptr);

ParallelPair apply_noise(const corpus::SentenceRecord& sentence,
                         const NoiseConfig& config);

// In-memory generation; output order follows input order for any worker
// count.
std::vector<ParallelPair> generate_pairs(
    std::span<const corpus::SentenceRecord> sentences,
    const NoiseConfig& config, std::size_t workers = 1);

struct GenerationOptions {
  std::size_t workers = 1;
  std::size_t block_lines = 8192;
  std::optional<std::filesystem::path> trace_path;
};

struct GenerationSummary {
  NoiseConfig config;
  std::size_t input_lines = 0;
  std::size_t pairs = 0;
  std::size_t changed_pairs = 0;

  Json to_json() const;
};

// Streams a one-sentence-per-line corpus into `noisy<TAB>clean` lines.
// Sentence ids are 0-based line numbers; blank lines produce no pair but
// still consume an id. Throws ValidationError if the corpus has no
// sentences and IoError on unreadable/unwritable paths.
GenerationSummary generate_parallel_corpus(
    const std::filesystem::path& corpus_path,
    const std::filesystem::path& output_path, const NoiseConfig& config,
    const GenerationOptions& options = {});

std::string format_pair_line(const ParallelPair& pair);
std::string format_trace_line(const ParallelPair& pair);

struct TextPair {
  std::string noisy;
  std::string clean;
};

// Reads `noisy<TAB>clean` lines.
std::vector<TextPair> read_pairs_tsv(const std::filesystem::path& path);

}  // namespace hausanoise::noise
