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

#include "hausanoise/noise.hpp"

#include <algorithm>
#include <cmath>

#include "hausanoise/errors.hpp"
#include "hausanoise/io.hpp"
#include "hausanoise/parallel.hpp"
#include "hausanoise/unicode.hpp"

namespace hausanoise::noise {

namespace {

constexpr std::string_view kRandomSpacing = NoiseConfig::kKeys[0];
constexpr std::string_view kRemoveSpaces = NoiseConfig::kKeys[1];
constexpr std::string_view kIncorrectCharacters = NoiseConfig::kKeys[2];
constexpr std::string_view kDeleteCharacters = NoiseConfig::kKeys[3];
constexpr std::string_view kDuplicateCharacters = NoiseConfig::kKeys[4];
constexpr std::string_view kSubstituteCharacters = NoiseConfig::kKeys[5];
constexpr std::string_view kTransposeCharacters = NoiseConfig::kKeys[6];
constexpr std::string_view kDeleteChunk = NoiseConfig::kKeys[7];
constexpr std::string_view kInsertChunk = NoiseConfig::kKeys[8];

constexpr std::u32string_view kAlphabet =
    U"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    U"ɓɗƙƴƁƊƘƳ'";

bool is_space(char32_t c) { return c == U' '; }

void log_op(NoiseTrace* trace, std::string_view op, std::size_t position,
            std::u32string before, std::u32string after) {
  if (trace) {
    trace->ops.push_back(
        TraceOp{op, position, std::move(before), std::move(after)});
  }
}

std::string_view canonical_key(std::string_view name) {
  for (auto key : NoiseConfig::kKeys) {
    if (key == name) return key;
  }
  throw ValidationError("unknown noise operation '" + std::string(name) + "'");
}

}  // namespace

NoiseConfig NoiseConfig::table1() {
  NoiseConfig c;
  c.random_spacing = 0.02;
  c.remove_spaces = 0.15;
  c.incorrect_characters = 0.02;
  c.delete_characters = 0.005;
  c.duplicate_characters = 0.01;
  c.substitute_characters = 0.001;
  c.transpose_characters = 0.01;
  c.delete_chunk = 0.0015;
  c.insert_chunk = 0.001;
  return c;
}

double NoiseConfig::probability(std::size_t index) const {
  switch (index) {
    case 0: return random_spacing;
    case 1: return remove_spaces;
    case 2: return incorrect_characters;
    case 3: return delete_characters;
    case 4: return duplicate_characters;
    case 5: return substitute_characters;
    case 6: return transpose_characters;
    case 7: return delete_chunk;
    case 8: return insert_chunk;
    default: throw ValidationError("probability index out of range");
  }
}

void NoiseConfig::set_probability(std::size_t index, double value) {
  switch (index) {
    case 0: random_spacing = value; break;
    case 1: remove_spaces = value; break;
    case 2: incorrect_characters = value; break;
    case 3: delete_characters = value; break;
    case 4: duplicate_characters = value; break;
    case 5: substitute_characters = value; break;
    case 6: transpose_characters = value; break;
    case 7: delete_chunk = value; break;
    case 8: insert_chunk = value; break;
    default: throw ValidationError("probability index out of range");
  }
}

void NoiseConfig::validate() const {
  for (std::size_t i = 0; i < kNumProbabilities; ++i) {
    const double p = probability(i);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("noise probability '" + std::string(kKeys[i]) +
                        "' is " + Json(p).dump() + ", outside [0, 1]");
    }
  }
}

Json NoiseConfig::to_json() const {
  Json doc = Json::object();
  for (std::size_t i = 0; i < kNumProbabilities; ++i) {
    doc[std::string(kKeys[i])] = probability(i);
  }
  doc["seed"] = seed;
  return doc;
}

NoiseConfig NoiseConfig::from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("noise config must be an object");
  NoiseConfig c;
  std::array<bool, kNumProbabilities> seen{};
  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned()) {
        throw ConfigError("noise config key 'seed' must be an unsigned integer");
      }
      c.seed = value.get<std::uint64_t>();
      continue;
    }
    auto it = std::find(kKeys.begin(), kKeys.end(), key);
    if (it == kKeys.end()) {
      throw ConfigError("unknown noise config key '" + key + "'");
    }
    if (!value.is_number()) {
      throw ConfigError("noise config key '" + key + "' must be a number");
    }
    const auto index = static_cast<std::size_t>(it - kKeys.begin());
    c.set_probability(index, value.get<double>());
    seen[index] = true;
  }
  for (std::size_t i = 0; i < kNumProbabilities; ++i) {
    if (!seen[i]) {
      throw ConfigError("noise config is missing key '" +
                        std::string(kKeys[i]) + "'");
    }
  }
  c.validate();
  return c;
}

NoiseConfig NoiseConfig::load(const std::filesystem::path& path) {
  const std::string text = io::read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return from_json(doc);
}

std::u32string NoiseTrace::replay(std::u32string_view clean) const {
  std::u32string s(clean);
  for (const auto& op : ops) {
    if (op.position > s.size() ||
        s.compare(op.position, op.before.size(), op.before) != 0) {
      throw ValidationError("trace op '" + std::string(op.op) +
                            "' does not match text at position " +
                            std::to_string(op.position));
    }
    s.replace(op.position, op.before.size(), op.after);
  }
  return s;
}

Json NoiseTrace::to_json() const {
  Json arr = Json::array();
  for (const auto& op : ops) {
    arr.push_back(Json::array({std::string(op.op), op.position,
                               unicode::encode(op.before),
                               unicode::encode(op.after)}));
  }
  return arr;
}

NoiseTrace NoiseTrace::from_json(const Json& arr) {
  NoiseTrace trace;
  if (!arr.is_array()) throw ValidationError("trace must be an array");
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 4) {
      throw ValidationError("trace op must be [name, position, before, after]");
    }
    trace.ops.push_back(TraceOp{
        canonical_key(item[0].get<std::string>()),
        item[1].get<std::size_t>(),
        unicode::decode(item[2].get<std::string>()),
        unicode::decode(item[3].get<std::string>())});
  }
  return trace;
}

std::u32string_view substitution_alphabet() { return kAlphabet; }

std::u32string substitute_hooked(std::u32string_view text, double p, Rng& rng,
                                 NoiseTrace* trace) {
  std::u32string out(text);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!unicode::is_hooked(out[i]) || !rng.bernoulli(p)) continue;
    const char32_t plain = unicode::unhook(out[i]);
    log_op(trace, kIncorrectCharacters, i, std::u32string(1, out[i]),
           std::u32string(1, plain));
    out[i] = plain;
  }
  return out;
}

std::u32string perturb_characters(std::u32string_view text,
                                  const NoiseConfig& config, Rng& rng,
                                  NoiseTrace* trace) {
  std::u32string out;
  out.reserve(text.size() + text.size() / 8);
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t c = text[i];
    if (is_space(c)) {
      out.push_back(c);
      ++i;
      continue;
    }
    const std::size_t pos = out.size();
    if (rng.bernoulli(config.delete_characters)) {
      log_op(trace, kDeleteCharacters, pos, std::u32string(1, c), U"");
      ++i;
      continue;
    }
    if (rng.bernoulli(config.duplicate_characters)) {
      log_op(trace, kDuplicateCharacters, pos, std::u32string(1, c),
             std::u32string(2, c));
      out.push_back(c);
      out.push_back(c);
      ++i;
      continue;
    }
    if (rng.bernoulli(config.substitute_characters)) {
      const char32_t repl = kAlphabet[rng.below(kAlphabet.size())];
      log_op(trace, kSubstituteCharacters, pos, std::u32string(1, c),
             std::u32string(1, repl));
      out.push_back(repl);
      ++i;
      continue;
    }
    const bool can_swap = i + 1 < text.size() && !is_space(text[i + 1]);
    if (can_swap && rng.bernoulli(config.transpose_characters)) {
      const char32_t next = text[i + 1];
      log_op(trace, kTransposeCharacters, pos, std::u32string{c, next},
             std::u32string{next, c});
      out.push_back(next);
      out.push_back(c);
      i += 2;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

std::u32string perturb_chunks(std::u32string_view text, double p_delete,
                              double p_insert, Rng& rng, NoiseTrace* trace) {
  std::u32string out;
  out.reserve(text.size() + 8);
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::u32string word(text.substr(i, end - i));
    const std::size_t word_start = out.size();

    if (word.size() >= 3 && rng.bernoulli(p_delete)) {
      const std::size_t offset = rng.below(word.size() - 1);
      log_op(trace, kDeleteChunk, word_start + offset, word.substr(offset, 2),
             U"");
      word.erase(offset, 2);
    }
    if (word.size() >= 2 && rng.bernoulli(p_insert)) {
      const std::size_t source = rng.below(word.size() - 1);
      const std::u32string chunk = word.substr(source, 2);
      const std::size_t at = rng.below(word.size() + 1);
      log_op(trace, kInsertChunk, word_start + at, U"", chunk);
      word.insert(at, chunk);
    }
    out += word;
    i = end;
  }
  return out;
}

std::u32string perturb_spacing(std::u32string_view text, double p_insert,
                               double p_remove, Rng& rng, NoiseTrace* trace) {
  std::u32string out;
  out.reserve(text.size() + text.size() / 16);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    if (is_space(c)) {
      if (rng.bernoulli(p_remove)) {
        log_op(trace, kRemoveSpaces, out.size(), U" ", U"");
      } else {
        out.push_back(c);
      }
      continue;
    }
    out.push_back(c);
    if (i + 1 < text.size() && !is_space(text[i + 1]) &&
        rng.bernoulli(p_insert)) {
      log_op(trace, kRandomSpacing, out.size(), U"", U" ");
      out.push_back(U' ');
    }
  }
  return out;
}

ParallelPair apply_noise(const corpus::SentenceRecord& sentence,
                         const NoiseConfig& config) {
  ParallelPair pair;
  pair.id = sentence.id;
  pair.clean = sentence.text;

  Rng rng(mix_seed(config.seed, sentence.id));
  NoiseTrace* trace = &pair.trace;
  std::u32string s = unicode::decode(sentence.text);
  s = substitute_hooked(s, config.incorrect_characters, rng, trace);
  s = perturb_characters(s, config, rng, trace);
  s = perturb_chunks(s, config.delete_chunk, config.insert_chunk, rng, trace);
  s = perturb_spacing(s, config.random_spacing, config.remove_spaces, rng,
                      trace);
  pair.noisy = unicode::encode(s);
  return pair;
}

std::vector<ParallelPair> generate_pairs(
    std::span<const corpus::SentenceRecord> sentences,
    const NoiseConfig& config, std::size_t workers) {
  config.validate();
  std::vector<ParallelPair> pairs(sentences.size());
  parallel_for(sentences.size(), workers, [&](std::size_t i) {
    pairs[i] = apply_noise(sentences[i], config);
  });
  return pairs;
}

Json GenerationSummary::to_json() const {
  Json doc = Json::object();
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["config"] = config.to_json();
  doc["seed"] = config.seed;
  doc["input_lines"] = input_lines;
  doc["pairs"] = pairs;
  doc["changed_pairs"] = changed_pairs;
  return doc;
}

std::string format_pair_line(const ParallelPair& pair) {
  std::string line;
  line.reserve(pair.noisy.size() + pair.clean.size() + 1);
  line += pair.noisy;
  line += '\t';
  line += pair.clean;
  return line;
}

std::string format_trace_line(const ParallelPair& pair) {
  Json doc = Json::object();
  doc["id"] = pair.id;
  doc["ops"] = pair.trace.to_json();
  return doc.dump();
}

GenerationSummary generate_parallel_corpus(
    const std::filesystem::path& corpus_path,
    const std::filesystem::path& output_path, const NoiseConfig& config,
    const GenerationOptions& options) {
  config.validate();
  io::LineReader reader(corpus_path);
  io::LineWriter writer(output_path);
  std::optional<io::LineWriter> trace_writer;
  if (options.trace_path) trace_writer.emplace(*options.trace_path);

  GenerationSummary summary;
  summary.config = config;
  const std::size_t block = std::max<std::size_t>(1, options.block_lines);
  for (;;) {
    std::vector<std::string> lines = reader.next_block(block);
    if (lines.empty()) break;
    std::vector<corpus::SentenceRecord> sentences;
    sentences.reserve(lines.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const std::uint64_t id = summary.input_lines + k;
      if (lines[k].empty()) continue;
      if (lines[k].find('\t') != std::string::npos) {
        throw ValidationError(corpus_path.string() + ":" + std::to_string(id + 1) +
                              ": TAB in input sentence (run clean first)");
      }
      sentences.push_back({id, std::move(lines[k]), {}});
    }
    summary.input_lines += lines.size();

    const auto pairs = generate_pairs(sentences, config, options.workers);
    for (const auto& pair : pairs) {
      writer.write(format_pair_line(pair));
      if (trace_writer) trace_writer->write(format_trace_line(pair));
      ++summary.pairs;
      if (pair.noisy != pair.clean) ++summary.changed_pairs;
    }
  }
  writer.close();
  if (trace_writer) trace_writer->close();
  if (summary.pairs == 0) {
    throw ValidationError("corpus '" + corpus_path.string() +
                          "' contains no sentences");
  }
  return summary;
}

std::vector<TextPair> read_pairs_tsv(const std::filesystem::path& path) {
  io::LineReader reader(path);
  std::vector<TextPair> pairs;
  std::size_t line_no = 0;
  while (auto line = reader.next()) {
    ++line_no;
    if (line->empty()) continue;
    const auto tab = line->find('\t');
    if (tab == std::string::npos || line->find('\t', tab + 1) != std::string::npos) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected exactly one TAB (noisy<TAB>clean)");
    }
    pairs.push_back({line->substr(0, tab), line->substr(tab + 1)});
  }
  return pairs;
}

}  // namespace hausanoise::noise
