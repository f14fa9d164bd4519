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

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include "hausanoise/calibrate.hpp"
#include "hausanoise/corpus.hpp"
#include "hausanoise/dedup.hpp"
#include "hausanoise/digest.hpp"
#include "hausanoise/errors.hpp"
#include "hausanoise/io.hpp"
#include "hausanoise/json.hpp"
#include "hausanoise/metrics.hpp"
#include "hausanoise/noise.hpp"
#include "hausanoise/parallel.hpp"
#include "hausanoise/profile.hpp"
#include "hausanoise/strdist.hpp"

namespace hausanoise::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kBlockLines = 8192;
constexpr std::size_t kMaxWorkers = 1024;

// Provenance sidecar written next to the primary output of every run.
class RunManifest {
 public:
  RunManifest(std::string command, const CLI::App& sub)
      : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {
    for (const CLI::Option* opt : sub.get_options()) {
      if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") continue;
      const std::string name = "--" + opt->get_lnames()[0];
      if (opt->count() > 0) {
        const auto& results = opt->results();
        std::string value;
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (i > 0) value += ",";
          value += results[i];
        }
        if (opt->get_type_size() == 0 && value.empty()) value = "true";
        flags_[name] = value;
      } else if (!opt->get_default_str().empty()) {
        flags_[name] = opt->get_default_str();
      }
    }
  }

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add_input(const fs::path& p) { inputs_.push_back(p); }
  void add_output(const fs::path& p) { outputs_.push_back(p); }
  void set_summary(Json summary) { summary_ = std::move(summary); }

  void write(const fs::path& primary_output) const {
    Json doc = Json::object();
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = command_;
    doc["flags"] = flags_;
    if (seed_) {
      doc["seed"] = *seed_;
    } else {
      doc["seed"] = nullptr;
    }
    doc["inputs"] = digests(inputs_);
    doc["outputs"] = digests(outputs_);
    doc["summary"] = summary_;
    doc["levenshtein_kernel"] = strdist::kernel_name(strdist::active_kernel());
    doc["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    io::write_file(manifest_path(primary_output), doc.dump(2) + "\n");
  }

  static fs::path manifest_path(const fs::path& output) {
    return fs::path(output.string() + ".manifest.json");
  }

 private:
  static Json digests(const std::vector<fs::path>& paths) {
    Json list = Json::array();
    for (const auto& p : paths) {
      list.push_back(Json{{"path", p.string()}, {"sha256", sha256_file(p)}});
    }
    return list;
  }

  std::string command_;
  Json flags_ = Json::object();
  std::optional<std::uint64_t> seed_;
  std::vector<fs::path> inputs_;
  std::vector<fs::path> outputs_;
  Json summary_ = Json::object();
  std::chrono::steady_clock::time_point start_;
};

void write_json(const fs::path& path, const Json& doc) {
  io::write_file(path, doc.dump(2) + "\n");
}

Json parse_json_file(const fs::path& path) {
  const std::string text = io::read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": not a valid JSON document (" +
                          e.what() + ")");
  }
}

CLI::Option* add_workers(CLI::App* sub, std::size_t& workers) {
  return sub
      ->add_option("--workers", workers,
                   "Worker threads; never changes the output")
      ->check(CLI::Range(std::size_t{1}, kMaxWorkers))
      ->capture_default_str();
}

// ---------------------------------------------------------------- clean

struct CleanArgs {
  std::string in;
  std::string out;
  std::string source;
  std::size_t workers = 1;
};

void setup_clean(CLI::App* sub, CleanArgs& a) {
  sub->add_option("--in", a.in, "Raw UTF-8 text, one paragraph per line")->required();
  sub->add_option("--out", a.out, "Cleaned corpus, one sentence per line")->required();
  sub->add_option("--source", a.source, "Source label recorded in the manifest");
  add_workers(sub, a.workers);
}

int run_clean(const CleanArgs& a, RunManifest& manifest, std::ostream& out) {
  io::LineReader reader(a.in);
  io::LineWriter writer(a.out);
  std::size_t lines_in = 0, sentences = 0;
  for (;;) {
    const auto lines = reader.next_block(kBlockLines);
    if (lines.empty()) break;
    std::vector<std::vector<corpus::SentenceRecord>> segmented(lines.size());
    parallel_for(lines.size(), a.workers, [&](std::size_t i) {
      segmented[i] = corpus::segment_sentences(corpus::clean_text(lines[i]));
    });
    for (const auto& recs : segmented) {
      for (const auto& r : recs) {
        if (r.text.empty()) continue;
        writer.write(r.text);
        ++sentences;
      }
    }
    lines_in += lines.size();
  }
  writer.close();
  manifest.add_input(a.in);
  manifest.add_output(a.out);
  manifest.set_summary(Json{{"input_lines", lines_in},
                            {"sentences", sentences},
                            {"source", a.source}});
  manifest.write(a.out);
  out << "clean: " << lines_in << " lines -> " << sentences << " sentences\n";
  return kExitOk;
}

// -------------------------------------------------------------- profile

struct ProfileArgs {
  std::string corpus;
  std::string lexicon;
  std::string pairs;
  std::string out;
  std::string nearest_vocab;
  profile::ProfileOptions options;
};

void setup_profile(CLI::App* sub, ProfileArgs& a) {
  auto* corpus = sub->add_option("--corpus", a.corpus, "Noisy corpus to profile");
  auto* lexicon = sub->add_option("--lexicon", a.lexicon, "Standard word list");
  auto* pairs = sub->add_option(
      "--pairs", a.pairs,
      "noisy<TAB>clean pairs; profiles the synthetic distances instead");
  pairs->excludes(corpus)->excludes(lexicon);
  corpus->needs(lexicon);
  lexicon->needs(corpus);
  sub->add_option("--out", a.out, "Profile document (JSON)")->required();
  sub->add_option("--eps", a.options.eps, "DBSCAN radius")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--min-samples", a.options.min_samples, "DBSCAN core threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--bins", a.options.bins, "Histogram bins on [0, 1]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-bucket", a.options.max_bucket,
                  "Largest length bucket that may be clustered")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--nearest-vocab", a.nearest_vocab,
                  "Also write OOV word -> nearest lexicon word (TSV)")
      ->needs(corpus);
  add_workers(sub, a.options.workers);
}

int run_profile(const ProfileArgs& a, RunManifest& manifest, std::ostream& out) {
  Json doc;
  if (!a.pairs.empty()) {
    const auto text_pairs = noise::read_pairs_tsv(a.pairs);
    std::vector<noise::ParallelPair> pairs(text_pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      pairs[i].id = i;
      pairs[i].clean = text_pairs[i].clean;
      pairs[i].noisy = text_pairs[i].noisy;
    }
    const auto hist = profile::synthetic_histogram(pairs, a.options.bins);
    doc = Json::object();
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["mode"] = "synthetic";
    doc["histogram"] = hist.to_json();
    doc["pairs"] = pairs.size();
    manifest.add_input(a.pairs);
    out << "profile: " << hist.sample_count() << " changed-word distances from "
        << pairs.size() << " pairs\n";
  } else {
    if (a.corpus.empty()) {
      throw ValidationError("profile needs --corpus and --lexicon, or --pairs");
    }
    const auto lines = io::read_lines(a.corpus);
    const auto lexicon = corpus::Lexicon::load(a.lexicon);
    const auto result = profile::profile_corpus(lines, lexicon, a.options);
    doc = result.to_json();
    doc["mode"] = "empirical";
    manifest.add_input(a.corpus);
    manifest.add_input(a.lexicon);
    out << "profile: " << result.oov_count << " OOV words, "
        << result.cluster_count << " clusters, "
        << result.histogram.sample_count() << " intra-cluster distances\n";

    if (!a.nearest_vocab.empty()) {
      std::vector<std::string> tokens;
      for (const auto& line : lines) {
        auto t = corpus::tokenize_words(corpus::clean_text(line));
        tokens.insert(tokens.end(), t.begin(), t.end());
      }
      const auto oov = profile::flag_oov(tokens, lexicon);
      const std::vector<std::string> words(oov.begin(), oov.end());
      const auto nearest =
          profile::nearest_vocabulary(words, lexicon, a.options.workers);
      io::LineWriter writer(a.nearest_vocab);
      char dist[32];
      for (const auto& e : nearest) {
        std::snprintf(dist, sizeof dist, "%.6f", e.distance);
        writer.write(e.word + "\t" + e.nearest + "\t" + dist);
      }
      writer.close();
      manifest.add_output(a.nearest_vocab);
    }
  }
  write_json(a.out, doc);
  manifest.add_output(a.out);
  manifest.write(a.out);
  return kExitOk;
}

// ------------------------------------------------------------ calibrate

struct CalibrateArgs {
  std::string target;
  std::string corpus;
  std::string out;
  std::string config_out;
  calibrate::CalibrationOptions options;
};

void setup_calibrate(CLI::App* sub, CalibrateArgs& a) {
  sub->add_option("--target", a.target, "Target profile document")->required();
  sub->add_option("--corpus", a.corpus, "Clean corpus to corrupt")->required();
  sub->add_option("--out", a.out, "Calibration result document")->required();
  sub->add_option("--config-out", a.config_out, "Winning noise config");
  sub->add_option("--iterations", a.options.iterations, "Random-search candidates")
      ->capture_default_str();
  sub->add_option("--threshold", a.options.threshold, "Target JS distance")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--seed", a.options.seed, "Search and noise seed")
      ->capture_default_str();
  sub->add_option("--sample-size", a.options.sample_size,
                  "Sentences corrupted per candidate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--min-sentences", a.options.min_sentences,
                  "Smallest accepted corpus")
      ->capture_default_str();
  sub->add_flag("--early-stop", a.options.early_stop,
                "Stop at the first candidate under the threshold");
  add_workers(sub, a.options.workers);
}

int run_calibrate(CalibrateArgs& a, RunManifest& manifest, std::ostream& out) {
  const auto target = profile::load_profile_histogram(parse_json_file(a.target));
  std::vector<corpus::SentenceRecord> sentences;
  {
    io::LineReader reader(a.corpus);
    std::uint64_t id = 0;
    while (auto line = reader.next()) {
      if (!line->empty()) sentences.push_back({id, std::move(*line), {}});
      ++id;
    }
  }
  a.options.seed_config.seed = a.options.seed;
  const auto result = calibrate::calibrate(target, sentences, a.options);

  write_json(a.out, result.to_json());
  manifest.add_input(a.target);
  manifest.add_input(a.corpus);
  manifest.add_output(a.out);
  if (!a.config_out.empty()) {
    write_json(a.config_out, result.config.to_json());
    manifest.add_output(a.config_out);
  }
  manifest.set_seed(a.options.seed);
  manifest.set_summary(Json{{"js", result.js},
                            {"converged", result.converged},
                            {"iterations", result.iterations},
                            {"best_iteration", result.best_iteration}});
  manifest.write(a.out);

  char js[32];
  std::snprintf(js, sizeof js, "%.4f", result.js);
  out << "calibrate: best JS " << js << " at iteration " << result.best_iteration
      << " of " << result.iterations << " ("
      << (result.converged ? "converged" : "not converged") << ")\n";
  return result.converged ? kExitOk : kExitNotConverged;
}

// -------------------------------------------------------------- corrupt

struct CorruptArgs {
  std::string config;
  std::string in;
  std::string out;
  std::string trace;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
};

void setup_corrupt(CLI::App* sub, CorruptArgs& a) {
  sub->add_option("--config", a.config,
                  "Noise config document, or the built-in name 'table1'")
      ->required();
  sub->add_option("--in", a.in, "Clean corpus, one sentence per line")->required();
  sub->add_option("--out", a.out, "noisy<TAB>clean pairs")->required();
  sub->add_option("--trace", a.trace, "Per-sentence operation trace (JSONL)");
  sub->add_option("--seed", a.seed, "Overrides the config seed");
  add_workers(sub, a.workers);
}

int run_corrupt(const CorruptArgs& a, RunManifest& manifest, std::ostream& out) {
  noise::NoiseConfig config;
  if (a.config == "table1") {
    config = noise::NoiseConfig::table1();
  } else {
    config = noise::NoiseConfig::load(a.config);
    manifest.add_input(a.config);
  }
  if (a.seed) config.seed = *a.seed;
  config.validate();

  noise::GenerationOptions options;
  options.workers = a.workers;
  options.block_lines = kBlockLines;
  if (!a.trace.empty()) options.trace_path = a.trace;
  const auto summary = noise::generate_parallel_corpus(a.in, a.out, config, options);

  manifest.add_input(a.in);
  manifest.add_output(a.out);
  if (!a.trace.empty()) manifest.add_output(a.trace);
  manifest.set_seed(config.seed);
  manifest.set_summary(summary.to_json());
  manifest.write(a.out);
  out << "corrupt: " << summary.pairs << " pairs (" << summary.changed_pairs
      << " changed)\n";
  return kExitOk;
}

// ------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string ref;
  std::string hyp;
  std::string pairs;
  std::string out;
  std::size_t workers = 1;
};

void setup_evaluate(CLI::App* sub, EvaluateArgs& a) {
  auto* ref = sub->add_option("--ref", a.ref, "Reference (clean) sentences");
  auto* hyp = sub->add_option("--hyp", a.hyp, "Hypothesis sentences");
  auto* pairs = sub->add_option("--pairs", a.pairs,
                                "noisy<TAB>clean pairs scored as hyp/ref");
  ref->needs(hyp);
  hyp->needs(ref);
  pairs->excludes(ref)->excludes(hyp);
  sub->add_option("--out", a.out, "Metric report document (JSON)");
  add_workers(sub, a.workers);
}

int run_evaluate(const EvaluateArgs& a, RunManifest& manifest, std::ostream& out) {
  metrics::CorpusAccumulator acc;
  if (!a.pairs.empty()) {
    const auto pairs = noise::read_pairs_tsv(a.pairs);
    std::vector<std::string> refs, hyps;
    refs.reserve(pairs.size());
    hyps.reserve(pairs.size());
    for (const auto& p : pairs) {
      refs.push_back(p.clean);
      hyps.push_back(p.noisy);
    }
    acc.add_block(refs, hyps, a.workers);
    manifest.add_input(a.pairs);
  } else {
    if (a.ref.empty()) {
      throw ValidationError("evaluate needs --ref and --hyp, or --pairs");
    }
    io::LineReader refs(a.ref);
    io::LineReader hyps(a.hyp);
    for (;;) {
      const auto r = refs.next_block(kBlockLines);
      const auto h = hyps.next_block(kBlockLines);
      if (r.size() != h.size()) {
        throw ValidationError("--ref and --hyp have different line counts");
      }
      if (r.empty()) break;
      acc.add_block(r, h, a.workers);
    }
    manifest.add_input(a.ref);
    manifest.add_input(a.hyp);
  }
  const auto report = acc.report();
  out << report.to_table();
  if (!a.out.empty()) {
    write_json(a.out, report.to_json());
    manifest.add_output(a.out);
    manifest.set_summary(report.to_json());
    manifest.write(a.out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
  std::string a;
  std::string b;
  std::string out;
  dedup::AuditOptions options;
};

void setup_audit(CLI::App* sub, AuditArgs& a) {
  sub->add_option("--a", a.a, "Corpus A (e.g. evaluation set)")->required();
  sub->add_option("--b", a.b, "Corpus B (e.g. training set)")->required();
  sub->add_option("--threshold", a.options.threshold, "Jaccard threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_option("--num-perm", a.options.num_perm, "MinHash permutations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--shingle", a.options.shingle_size, "Word shingle size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", a.options.seed, "Hash family seed")
      ->capture_default_str();
  sub->add_flag("--exact", a.options.exact,
                "Keep only pairs whose exact shingle Jaccard also passes");
  sub->add_option("--out", a.out, "Overlap report document (JSON)");
  add_workers(sub, a.options.workers);
}

int run_audit(const AuditArgs& a, RunManifest& manifest, std::ostream& out) {
  a.options.validate();
  const auto corpus_b = io::read_lines(a.b);
  if (corpus_b.empty()) throw ValidationError("corpus B is empty");
  const dedup::OverlapIndex index(corpus_b, a.options);

  dedup::OverlapReport report;
  io::LineReader reader(a.a);
  std::size_t offset = 0;
  for (;;) {
    const auto block = reader.next_block(kBlockLines);
    if (block.empty()) break;
    auto found = index.query(block, offset);
    report.pairs.insert(report.pairs.end(), found.begin(), found.end());
    offset += block.size();
  }
  if (offset == 0) throw ValidationError("corpus A is empty");
  report.threshold = a.options.threshold;
  report.num_perm = a.options.num_perm;
  report.shingle_size = a.options.shingle_size;
  report.seed = a.options.seed;
  report.banding = index.banding();
  report.exact = a.options.exact;
  report.sentences_a = offset;
  report.sentences_b = corpus_b.size();
  report.sort_pairs();

  const Json doc = report.to_json();
  if (a.out.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    write_json(a.out, doc);
    manifest.add_input(a.a);
    manifest.add_input(a.b);
    manifest.add_output(a.out);
    manifest.set_seed(a.options.seed);
    manifest.set_summary(Json{{"overlaps", report.pairs.size()},
                              {"bands", report.banding.bands},
                              {"rows", report.banding.rows}});
    manifest.write(a.out);
    out << "audit: " << report.pairs.size() << " overlaps at threshold "
        << a.options.threshold << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Noise profiling, calibration, corruption, evaluation and "
               "contamination audit for noisy-text normalization corpora",
               kToolName};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);
  app.failure_message(CLI::FailureMessage::help);

  CleanArgs clean_args;
  ProfileArgs profile_args;
  CalibrateArgs calibrate_args;
  CorruptArgs corrupt_args;
  EvaluateArgs evaluate_args;
  AuditArgs audit_args;

  auto* clean = app.add_subcommand("clean", "Strip artifacts and segment sentences");
  setup_clean(clean, clean_args);
  auto* prof = app.add_subcommand("profile", "Build a word-distance profile");
  setup_profile(prof, profile_args);
  auto* calib = app.add_subcommand("calibrate", "Fit noise probabilities to a profile");
  setup_calibrate(calib, calibrate_args);
  auto* corrupt = app.add_subcommand("corrupt", "Generate noisy/clean pairs");
  setup_corrupt(corrupt, corrupt_args);
  auto* evaluate = app.add_subcommand("evaluate", "Score hypotheses against references");
  setup_evaluate(evaluate, evaluate_args);
  auto* audit = app.add_subcommand("audit", "MinHash-LSH overlap audit between corpora");
  setup_audit(audit, audit_args);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunManifest manifest(sub->get_name(), *sub);
    if (sub == clean) return run_clean(clean_args, manifest, out);
    if (sub == prof) return run_profile(profile_args, manifest, out);
    if (sub == calib) return run_calibrate(calibrate_args, manifest, out);
    if (sub == corrupt) return run_corrupt(corrupt_args, manifest, out);
    if (sub == evaluate) return run_evaluate(evaluate_args, manifest, out);
    return run_audit(audit_args, manifest, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace hausanoise::cli
