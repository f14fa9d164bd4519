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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cli.hpp"
#include "dbscan_oracle.hpp"
#include "hausa_fixture.hpp"
#include "hausanoise/calibrate.hpp"
#include "hausanoise/corpus.hpp"
#include "hausanoise/dedup.hpp"
#include "hausanoise/digest.hpp"
#include "hausanoise/io.hpp"
#include "hausanoise/json.hpp"
#include "hausanoise/metrics.hpp"
#include "hausanoise/noise.hpp"
#include "hausanoise/profile.hpp"
#include "hausanoise/random.hpp"

using namespace hausanoise;
namespace fs = std::filesystem;
using Strings = std::vector<std::string>;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::size_t kSentences = 5000;

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << detail
            << std::endl;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
  std::array<char, 256> buf{};
  std::snprintf(buf.data(), buf.size(), format, a, b, c, d);
  return buf.data();
}

int run_cli(const Strings& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != cli::kExitOk && code != cli::kExitNotConverged) {
    std::cerr << "command failed (" << code << "): " << err.str();
  }
  return code;
}

// Runs a shell command and returns {exit status, stdout}.
std::pair<int, std::string> capture(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, output};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return {status, output};
}

std::vector<corpus::SentenceRecord> records(const Strings& lines) {
  std::vector<corpus::SentenceRecord> out;
  for (std::size_t i = 0; i < lines.size(); ++i) out.push_back({i, lines[i], {}});
  return out;
}

// Sentences from `seed` that do not occur in `exclude`.
Strings disjoint_sentences(std::size_t count, std::uint64_t seed, const Strings& exclude) {
  const std::unordered_set<std::string> seen(exclude.begin(), exclude.end());
  Strings out;
  for (const auto& s : fixture::hausa_sentences(count + count / 10, seed)) {
    if (!seen.count(s) && out.size() < count) out.push_back(s);
  }
  return out;
}

void copy_baseline(const fs::path& dir) {
  const auto start = Clock::now();
  io::write_lines(dir / "clean.txt", fixture::hausa_sentences(kSentences, 1001));
  bool ok = run_cli({"corrupt", "--config", "table1", "--in", (dir / "clean.txt").string(),
                     "--out", (dir / "pairs.tsv").string(), "--seed", "17"}) == 0;
  ok = ok && run_cli({"evaluate", "--pairs", (dir / "pairs.tsv").string(), "--out",
                      (dir / "report.json").string()}) == 0;
  const double elapsed = seconds_since(start);
  if (!ok) {
    report(1, "copy baseline", false, "pipeline failed");
    return;
  }
  const auto doc = Json::parse(io::read_file(dir / "report.json"));
  const double cer = doc["cer"], wer = doc["wer"], bleu = doc["bleu"];
  const bool pass = cer >= 0.05 && cer <= 0.12 && wer >= 0.35 && wer <= 0.65 &&
                    bleu >= 0.20 && bleu <= 0.45 && elapsed < 120.0;
  report(1, "copy baseline", pass,
         std::to_string(kSentences) + " sentences, " +
             fmt("CER %.4f in [0.05,0.12], WER %.4f in [0.35,0.65], BLEU %.4f in "
                 "[0.20,0.45], %.1f s < 120 s",
                 cer, wer, bleu, elapsed));
}

void calibration() {
  const auto start = Clock::now();
  const auto heldout = fixture::hausa_sentences(kSentences, 2001);
  const auto corpus = disjoint_sentences(kSentences, 2002, heldout);
  auto config = noise::NoiseConfig::table1();
  config.seed = 2003;
  const auto target =
      profile::synthetic_histogram(noise::generate_pairs(records(heldout), config), 20);
  calibrate::CalibrationOptions opt;
  opt.iterations = 500;
  opt.seed = 2004;
  const auto result = calibrate::calibrate(target, records(corpus), opt);
  const double elapsed = seconds_since(start);
  report(2, "calibration", result.js <= 0.15 && elapsed < 600.0,
         fmt("JS %.4f <= 0.15 after %.0f iterations (best at %.0f), %.1f s < 600 s", result.js,
             static_cast<double>(result.iterations), static_cast<double>(result.best_iteration),
             elapsed));
}

void bleu_oracle(const fs::path& dir) {
  Rng rng(3001);
  const auto clean = fixture::hausa_sentences(100, 3002);
  auto config = noise::NoiseConfig::table1();
  Json doc = Json::object();
  doc["pairs"] = Json::array();
  Strings refs, hyps;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    // Mix light, heavy and no corruption.
    const double scale = std::array<double, 4>{0.0, 0.5, 1.0, 3.0}[rng.below(4)];
    auto c = noise::NoiseConfig::table1();
    for (std::size_t k = 0; k < noise::NoiseConfig::kNumProbabilities; ++k) {
      c.set_probability(k, std::min(1.0, scale * config.probability(k)));
    }
    c.seed = 3003 + i;
    const auto pair = noise::apply_noise({i, clean[i], {}}, c);
    refs.push_back(pair.clean);
    hyps.push_back(pair.noisy);
    doc["pairs"].push_back(Json{{"ref", pair.clean}, {"hyp", pair.noisy}});
  }
  io::write_file(dir / "bleu_pairs.json", doc.dump());
  const auto [status, out] =
      capture("python3 '" HAUSANOISE_TEST_DATA_DIR "/sacrebleu_score.py' '" +
              (dir / "bleu_pairs.json").string() + "' 2>/dev/null");
  if (status != 0) {
    report(3, "BLEU oracle", false, "sacrebleu not available (python3 -m pip install sacrebleu)");
    return;
  }
  const auto oracle = Json::parse(out);
  double worst = std::abs(metrics::bleu_corpus(refs, hyps) - oracle["corpus_bleu"].get<double>());
  const auto singles = oracle["single_pair_bleu"].get<std::vector<double>>();
  for (std::size_t i = 0; i < refs.size(); ++i) {
    const Strings r{refs[i]}, h{hyps[i]};
    worst = std::max(worst, std::abs(metrics::bleu_corpus(r, h) - singles[i]));
  }
  report(3, "BLEU oracle", worst <= 1e-4,
         "100 pairs + corpus vs " + oracle["signature"].get<std::string>() +
             fmt(", max |diff| %.2e <= 1e-4", worst));
}

void dbscan_oracle() {
  Rng rng(4001);
  int mismatches = 0;
  std::size_t clusters = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(100);
    const auto dense = testing::random_distance_matrix(rng, n);
    const auto got = profile::dbscan(profile::DistanceMatrix::from_dense(dense), 0.4, 2);
    clusters += got.cluster_count();
    if (testing::canonical_labels(got.labels) !=
        testing::canonical_labels(testing::dbscan_oracle(dense, 0.4, 2))) {
      ++mismatches;
    }
  }
  report(4, "DBSCAN oracle", mismatches == 0,
         std::to_string(200 - mismatches) + "/200 matrices equal up to relabelling (" +
             std::to_string(clusters) + " clusters total)");
}

void minhash_checks() {
  Rng rng(5001);
  constexpr std::size_t kPerm = 128;
  bool unbiased = true;
  std::string detail;
  for (double j : {0.2, 1.0 / 3.0, 0.5, 0.8}) {
    double sum = 0.0;
    for (int t = 0; t < 200; ++t) {
      const std::uint64_t u = 30 * (1 + rng.below(4));
      const auto c = static_cast<std::uint64_t>(std::llround(j * static_cast<double>(u)));
      const std::uint64_t base = rng.next_u64() >> 8;
      const std::uint64_t only_a = (u - c) / 2;
      std::vector<std::uint64_t> a, b;
      for (std::uint64_t k = 0; k < u; ++k) {
        if (k < c + only_a) a.push_back(base + k);
        if (k < c || k >= c + only_a) b.push_back(base + k);
      }
      sum += dedup::minhash(a, kPerm, 5002 + t).jaccard(dedup::minhash(b, kPerm, 5002 + t));
    }
    const double dev = std::abs(sum / 200 - j);
    const double bound = 3 * std::sqrt(j * (1 - j) / kPerm);
    unbiased = unbiased && dev < bound;
    detail += fmt("J=%.3f dev %.4f<%.4f; ", j, dev, bound);
  }

  // Planted near-duplicates between two corpora of random sentences.
  const auto vocab = fixture::hausa_vocabulary();
  Strings a, b;
  std::vector<std::pair<std::size_t, std::size_t>> planted;
  for (int i = 0; i < 2000; ++i) {
    Strings words;
    const std::size_t len = 15 + rng.below(20);
    for (std::size_t w = 0; w < len; ++w) words.push_back(vocab[rng.below(vocab.size())]);
    a.push_back(corpus::join(words, " "));
    Strings other = words;
    if (i % 4 == 0) {
      other[rng.below(len)] = "sabo" + std::to_string(i);
    } else {
      for (auto& w : other) w = vocab[rng.below(vocab.size())];
    }
    b.push_back(corpus::join(other, " "));
    if (i % 4 == 0 &&
        dedup::exact_jaccard(dedup::shingle(a.back(), 3), dedup::shingle(b.back(), 3)) >= 0.8) {
      planted.emplace_back(a.size() - 1, b.size() - 1);
    }
  }
  dedup::AuditOptions opt;
  opt.threshold = 0.5;
  opt.seed = 5003;
  const auto found = dedup::audit_overlap(a, b, opt);
  std::set<std::pair<std::size_t, std::size_t>> hits;
  for (const auto& p : found.pairs) hits.insert({p.a, p.b});
  std::size_t recovered = 0;
  for (const auto& p : planted) recovered += hits.count(p);
  report(5, "MinHash", unbiased && recovered == planted.size() && !planted.empty(),
         detail + std::to_string(recovered) + "/" + std::to_string(planted.size()) +
             " planted pairs with J>=0.8 recovered at threshold 0.5");
}

void determinism(const fs::path& dir) {
  const auto clean = fixture::hausa_sentences(kSentences, 6001);
  const auto other = disjoint_sentences(kSentences, 6002, clean);
  io::write_lines(dir / "clean.txt", clean);
  io::write_lines(dir / "other.txt", other);
  const auto p = [&](const std::string& f) { return (dir / f).string(); };
  bool ok = run_cli({"corrupt", "--config", "table1", "--in", p("other.txt"), "--out",
                     p("target_pairs.tsv"), "--seed", "6003"}) == 0 &&
            run_cli({"profile", "--pairs", p("target_pairs.tsv"), "--out", p("target.json")}) == 0;
  std::set<std::string> corrupt, calib, audit;
  for (const std::string workers : {"1", "4", "8"}) {
    ok = ok && run_cli({"corrupt", "--config", "table1", "--in", p("clean.txt"), "--out",
                        p("pairs.tsv"), "--trace", p("trace.jsonl"), "--seed", "6004",
                        "--workers", workers}) == 0;
    corrupt.insert(sha256_file(p("pairs.tsv")) + sha256_file(p("trace.jsonl")));
    const int code = run_cli({"calibrate", "--target", p("target.json"), "--corpus",
                              p("clean.txt"), "--iterations", "40", "--seed", "6005", "--out",
                              p("calibration.json"), "--config-out", p("best.json"),
                              "--workers", workers});
    ok = ok && (code == 0 || code == cli::kExitNotConverged);
    calib.insert(sha256_file(p("calibration.json")) + sha256_file(p("best.json")));
    ok = ok && run_cli({"audit", "--a", p("clean.txt"), "--b", p("other.txt"), "--seed", "6006",
                        "--out", p("audit.json"), "--workers", workers}) == 0;
    audit.insert(sha256_file(p("audit.json")));
  }
  report(6, "determinism", ok && corrupt.size() == 1 && calib.size() == 1 && audit.size() == 1,
         "--workers 1/4/8 distinct digests: corrupt " + std::to_string(corrupt.size()) +
             ", calibrate " + std::to_string(calib.size()) + ", audit " +
             std::to_string(audit.size()) + " (manifests excluded)");
}

void property_suite() {
  const double meteor = metrics::meteor("daɗi", "daɗi");
  const double f1 = metrics::token_f1("ba shi da daɗi", "bashi da daɗi");
  const double wer = metrics::wer("ba shi da daɗi", "bashi da daɗi");
  const double cer = metrics::cer("ƙasa", "kasa");
  const double js = calibrate::js_distance(std::vector<double>{1.0, 0.0},
                                           std::vector<double>{0.5, 0.5});
  const bool hand = std::abs(meteor - 0.5) < 1e-12 && std::abs(f1 - 4.0 / 7.0) < 1e-12 &&
                    std::abs(wer - 0.5) < 1e-12 && std::abs(cer - 0.25) < 1e-12 &&
                    std::abs(js - 0.5579) < 5e-5;
  const auto [status, out] = capture("'" HAUSANOISE_TESTS_BIN
                                     "' --test-suite=strdist,metrics,calibrate "
                                     "--test-case='property*' --no-colors=true 2>&1");
  std::string summary = "no summary";
  const auto pos = out.find("[doctest] assertions:");
  if (pos != std::string::npos) summary = out.substr(pos + 10, out.find('\n', pos) - pos - 10);
  report(7, "property suite", hand && status == 0,
         fmt("METEOR %.4f, F1 %.4f, WER %.4f, CER %.4f; ", meteor, f1, wer, cer) +
             fmt("JS %.4f; property cases (>=1000 each for strdist/metrics/calibrate): ", js) +
             summary);
}

}  // namespace

int main() {
  const fs::path root = fs::temp_directory_path() / "hausanoise_acceptance";
  fs::remove_all(root);
  for (const char* sub : {"c1", "c3", "c6"}) fs::create_directories(root / sub);
  try {
    copy_baseline(root / "c1");
    calibration();
    bleu_oracle(root / "c3");
    dbscan_oracle();
    minhash_checks();
    determinism(root / "c6");
    property_suite();
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
    ++g_failures;
  }
  fs::remove_all(root);
  return g_failures == 0 ? 0 : 1;
}
