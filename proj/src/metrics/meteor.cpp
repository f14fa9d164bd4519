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
#include <unordered_map>
#include <vector>

#include "hausanoise/corpus.hpp"
#include "hausanoise/metrics.hpp"
#include "hausanoise/strdist.hpp"

namespace hausanoise::metrics {

namespace {

constexpr double kAlpha = 0.9;  // Fmean = PR / (alpha P + (1 - alpha) R)
constexpr double kGamma = 0.5;
constexpr double kBeta = 3.0;
constexpr std::size_t kSearchNodeLimit = 200000;

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

std::size_t count_chunks(const std::vector<std::size_t>& hyp_to_ref) {
  std::size_t chunks = 0;
  std::size_t prev_ref = kUnmatched;
  bool prev_matched = false;
  for (std::size_t j : hyp_to_ref) {
    if (j == kUnmatched) {
      prev_matched = false;
      continue;
    }
    if (!prev_matched || j != prev_ref + 1) ++chunks;
    prev_matched = true;
    prev_ref = j;
  }
  return chunks;
}

// Longest-block-first greedy alignment; always reaches the maximum match
// count and is used as the incumbent for the exact search.
std::vector<std::size_t> greedy_alignment(const std::u32string& ref,
                                          const std::u32string& hyp) {
  std::vector<std::size_t> hyp_to_ref(hyp.size(), kUnmatched);
  std::vector<char> ref_used(ref.size(), 0);
  for (;;) {
    std::size_t best_len = 0, best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < hyp.size(); ++i) {
      if (hyp_to_ref[i] != kUnmatched) continue;
      for (std::size_t j = 0; j < ref.size(); ++j) {
        std::size_t len = 0;
        while (i + len < hyp.size() && j + len < ref.size() &&
               hyp_to_ref[i + len] == kUnmatched && !ref_used[j + len] &&
               hyp[i + len] == ref[j + len]) {
          ++len;
        }
        if (len > best_len) {
          best_len = len;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_len == 0) break;
    for (std::size_t k = 0; k < best_len; ++k) {
      hyp_to_ref[best_i + k] = best_j + k;
      ref_used[best_j + k] = 1;
    }
  }
  return hyp_to_ref;
}

// Depth-first branch and bound over hyp positions, minimising chunks
// subject to matching every type min(count_hyp, count_ref) times.
class ChunkSearch {
 public:
  ChunkSearch(const std::u32string& ref, const std::u32string& hyp)
      : ref_(ref), hyp_(hyp), ref_used_(ref.size(), 0),
        current_(hyp.size(), kUnmatched) {
    std::unordered_map<char32_t, std::size_t> ref_count;
    for (char32_t t : ref) ++ref_count[t];
    for (char32_t t : hyp) ++hyp_left_[t];
    for (auto& [t, hc] : hyp_left_) {
      auto it = ref_count.find(t);
      need_[t] = it == ref_count.end() ? 0 : std::min(hc, it->second);
    }
    for (std::size_t j = 0; j < ref.size(); ++j) positions_[ref[j]].push_back(j);
  }

  std::vector<std::size_t> run(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    best_chunks_ = count_chunks(best_);
    visit(0, 0);
    return best_;
  }

 private:
  void visit(std::size_t i, std::size_t chunks) {
    if (chunks >= best_chunks_ || ++nodes_ > kSearchNodeLimit) return;
    if (i == hyp_.size()) {
      best_ = current_;
      best_chunks_ = chunks;
      return;
    }
    const char32_t t = hyp_[i];
    std::size_t& need = need_[t];
    std::size_t& left = hyp_left_[t];
    --left;

    if (need > 0) {
      const std::size_t prev =
          i > 0 && current_[i - 1] != kUnmatched ? current_[i - 1] : kUnmatched;
      // Continuing the current chunk first finds good solutions early.
      std::vector<std::size_t> order;
      for (std::size_t j : positions_[t]) {
        if (ref_used_[j]) continue;
        if (prev != kUnmatched && j == prev + 1) {
          order.insert(order.begin(), j);
        } else {
          order.push_back(j);
        }
      }
      for (std::size_t j : order) {
        const bool extends = prev != kUnmatched && j == prev + 1;
        ref_used_[j] = 1;
        current_[i] = j;
        --need;
        visit(i + 1, chunks + (extends ? 0 : 1));
        ++need;
        current_[i] = kUnmatched;
        ref_used_[j] = 0;
      }
    }
    // Skipping is only allowed while enough occurrences remain to meet the
    // required match count for this type.
    if (left >= need) visit(i + 1, chunks);
    ++left;
  }

  const std::u32string& ref_;
  const std::u32string& hyp_;
  std::vector<char> ref_used_;
  std::vector<std::size_t> current_;
  std::unordered_map<char32_t, std::size_t> need_;
  std::unordered_map<char32_t, std::size_t> hyp_left_;
  std::unordered_map<char32_t, std::vector<std::size_t>> positions_;
  std::vector<std::size_t> best_;
  std::size_t best_chunks_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

MeteorAlignment meteor_align(std::span<const std::string> ref,
                             std::span<const std::string> hyp) {
  strdist::TokenInterner interner;
  const std::u32string r = interner.intern(ref);
  const std::u32string h = interner.intern(hyp);
  auto alignment = greedy_alignment(r, h);
  alignment = ChunkSearch(r, h).run(std::move(alignment));

  MeteorAlignment out;
  out.matches = static_cast<std::size_t>(std::count_if(
      alignment.begin(), alignment.end(),
      [](std::size_t j) { return j != kUnmatched; }));
  out.chunks = count_chunks(alignment);
  return out;
}

double meteor(std::string_view ref, std::string_view hyp) {
  const auto r = corpus::tokenize_words(ref);
  const auto h = corpus::tokenize_words(hyp);
  if (r.empty() || h.empty()) return 0.0;
  const auto [matches, chunks] = meteor_align(r, h);
  if (matches == 0) return 0.0;
  const double m = static_cast<double>(matches);
  const double precision = m / static_cast<double>(h.size());
  const double recall = m / static_cast<double>(r.size());
  const double fmean =
      precision * recall / (kAlpha * precision + (1.0 - kAlpha) * recall);
  const double penalty =
      kGamma * std::pow(static_cast<double>(chunks) / m, kBeta);
  return fmean * (1.0 - penalty);
}

}  // namespace hausanoise::metrics
