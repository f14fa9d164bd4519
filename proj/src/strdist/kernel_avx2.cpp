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

// Inter-sequence vectorised Levenshtein: each of the eight 32-bit lanes
// holds the DP cell of a different (a, b) pair. Rows walk b, columns walk
// a. Lanes shorter than the group maximum are padded with two distinct
// sentinels so padding never matches, and each lane's answer is read out
// of the row buffer at (len(b), len(a)) as soon as that row is complete.

#include <immintrin.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kernels.hpp"

namespace hausanoise::strdist::detail {

namespace {

constexpr int kLanes = 8;
constexpr std::uint32_t kPadA = 0xFFFFFFFFu;
constexpr std::uint32_t kPadB = 0xFFFFFFFEu;

struct alignas(32) LaneWord {
  std::uint32_t v[kLanes];
};

void run_group(std::span<const PairView> group, std::span<std::uint32_t> out,
               std::vector<LaneWord>& a_syms, std::vector<LaneWord>& row) {
  const int lanes = static_cast<int>(group.size());
  std::size_t max_a = 0;
  std::size_t max_b = 0;
  for (const auto& p : group) {
    max_a = std::max(max_a, p.a.size());
    max_b = std::max(max_b, p.b.size());
  }

  a_syms.resize(max_a);
  for (std::size_t j = 0; j < max_a; ++j) {
    for (int l = 0; l < kLanes; ++l) {
      a_syms[j].v[l] = (l < lanes && j < group[l].a.size())
                           ? static_cast<std::uint32_t>(group[l].a[j])
                           : kPadA;
    }
  }

  row.resize(max_a + 1);
  for (std::size_t j = 0; j <= max_a; ++j) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(row[j].v),
                       _mm256_set1_epi32(static_cast<int>(j)));
  }
  for (int l = 0; l < lanes; ++l) {
    if (group[l].b.empty()) out[l] = static_cast<std::uint32_t>(group[l].a.size());
  }

  const __m256i one = _mm256_set1_epi32(1);
  alignas(32) std::uint32_t b_sym[kLanes];
  for (std::size_t i = 1; i <= max_b; ++i) {
    for (int l = 0; l < kLanes; ++l) {
      b_sym[l] = (l < lanes && i <= group[l].b.size())
                     ? static_cast<std::uint32_t>(group[l].b[i - 1])
                     : kPadB;
    }
    const __m256i bvec =
        _mm256_load_si256(reinterpret_cast<const __m256i*>(b_sym));

    auto* cells = reinterpret_cast<__m256i*>(row.data());
    __m256i diag = _mm256_load_si256(&cells[0]);
    __m256i left = _mm256_set1_epi32(static_cast<int>(i));
    _mm256_store_si256(&cells[0], left);
    for (std::size_t j = 1; j <= max_a; ++j) {
      const __m256i up = _mm256_load_si256(&cells[j]);
      const __m256i avec = _mm256_load_si256(
          reinterpret_cast<const __m256i*>(a_syms[j - 1].v));
      // eq is all-ones (-1) on match, so diag + 1 + eq is diag + cost.
      const __m256i eq = _mm256_cmpeq_epi32(avec, bvec);
      const __m256i sub = _mm256_add_epi32(diag, _mm256_add_epi32(one, eq));
      const __m256i gap =
          _mm256_add_epi32(_mm256_min_epi32(up, left), one);
      const __m256i cell = _mm256_min_epi32(sub, gap);
      _mm256_store_si256(&cells[j], cell);
      diag = up;
      left = cell;
    }

    for (int l = 0; l < lanes; ++l) {
      if (group[l].b.size() == i) out[l] = row[group[l].a.size()].v[l];
    }
  }
}

}  // namespace

void levenshtein_batch_avx2(std::span<const PairView> pairs,
                            std::span<std::uint32_t> out) {
  std::vector<LaneWord> a_syms;
  std::vector<LaneWord> row;
  for (std::size_t start = 0; start < pairs.size(); start += kLanes) {
    const std::size_t n = std::min<std::size_t>(kLanes, pairs.size() - start);
    run_group(pairs.subspan(start, n), out.subspan(start, n), a_syms, row);
  }
}

}  // namespace hausanoise::strdist::detail
