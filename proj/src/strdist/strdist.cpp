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
#include <atomic>
#include <cstdlib>
#include <string>

#include "hausanoise/errors.hpp"
#include "hausanoise/strdist.hpp"
#include "hausanoise/unicode.hpp"
#include "kernels.hpp"

namespace hausanoise::strdist {

namespace {

bool cpu_has_avx2() {
#if defined(HAUSANOISE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel detect_kernel() {
  if (const char* forced = std::getenv("HAUSANOISE_KERNEL")) {
    const std::string name(forced);
    if (name == "scalar") return Kernel::kScalar;
    if (name == "avx2" && kernel_available(Kernel::kAvx2)) return Kernel::kAvx2;
  }
  return kernel_available(Kernel::kAvx2) ? Kernel::kAvx2 : Kernel::kScalar;
}

std::atomic<Kernel>& kernel_slot() {
  static std::atomic<Kernel> slot{detect_kernel()};
  return slot;
}

}  // namespace

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kScalar: return "scalar";
    case Kernel::kAvx2: return "avx2";
  }
  return "unknown";
}

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::kScalar: return true;
    case Kernel::kAvx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

Kernel active_kernel() { return kernel_slot().load(std::memory_order_relaxed); }

void set_kernel(Kernel k) {
  if (!kernel_available(k)) {
    throw ValidationError(std::string("kernel '") + kernel_name(k) +
                          "' is not available on this machine");
  }
  kernel_slot().store(k, std::memory_order_relaxed);
}

void levenshtein_batch(Kernel k, std::span<const PairView> pairs,
                       std::span<std::uint32_t> out) {
  if (out.size() < pairs.size()) {
    throw ValidationError("levenshtein_batch: output span too small");
  }
  switch (k) {
#if defined(HAUSANOISE_HAVE_AVX2)
    case Kernel::kAvx2:
      if (kernel_available(Kernel::kAvx2)) {
        detail::levenshtein_batch_avx2(pairs, out);
        return;
      }
      break;
#endif
    default:
      break;
  }
  detail::levenshtein_batch_scalar(pairs, out);
}

void levenshtein_batch(std::span<const PairView> pairs,
                       std::span<std::uint32_t> out) {
  levenshtein_batch(active_kernel(), pairs, out);
}

void levenshtein_one_to_many(SymbolView query,
                             std::span<const std::u32string> targets,
                             std::span<std::uint32_t> out) {
  std::vector<PairView> pairs;
  pairs.reserve(targets.size());
  for (const auto& t : targets) pairs.push_back({query, t});
  levenshtein_batch(pairs, out);
}

std::size_t levenshtein(SymbolView a, SymbolView b) {
  return detail::levenshtein_scalar(a, b);
}

std::size_t levenshtein_utf8(std::string_view a, std::string_view b) {
  return levenshtein(unicode::decode(a), unicode::decode(b));
}

EditCost edit_cost(SymbolView a, SymbolView b) {
  EditCost cost;
  cost.distance = levenshtein(a, b);
  const std::size_t longest = std::max(a.size(), b.size());
  cost.normalized =
      longest == 0 ? 0.0
                   : static_cast<double>(cost.distance) /
                         static_cast<double>(longest);
  return cost;
}

double normalized_levenshtein(SymbolView a, SymbolView b) {
  return edit_cost(a, b).normalized;
}

double normalized_levenshtein_utf8(std::string_view a, std::string_view b) {
  return normalized_levenshtein(unicode::decode(a), unicode::decode(b));
}

std::u32string TokenInterner::intern(std::span<const std::string> tokens) {
  std::u32string ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] =
        ids_.try_emplace(t, static_cast<char32_t>(ids_.size()));
    ids.push_back(it->second);
  }
  return ids;
}

std::size_t token_edit_distance(std::span<const std::string> ref,
                                std::span<const std::string> hyp) {
  TokenInterner interner;
  const std::u32string r = interner.intern(ref);
  const std::u32string h = interner.intern(hyp);
  return levenshtein(r, h);
}

std::vector<AlignedStep> align_tokens(std::span<const std::string> ref,
                                      std::span<const std::string> hyp) {
  TokenInterner interner;
  const std::u32string r = interner.intern(ref);
  const std::u32string h = interner.intern(hyp);
  const std::size_t n = r.size();
  const std::size_t m = h.size();
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> d((n + 1) * width);
  for (std::size_t j = 0; j <= m; ++j) d[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    d[i * width] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t sub =
          d[(i - 1) * width + j - 1] + (r[i - 1] == h[j - 1] ? 0 : 1);
      const std::uint32_t del = d[(i - 1) * width + j] + 1;
      const std::uint32_t ins = d[i * width + j - 1] + 1;
      d[i * width + j] = std::min({sub, del, ins});
    }
  }

  std::vector<AlignedStep> steps;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t here = d[i * width + j];
    if (i > 0 && j > 0) {
      const bool same = r[i - 1] == h[j - 1];
      if (here == d[(i - 1) * width + j - 1] + (same ? 0 : 1)) {
        steps.push_back({same ? EditOp::kMatch : EditOp::kSubstitute, i - 1,
                         j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == d[(i - 1) * width + j] + 1) {
      steps.push_back({EditOp::kDelete, i - 1, npos});
      --i;
    } else {
      steps.push_back({EditOp::kInsert, npos, j - 1});
      --j;
    }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace hausanoise::strdist
