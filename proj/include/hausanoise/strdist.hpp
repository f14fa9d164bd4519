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

// Edit-distance kernels over Unicode scalar sequences and token sequences.
//
// Two implementations of the batched kernel exist: a portable scalar one
// (the reference) and an AVX2 one that runs eight independent DP tables in
// the lanes of a 256-bit register. The active kernel is picked at runtime
// from CPU features; HAUSANOISE_KERNEL=scalar|avx2 overrides the choice.
// Both must produce identical results on every input.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hausanoise::strdist {

using SymbolView = std::u32string_view;

struct EditCost {
  std::size_t distance = 0;
  // distance / max(len(a), len(b)); 0 when both are empty.
  double normalized = 0.0;
};

// Plain Levenshtein: unit-cost insertion, deletion and substitution. A
// transposition costs 2.
std::size_t levenshtein(SymbolView a, SymbolView b);
std::size_t levenshtein_utf8(std::string_view a, std::string_view b);

double normalized_levenshtein(SymbolView a, SymbolView b);
double normalized_levenshtein_utf8(std::string_view a, std::string_view b);
EditCost edit_cost(SymbolView a, SymbolView b);

// Levenshtein over whole tokens.
std::size_t token_edit_distance(std::span<const std::string> ref,
                                std::span<const std::string> hyp);

enum class EditOp : std::uint8_t { kMatch, kSubstitute, kInsert, kDelete };

struct AlignedStep {
  EditOp op;
  // Index into ref (kMatch, kSubstitute, kDelete) and into hyp (kMatch,
  // kSubstitute, kInsert); the unused side is npos.
  std::size_t ref_index;
  std::size_t hyp_index;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Minimum-cost token alignment in ref order. Ties prefer the diagonal,
// then deletion, then insertion, reading the backtrace from the end.
std::vector<AlignedStep> align_tokens(std::span<const std::string> ref,
                                      std::span<const std::string> hyp);

// Maps tokens to dense ids so token sequences can go through the symbol
// kernels.
class TokenInterner {
 public:
  std::u32string intern(std::span<const std::string> tokens);
  std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::unordered_map<std::string, char32_t> ids_;
};

struct PairView {
  SymbolView a;
  SymbolView b;
};

enum class Kernel { kScalar, kAvx2 };

const char* kernel_name(Kernel k);
bool kernel_available(Kernel k);
Kernel active_kernel();
// Throws ValidationError when the kernel is not compiled in or the CPU
// lacks the instructions.
void set_kernel(Kernel k);

// out[i] = levenshtein(pairs[i].a, pairs[i].b), using the active kernel.
// Grouping pairs of similar length improves lane utilisation.
void levenshtein_batch(std::span<const PairView> pairs,
                       std::span<std::uint32_t> out);
void levenshtein_batch(Kernel k, std::span<const PairView> pairs,
                       std::span<std::uint32_t> out);

// Distances from one query to many targets.
void levenshtein_one_to_many(SymbolView query,
                             std::span<const std::u32string> targets,
                             std::span<std::uint32_t> out);

}  // namespace hausanoise::strdist
