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

#pragma once

#include <cstdint>
#include <span>

#include "hausanoise/strdist.hpp"

namespace hausanoise::strdist::detail {

std::size_t levenshtein_scalar(SymbolView a, SymbolView b);

void levenshtein_batch_scalar(std::span<const PairView> pairs,
                              std::span<std::uint32_t> out);

#if defined(HAUSANOISE_HAVE_AVX2)
// Compiled with -mavx2; only call after a CPU feature check.
void levenshtein_batch_avx2(std::span<const PairView> pairs,
                            std::span<std::uint32_t> out);
#endif

}  // namespace hausanoise::strdist::detail
