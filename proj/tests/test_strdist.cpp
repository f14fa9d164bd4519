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

#include <doctest.h>

#include <algorithm>

#include "hausanoise/strdist.hpp"
#include "random_text.hpp"

using namespace hausanoise;
using strdist::levenshtein;
using Strings = std::vector<std::string>;

namespace {

// Textbook full-table DP, the oracle for everything else.
std::size_t dp_oracle(std::u32string_view a, std::u32string_view b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

}  // namespace

TEST_SUITE("strdist") {
  TEST_CASE("levenshtein examples") {
    CHECK(strdist::levenshtein_utf8("kitten", "sitting") == 3);
    CHECK(strdist::levenshtein_utf8("", "abc") == 3);
    CHECK(strdist::levenshtein_utf8("daɗi", "daɗi") == 0);
    CHECK(strdist::levenshtein_utf8("ƙasa", "kasa") == 1);
    CHECK(strdist::normalized_levenshtein_utf8("daɗi", "dadi") == doctest::Approx(0.25));
    CHECK(strdist::normalized_levenshtein_utf8("ab", "xy") == 1.0);
    CHECK(strdist::normalized_levenshtein_utf8("", "") == 0.0);
  }

  TEST_CASE("token_edit_distance examples") {
    CHECK(strdist::token_edit_distance(Strings{"ba", "shi", "da", "daɗi"},
                                       Strings{"bashi", "da", "daɗi"}) == 2);
    CHECK(strdist::token_edit_distance(Strings{"a", "b"}, Strings{"a", "b"}) == 0);
    CHECK(strdist::token_edit_distance(Strings{}, Strings{"a"}) == 1);
  }

  TEST_CASE("align_tokens reproduces the distance") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      const auto ref = testing::random_tokens(rng, 8, 5);
      const auto hyp = testing::random_tokens(rng, 8, 5);
      const auto steps = strdist::align_tokens(ref, hyp);
      std::size_t cost = 0, r = 0, h = 0;
      for (const auto& s : steps) {
        if (s.op != strdist::EditOp::kMatch) ++cost;
        if (s.op == strdist::EditOp::kMatch) CHECK(ref[s.ref_index] == hyp[s.hyp_index]);
        if (s.ref_index != strdist::npos) CHECK(s.ref_index == r++);
        if (s.hyp_index != strdist::npos) CHECK(s.hyp_index == h++);
      }
      CHECK(r == ref.size());
      CHECK(h == hyp.size());
      CHECK(cost == strdist::token_edit_distance(ref, hyp));
    }
  }

  TEST_CASE("property: DP oracle, symmetry, triangle inequality (1000+ cases)") {
    Rng rng(11);
    for (int i = 0; i < 3000; ++i) {
      const auto a = testing::random_symbols(rng, 14);
      const auto b = testing::random_symbols(rng, 14);
      const auto c = testing::random_symbols(rng, 14);
      const auto ab = levenshtein(a, b);
      REQUIRE(ab == dp_oracle(a, b));
      CHECK(ab == levenshtein(b, a));
      CHECK(levenshtein(a, c) <= ab + levenshtein(b, c));
      CHECK(levenshtein(a, a) == 0);
    }
  }

  TEST_CASE("property: normalized distance bounds (1000+ cases)") {
    Rng rng(13);
    for (int i = 0; i < 3000; ++i) {
      const auto a = testing::random_symbols(rng, 10, U"abɗƙ");
      const auto b = testing::random_symbols(rng, 10, U"abɗƙ");
      const double nd = strdist::normalized_levenshtein(a, b);
      CHECK(nd >= 0.0);
      CHECK(nd <= 1.0);
      if (nd == 1.0 && a.size() == b.size()) {
        // d == n for equal lengths forces the positional alignment to be
        // all substitutions.
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] != b[k]);
      }
      const auto cost = strdist::edit_cost(a, b);
      CHECK(cost.normalized == doctest::Approx(nd));
    }
  }

  TEST_CASE("property: token distance equals symbol distance over interned ids") {
    Rng rng(17);
    for (int i = 0; i < 1500; ++i) {
      const auto ref = testing::random_tokens(rng, 10, 6);
      const auto hyp = testing::random_tokens(rng, 10, 6);
      strdist::TokenInterner interner;
      const auto r = interner.intern(ref);
      const auto h = interner.intern(hyp);
      CHECK(strdist::token_edit_distance(ref, hyp) == dp_oracle(r, h));
      CHECK(strdist::token_edit_distance(ref, hyp) ==
            strdist::token_edit_distance(hyp, ref));
    }
  }

  TEST_CASE("batch kernels agree with the scalar distance") {
    Rng rng(19);
    std::vector<std::u32string> as, bs;
    for (int i = 0; i < 2003; ++i) {
      // Mix of short words and long sentences, with the occasional empty.
      const std::size_t max_len = rng.below(10) == 0 ? 200 : 16;
      as.push_back(testing::random_symbols(rng, max_len));
      bs.push_back(testing::random_symbols(rng, max_len));
    }
    std::vector<strdist::PairView> views;
    for (std::size_t i = 0; i < as.size(); ++i) views.push_back({as[i], bs[i]});

    std::vector<std::uint32_t> expected(views.size());
    for (std::size_t i = 0; i < views.size(); ++i) {
      expected[i] = static_cast<std::uint32_t>(levenshtein(as[i], bs[i]));
    }
    for (auto kernel : {strdist::Kernel::kScalar, strdist::Kernel::kAvx2}) {
      if (!strdist::kernel_available(kernel)) {
        MESSAGE("kernel " << strdist::kernel_name(kernel) << " unavailable; skipped");
        continue;
      }
      std::vector<std::uint32_t> got(views.size());
      strdist::levenshtein_batch(kernel, views, got);
      CHECK(got == expected);
    }
    std::vector<std::uint32_t> dispatched(views.size());
    strdist::levenshtein_batch(views, dispatched);
    CHECK(dispatched == expected);
  }

  TEST_CASE("one-to-many matches pairwise distances") {
    Rng rng(23);
    for (int round = 0; round < 50; ++round) {
      const auto q = testing::random_symbols(rng, 12);
      std::vector<std::u32string> targets;
      for (int i = 0; i < 37; ++i) targets.push_back(testing::random_symbols(rng, 12));
      std::vector<std::uint32_t> out(targets.size());
      strdist::levenshtein_one_to_many(q, targets, out);
      for (std::size_t i = 0; i < targets.size(); ++i) {
        CHECK(out[i] == levenshtein(q, targets[i]));
      }
    }
  }

  TEST_CASE("kernel selection") {
    CHECK(strdist::kernel_available(strdist::Kernel::kScalar));
    const auto before = strdist::active_kernel();
    strdist::set_kernel(strdist::Kernel::kScalar);
    CHECK(strdist::active_kernel() == strdist::Kernel::kScalar);
    strdist::set_kernel(before);
  }
}
