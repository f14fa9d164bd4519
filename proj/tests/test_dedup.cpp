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

#include <cmath>
#include <numeric>

#include "hausa_fixture.hpp"
#include "hausanoise/corpus.hpp"
#include "hausanoise/dedup.hpp"
#include "hausanoise/errors.hpp"
#include "hausanoise/random.hpp"

using namespace hausanoise;
using namespace hausanoise::dedup;
using Strings = std::vector<std::string>;

namespace {

std::vector<std::uint64_t> range_ids(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::set<std::pair<std::size_t, std::size_t>> pair_set(const OverlapReport& r, bool swap) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : r.pairs) out.insert(swap ? std::pair{p.b, p.a} : std::pair{p.a, p.b});
  return out;
}

}  // namespace

TEST_SUITE("dedup") {
  TEST_CASE("shingle") {
    const auto s = shingle("ya zo gida da ruwa", 3);
    CHECK(s.size() == 3);
    CHECK(s.count(Shingle{"ya", "zo", "gida"}) == 1);
    CHECK(shingle("ya zo", 3) == ShingleSet{Shingle{"ya", "zo"}});
    CHECK(shingle("", 3).empty());
    CHECK(shingle("a a a a", 2).size() == 1);
    CHECK_THROWS_AS(shingle("a", 0), ValidationError);
  }

  TEST_CASE("minhash examples") {
    const auto a = shingle("ya zo gida da ruwa mai kyau", 3);
    CHECK(minhash(a, 128, 1).hashes == minhash(a, 128, 1).hashes);
    CHECK(minhash(a, 128, 1).hashes.size() == 128);
    CHECK_THROWS_AS(minhash(ShingleSet{}, 128, 1), ValidationError);

    const auto x = minhash(range_ids(1, 4), 128, 7);
    const auto y = minhash(range_ids(3, 6), 128, 7);
    CHECK(std::abs(x.jaccard(y) - 1.0 / 3.0) <= 0.15);

    const auto d1 = minhash(range_ids(1, 100), 128, 7);
    const auto d2 = minhash(range_ids(1001, 1100), 128, 7);
    CHECK(d1.jaccard(d2) < 0.1);
  }

  TEST_CASE("estimates are unbiased over many pairs") {
    Rng rng(79);
    for (double j : {0.2, 1.0 / 3.0, 0.5, 0.8}) {
      double sum = 0.0;
      const int pairs = 200;
      for (int t = 0; t < pairs; ++t) {
        // |A ∩ B| = c, |A ∪ B| = u, J = c / u.
        const std::uint64_t u = 60, c = static_cast<std::uint64_t>(std::llround(j * 60));
        const std::uint64_t base = rng.next_u64() >> 16;
        const std::uint64_t only_a = (u - c) / 2;
        std::vector<std::uint64_t> a, b;
        for (std::uint64_t k = 0; k < u; ++k) {
          if (k < c || k < c + only_a) a.push_back(base + k);
          if (k < c || k >= c + only_a) b.push_back(base + k);
        }
        sum += minhash(a, 128, t).jaccard(minhash(b, 128, t));
      }
      const double mean = sum / pairs;
      CHECK(std::abs(mean - j) < 3 * std::sqrt(j * (1 - j) / 128));
    }
  }

  TEST_CASE("banding") {
    const auto b = LshBanding::choose(128, 0.5);
    CHECK(b.bands * b.rows == 128);
    CHECK(b.bands == 32);
    CHECK(b.rows == 4);
    const auto b2 = LshBanding::choose(100, 0.8);
    CHECK(b2.bands * b2.rows == 100);
  }

  TEST_CASE("audit examples") {
    const auto corpus = fixture::hausa_sentences(400, 3);
    AuditOptions opt;
    const auto self = audit_overlap(corpus, corpus, opt);
    std::size_t diagonal = 0;
    for (const auto& p : self.pairs) {
      if (p.a == p.b) {
        ++diagonal;
        CHECK(p.estimate == 1.0);
      }
    }
    CHECK(diagonal == corpus.size());
    for (std::size_t i = 1; i < self.pairs.size(); ++i) {
      CHECK(self.pairs[i - 1].estimate >= self.pairs[i].estimate);
    }

    const Strings latin{"the cat sat on the mat today", "a dog ran in the park"};
    const Strings hausa{"ya zo gida da ruwa mai kyau", "ƙasa ta yi kyau sosai yau"};
    CHECK(audit_overlap(latin, hausa, opt).pairs.empty());
    CHECK_THROWS_AS(audit_overlap(Strings{}, hausa, opt), ValidationError);
    opt.threshold = 0.0;
    CHECK_THROWS_AS(audit_overlap(latin, hausa, opt), ValidationError);
  }

  TEST_CASE("planted near-duplicates are all recovered; audit is symmetric") {
    Rng rng(83);
    const auto vocab = fixture::hausa_vocabulary();
    Strings a, b;
    std::vector<std::pair<std::size_t, std::size_t>> planted;
    for (int i = 0; i < 300; ++i) {
      Strings words;
      for (int w = 0; w < 20; ++w) words.push_back(vocab[rng.below(vocab.size())]);
      std::string s = corpus::join(words, " ");
      a.push_back(s);
      if (i % 3 == 0) {
        words[rng.below(20)] = "canji" + std::to_string(i);
        planted.emplace_back(a.size() - 1, b.size());
        b.push_back(corpus::join(words, " "));
      } else {
        Strings other;
        for (int w = 0; w < 20; ++w) other.push_back(vocab[rng.below(vocab.size())]);
        b.push_back(corpus::join(other, " "));
      }
    }
    AuditOptions opt;
    opt.exact = true;
    opt.workers = 3;
    const auto ab = audit_overlap(a, b, opt);
    const auto found = pair_set(ab, false);
    for (const auto& p : planted) {
      // One changed word touches at most three 3-shingles: J >= 15/21.
      CHECK(exact_jaccard(shingle(a[p.first], 3), shingle(b[p.second], 3)) >= 15.0 / 21.0);
      CHECK(found.count(p) == 1);
    }
    for (const auto& p : ab.pairs) CHECK(p.estimate >= 0.5);
    const auto ba = audit_overlap(b, a, opt);
    CHECK(pair_set(ba, true) == found);
    opt.workers = 1;
    CHECK(audit_overlap(a, b, opt).to_json().dump() == ab.to_json().dump());
  }
}
