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

#include "hausa_fixture.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>

#include "hausanoise/random.hpp"
#include "hausanoise/unicode.hpp"

namespace hausanoise::fixture {

namespace {

constexpr std::array<std::string_view, 120> kCoreWords{
    "da", "a", "ba", "ya", "na", "ta", "wani", "ne", "ce", "kuma",
    "shi", "ita", "su", "mu", "ku", "ni", "ka", "ki", "sun", "zai",
    "za", "don", "amma", "idan", "cikin", "daga", "zuwa", "game", "kan", "har",
    "yana", "tana", "suna", "muna", "ake", "aka", "wanda", "wadda", "waɗanda", "wannan",
    "waɗannan", "nan", "can", "yanzu", "gobe", "jiya", "yau", "lokaci", "shekara", "gida",
    "ƙasa", "ƙasar", "ruwa", "abinci", "makaranta", "yara", "mutane", "mutum", "sarki", "gwamnati",
    "jihar", "birnin", "kasuwa", "aiki", "kuɗi", "hanya", "mota", "labari", "magana", "harshe",
    "Hausa", "Kano", "Katsina", "Sokoto", "Zariya", "Najeriya", "Nijar", "Allah", "ranar", "dare",
    "ɗaya", "biyu", "uku", "huɗu", "biyar", "goma", "ɗari", "dubu", "babba", "ƙarami",
    "sabon", "tsoho", "kyau", "daɗi", "ɓata", "ɗan", "'yan", "ƴaƴa", "ƙarshe", "farko",
    "ɓangare", "ƙungiya", "taimako", "tambaya", "amsa", "ilimi", "lafiya", "asibiti", "likita", "manoma",
    "noma", "hatsi", "gyaɗa", "rani", "damina", "iska", "rana", "wata", "taurari", "duniya"};

// Boko onsets weighted by rough frequency; the hooked letters are part of
// the inventory, as are the digraphs sh, ts, ky, gw, kw.
constexpr std::array<std::string_view, 34> kOnsets{
    "b", "ɓ", "c", "d", "ɗ", "f", "g", "h", "j", "k", "ƙ", "l",
    "m", "n", "r", "s", "sh", "t", "ts", "w", "y", "ƴ", "z", "k",
    "d", "m", "n", "s", "t", "y", "gw", "kw", "ky", "'y"};
constexpr std::array<std::string_view, 10> kVowels{"a", "a", "a", "i", "i", "u",
                                                   "u", "e", "o", "ai"};
constexpr std::array<std::string_view, 6> kCodas{"", "", "", "n", "r", "m"};

template <typename Array>
std::string_view pick(const Array& a, Rng& rng) {
  return a[rng.below(a.size())];
}

std::string syllable_word(Rng& rng) {
  const std::size_t syllables = 1 + rng.below(4);
  std::string w;
  for (std::size_t s = 0; s < syllables; ++s) {
    w += pick(kOnsets, rng);
    w += pick(kVowels, rng);
    if (s + 1 == syllables || rng.bernoulli(0.15)) w += pick(kCodas, rng);
  }
  return w;
}

std::string capitalise(const std::string& word) {
  auto s = unicode::decode(word);
  for (char32_t& c : s) {
    if (c == U'\'') continue;
    c = unicode::to_upper(c);
    break;
  }
  return unicode::encode(s);
}

// Zipf-like rank weights: core words take the head of the distribution.
struct ZipfTable {
  std::vector<double> cumulative;

  explicit ZipfTable(std::size_t n) : cumulative(n) {
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      total += 1.0 / (static_cast<double>(r) + 2.7);
      cumulative[r] = total;
    }
    for (double& c : cumulative) c /= total;
  }

  std::size_t draw(Rng& rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                 cumulative.size() - 1);
  }
};

// Vocabulary in rank order (core words first).
std::vector<std::string> ranked_vocabulary(std::size_t size) {
  std::vector<std::string> ranked;
  std::set<std::string> seen;
  for (auto w : kCoreWords) {
    if (seen.insert(std::string(w)).second) ranked.emplace_back(w);
  }
  Rng rng(0x4A05A);
  while (ranked.size() < size) {
    auto w = syllable_word(rng);
    if (unicode::length(w) < 2) continue;
    if (seen.insert(w).second) ranked.push_back(std::move(w));
  }
  return ranked;
}

}  // namespace

std::vector<std::string> hausa_vocabulary(std::size_t size) {
  auto v = ranked_vocabulary(size);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> hausa_sentences(std::size_t count, std::uint64_t seed) {
  static const auto ranked = ranked_vocabulary(6000);
  static const ZipfTable zipf(ranked.size());
  constexpr std::array<std::string_view, 6> kEnds{".", ".", ".", ".", "?", "!"};
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(mix_seed(seed, i));
    const std::size_t words = 6 + rng.below(17);
    std::string s;
    for (std::size_t k = 0; k < words; ++k) {
      const std::string& w = ranked[zipf.draw(rng)];
      if (k == 0) {
        s += capitalise(w);
      } else {
        s += ' ';
        s += w;
        if (k + 1 < words && rng.bernoulli(0.06)) s += ',';
      }
    }
    s += pick(kEnds, rng);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hausanoise::fixture
