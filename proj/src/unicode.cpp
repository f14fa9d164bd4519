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

#include "hausanoise/unicode.hpp"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "hausanoise/errors.hpp"

namespace hausanoise::unicode {

namespace {

constexpr char32_t kMaxScalar = 0x10FFFF;

bool in(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

// (upper, lower) pairs for the scripts the toolkit is likely to meet:
// Latin (including the Hausa/West African extensions), Greek, Cyrillic.
std::vector<std::pair<char32_t, char32_t>> build_case_pairs() {
  std::vector<std::pair<char32_t, char32_t>> pairs;
  auto offset_range = [&](char32_t lo, char32_t hi, char32_t delta) {
    for (char32_t c = lo; c <= hi; ++c) pairs.emplace_back(c, c + delta);
  };
  // Upper at even code point, lower at the following odd one (or the
  // reverse when odd_upper is set).
  auto alternating = [&](char32_t lo, char32_t hi, bool odd_upper) {
    for (char32_t c = lo; c < hi; c += 2) {
      if ((c % 2 == 1) == odd_upper) pairs.emplace_back(c, c + 1);
    }
  };

  offset_range(U'A', U'Z', 0x20);
  offset_range(0x00C0, 0x00D6, 0x20);
  offset_range(0x00D8, 0x00DE, 0x20);
  alternating(0x0100, 0x012F, false);
  alternating(0x0132, 0x0137, false);
  alternating(0x0139, 0x0148, true);
  alternating(0x014A, 0x0177, false);
  pairs.emplace_back(0x0178, 0x00FF);
  alternating(0x0179, 0x017E, true);

  // Latin Extended-B, including the hooked letters.
  const std::array<std::pair<char32_t, char32_t>, 22> extended_b{{
      {0x0181, 0x0253},  // Ɓ ɓ
      {0x0186, 0x0254},
      {0x0189, 0x0256},
      {0x018A, 0x0257},  // Ɗ ɗ
      {0x018E, 0x01DD},
      {0x018F, 0x0259},
      {0x0190, 0x025B},
      {0x0194, 0x0263},
      {0x0196, 0x0269},
      {0x0197, 0x0268},
      {0x0198, 0x0199},  // Ƙ ƙ
      {0x019C, 0x026F},
      {0x019D, 0x0272},
      {0x01A0, 0x01A1},
      {0x01A2, 0x01A3},
      {0x01A4, 0x01A5},
      {0x01AF, 0x01B0},
      {0x01B3, 0x01B4},  // Ƴ ƴ
      {0x01B5, 0x01B6},
      {0x01B7, 0x0292},
      {0x01F4, 0x01F5},
      {0x0187, 0x0188},
  }};
  pairs.insert(pairs.end(), extended_b.begin(), extended_b.end());
  alternating(0x01CD, 0x01DC, true);
  alternating(0x01DE, 0x01EF, false);
  alternating(0x01F8, 0x021F, false);
  alternating(0x0222, 0x0233, false);

  // Greek.
  offset_range(0x0391, 0x03A1, 0x20);
  offset_range(0x03A3, 0x03AB, 0x20);
  pairs.emplace_back(0x0386, 0x03AC);
  offset_range(0x0388, 0x038A, 0x25);
  pairs.emplace_back(0x038C, 0x03CC);
  offset_range(0x038E, 0x038F, 0x3F);

  // Cyrillic.
  offset_range(0x0400, 0x040F, 0x50);
  offset_range(0x0410, 0x042F, 0x20);
  alternating(0x0460, 0x0481, false);
  alternating(0x048A, 0x04BF, false);
  alternating(0x04D0, 0x04FF, false);

  // Latin Extended Additional.
  alternating(0x1E00, 0x1E95, false);
  alternating(0x1EA0, 0x1EFF, false);
  return pairs;
}

struct CaseTables {
  std::vector<std::pair<char32_t, char32_t>> upper_to_lower;
  std::vector<std::pair<char32_t, char32_t>> lower_to_upper;
};

const CaseTables& case_tables() {
  static const CaseTables tables = [] {
    CaseTables t;
    t.upper_to_lower = build_case_pairs();
    for (auto [u, l] : t.upper_to_lower) t.lower_to_upper.emplace_back(l, u);
    std::sort(t.upper_to_lower.begin(), t.upper_to_lower.end());
    std::sort(t.lower_to_upper.begin(), t.lower_to_upper.end());
    return t;
  }();
  return tables;
}

char32_t lookup(const std::vector<std::pair<char32_t, char32_t>>& table,
                char32_t c) {
  auto it = std::lower_bound(
      table.begin(), table.end(), c,
      [](const std::pair<char32_t, char32_t>& p, char32_t key) {
        return p.first < key;
      });
  if (it != table.end() && it->first == c) return it->second;
  return c;
}

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const unsigned char*>(utf8.data());
  const std::size_t n = utf8.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char lead = bytes[i];
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    std::size_t extra;
    char32_t cp;
    char32_t min_value;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
      min_value = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
      min_value = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
      min_value = 0x10000;
    } else {
      throw DecodeError(i, "invalid UTF-8 lead byte");
    }
    if (i + extra >= n) {
      throw DecodeError(i, "truncated UTF-8 sequence");
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      const unsigned char cont = bytes[i + k];
      if ((cont & 0xC0) != 0x80) {
        throw DecodeError(i, "invalid UTF-8 continuation byte");
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min_value) throw DecodeError(i, "overlong UTF-8 sequence");
    if (in(cp, 0xD800, 0xDFFF)) throw DecodeError(i, "UTF-8 encoded surrogate");
    if (cp > kMaxScalar) throw DecodeError(i, "code point above U+10FFFF");
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append_utf8(out, c);
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t count = 0;
  for (unsigned char b : utf8) {
    if ((b & 0xC0) != 0x80) ++count;
  }
  return count;
}

// Same set as Python's str.isspace().
bool is_space(char32_t c) {
  return in(c, 0x09, 0x0D) || in(c, 0x1C, 0x20) || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || in(c, 0x2000, 0x200A) || c == 0x2028 || c == 0x2029 ||
         c == 0x202F || c == 0x205F || c == 0x3000;
}

bool is_control(char32_t c) { return c < 0x20 || in(c, 0x7F, 0x9F); }

bool is_letter(char32_t c) {
  if (c < 0x80) return in(c, U'a', U'z') || in(c, U'A', U'Z');
  if (c < 0x100) {
    return c == 0xAA || c == 0xB5 || c == 0xBA ||
           (c >= 0xC0 && c != 0xD7 && c != 0xF7);
  }
  return in(c, 0x0100, 0x02AF) || in(c, 0x02B0, 0x02C1) ||
         in(c, 0x02C6, 0x02D1) || in(c, 0x02E0, 0x02E4) || c == 0x02EC ||
         c == 0x02EE || in(c, 0x0370, 0x0373) || in(c, 0x0376, 0x03FF) ||
         in(c, 0x0400, 0x0481) || in(c, 0x048A, 0x052F) ||
         in(c, 0x0620, 0x064A) || in(c, 0x0671, 0x06D3) ||
         in(c, 0x1E00, 0x1EFF) || in(c, 0x3040, 0x30FF) ||
         in(c, 0x4E00, 0x9FFF) || in(c, 0xAC00, 0xD7A3);
}

bool is_digit(char32_t c) {
  return in(c, U'0', U'9') || in(c, 0x0660, 0x0669) || in(c, 0x06F0, 0x06F9);
}

bool is_punct(char32_t c) {
  if (c < 0x80) {
    return in(c, 0x21, 0x2F) || in(c, 0x3A, 0x40) || in(c, 0x5B, 0x60) ||
           in(c, 0x7B, 0x7E);
  }
  if (c < 0x100) {
    return in(c, 0xA1, 0xBF) && !is_letter(c) && c != 0xB2 && c != 0xB3 &&
           c != 0xB9 && !in(c, 0xBC, 0xBE);
  }
  return in(c, 0x2010, 0x2027) || in(c, 0x2030, 0x205E) ||
         in(c, 0x3001, 0x3003) || in(c, 0x3008, 0x3011) || c == 0x060C ||
         c == 0x061B || c == 0x061F || in(c, 0x066A, 0x066D) || c == 0x06D4;
}

bool is_upper(char32_t c) { return to_lower(c) != c; }

char32_t to_lower(char32_t c) {
  if (c < 0x80) return in(c, U'A', U'Z') ? c + 0x20 : c;
  return lookup(case_tables().upper_to_lower, c);
}

char32_t to_upper(char32_t c) {
  if (c < 0x80) return in(c, U'a', U'z') ? c - 0x20 : c;
  return lookup(case_tables().lower_to_upper, c);
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) c = to_lower(c);
  return out;
}

std::string fold_case(std::string_view utf8) {
  return encode(to_lower(decode(utf8)));
}

bool is_hooked(char32_t c) { return unhook(c) != c; }

char32_t unhook(char32_t c) {
  switch (c) {
    case 0x0253: return U'b';  // ɓ
    case 0x0257: return U'd';  // ɗ
    case 0x0199: return U'k';  // ƙ
    case 0x01B4: return U'y';  // ƴ
    case 0x0181: return U'B';  // Ɓ
    case 0x018A: return U'D';  // Ɗ
    case 0x0198: return U'K';  // Ƙ
    case 0x01B3: return U'Y';  // Ƴ
    default: return c;
  }
}

}  // namespace hausanoise::unicode
