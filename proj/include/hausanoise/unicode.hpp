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

// UTF-8 codec and the handful of character properties the pipeline needs.
// Text is handled internally as sequences of Unicode scalar values
// (std::u32string); Hausa hooked letters are single scalars.

#pragma once

#include <string>
#include <string_view>

namespace hausanoise::unicode {

// Strict decode: rejects overlong forms, surrogates and values above
// U+10FFFF. Throws DecodeError carrying the byte offset.
std::u32string decode(std::string_view utf8);

std::string encode(std::u32string_view text);
void append_utf8(std::string& out, char32_t c);

// Number of scalar values in a valid UTF-8 string.
std::size_t length(std::string_view utf8);

bool is_space(char32_t c);
bool is_control(char32_t c);
bool is_letter(char32_t c);
bool is_digit(char32_t c);
bool is_punct(char32_t c);
bool is_upper(char32_t c);

// Simple one-to-one case mappings (no special casing).
char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);
std::u32string to_lower(std::u32string_view text);
std::string fold_case(std::string_view utf8);

// ɓ ɗ ƙ ƴ and their capitals.
bool is_hooked(char32_t c);
// Plain Latin equivalent of a hooked letter; identity for anything else.
char32_t unhook(char32_t c);

}  // namespace hausanoise::unicode
