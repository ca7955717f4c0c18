// Copyright 2026 The cswitch Authors
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

#ifndef CSWITCH_UNICODE_H_
#define CSWITCH_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace cswitch::unicode {

enum class CharClass { kLetter, kDigit, kPunctuation, kOther };

// Decodes one code point starting at `pos` and advances it. Ill-formed
// sequences decode to U+FFFD and consume one byte.
char32_t next_codepoint(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);

std::string nfc(std::string_view text);

bool is_whitespace(char32_t cp);
// General categories P* and S*.
bool is_punct_or_symbol(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
CharClass classify(char32_t cp);

// Simple (one-to-one) case mapping, so code point counts are preserved.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
std::string to_lower(std::string_view text);
// Upper-cases the first code point only.
std::string capitalize(std::string_view text);
bool starts_upper(std::string_view text);

std::size_t length(std::string_view text);
std::size_t letter_count(std::string_view text);

// Trims and collapses internal whitespace runs to one ASCII space.
std::string collapse_whitespace(std::string_view text);
std::string trim(std::string_view text);

template <typename F>
void for_each_codepoint(std::string_view text, F&& f) {
  std::size_t pos = 0;
  while (pos < text.size()) f(next_codepoint(text, pos));
}

}  // namespace cswitch::unicode

#endif  // CSWITCH_UNICODE_H_
