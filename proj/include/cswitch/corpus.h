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

#ifndef CSWITCH_CORPUS_H_
#define CSWITCH_CORPUS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace cswitch {

enum class Lang { kKazakh, kRussian };

std::string_view lang_tag(Lang lang);
// Accepts "kk" and "ru"; anything else raises UnknownLanguage.
Lang parse_lang(std::string_view tag);

struct CharClassSummary {
  std::uint32_t letters = 0;
  std::uint32_t digits = 0;
  std::uint32_t punctuation = 0;
  std::uint32_t other = 0;

  bool operator==(const CharClassSummary&) const = default;
};

struct Token {
  std::string surface;
  CharClassSummary summary;

  bool operator==(const Token&) const = default;
};

Token make_token(std::string surface);

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;
  Lang lang = Lang::kKazakh;

  std::size_t size() const { return tokens.size(); }
  std::vector<std::string> surfaces() const;

  bool operator==(const Sentence&) const = default;
};

struct SentencePair {
  Sentence source;  // kk
  Sentence target;  // ru
  std::uint64_t id = 0;

  bool operator==(const SentencePair&) const = default;
};

enum class CorpusKind { kParallel, kMonolingual };

struct Corpus {
  std::string name;
  CorpusKind kind = CorpusKind::kParallel;
  std::vector<SentencePair> pairs;
  std::vector<Sentence> sentences;

  std::size_t size() const {
    return kind == CorpusKind::kParallel ? pairs.size() : sentences.size();
  }
  // Reassigns ids 0..n-1 in order.
  void renumber();

  bool operator==(const Corpus&) const = default;
};

// NFC, whitespace split, then leading and trailing punctuation/symbol
// characters are peeled off one per token. Inner punctuation ("12,5") stays.
Sentence tokenize(std::string_view text, Lang lang);

// Joins token surfaces with single spaces.
std::string detokenize(const Sentence& sentence);
std::string join_tokens(const std::vector<std::string>& tokens);

// Builds a sentence whose raw text is the space-joined token list.
Sentence sentence_from_tokens(const std::vector<std::string>& tokens, Lang lang);

SentencePair make_pair(std::string_view source, std::string_view target,
                       std::uint64_t id);

// Vocabulary confirmation for embedded-token detection. When `stem` is set,
// a token whose stem is in `words` also counts.
struct EmbeddedVocabulary {
  std::unordered_set<std::string> words;
  std::function<std::string(std::string_view)> stem;
};

// Kazakh letters outside the core Russian alphabet, both cases.
bool is_kazakh_specific_letter(char32_t cp);
bool is_core_russian_letter(char32_t cp);

// True when every letter of the token is core Russian Cyrillic and there is
// at least one letter. Only kk is supported as the matrix language.
bool is_embedded_token(std::string_view token, Lang matrix_lang,
                       const EmbeddedVocabulary* vocabulary = nullptr);

struct StatsReport {
  std::uint64_t sentence_count = 0;
  double avg_tokens_source = 0.0;
  double avg_embedded_tokens = 0.0;
  std::optional<double> avg_tokens_corrected;
  double avg_tokens_target = 0.0;
};

nlohmann::json to_json(const StatsReport& report);

// Averages over all sentences. `corrected`, when given, is the line-aligned
// corrected-source side of a triplet corpus such as KRCS.
StatsReport compute_stats(const Corpus& corpus,
                          const EmbeddedVocabulary* vocabulary = nullptr,
                          const Corpus* corrected = nullptr);

}  // namespace cswitch

#endif  // CSWITCH_CORPUS_H_
