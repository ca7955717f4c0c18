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

#ifndef CSWITCH_LEXICON_H_
#define CSWITCH_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cswitch/rng.h"

namespace cswitch {

inline constexpr std::size_t kMinKazakhStem = 2;
inline constexpr std::size_t kMinRussianStem = 3;

struct LexEntry {
  std::string kk_lemma;
  std::string ru_normal;
  std::vector<std::string> ru_forms;  // always contains ru_normal

  bool operator==(const LexEntry&) const = default;
};

struct MorphSplit {
  std::string stem;
  std::string ending;

  bool operator==(const MorphSplit&) const = default;
};

// Kazakh-to-Russian dictionary plus the suffix inventories used for stemming.
// Entries keep file order; lookups go through a lower-cased lemma index.
class Lexicon {
 public:
  Lexicon() = default;

  // Raises DuplicateLemma when the lower-cased lemma is already present.
  void add(LexEntry entry);
  // Inventories are deduplicated and sorted longest-first (ties in code point
  // order) so the first match is the longest one.
  void set_kazakh_suffixes(std::vector<std::string> suffixes);
  void set_russian_suffixes(std::vector<std::string> suffixes);

  const LexEntry* find_lemma(std::string_view lemma) const;
  const std::vector<LexEntry>& entries() const { return entries_; }
  const std::vector<std::string>& kazakh_suffixes() const { return kk_suffixes_; }
  const std::vector<std::string>& russian_suffixes() const { return ru_suffixes_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LexEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> kk_suffixes_;
  std::vector<std::string> ru_suffixes_;
};

// TSV rows: kk_lemma <TAB> ru_normal [<TAB> comma-separated ru_forms].
// Blank lines and lines starting with '#' are skipped.
Lexicon load_lexicon(const std::filesystem::path& path);
Lexicon parse_lexicon(std::string_view tsv);
std::string serialize_lexicon(const Lexicon& lexicon);

// One suffix per line; blank lines and '#' comments skipped.
std::vector<std::string> load_suffix_inventory(const std::filesystem::path& path);
std::vector<std::string> parse_suffix_inventory(std::string_view text);

Lexicon load_lexicon(const std::filesystem::path& lexicon_path,
                     const std::filesystem::path& kk_suffix_path,
                     const std::filesystem::path& ru_suffix_path);

// Exact lower-case lemma match first, then the longest Kazakh suffix whose
// removal leaves a known lemma.
const LexEntry* lookup(std::string_view kk_token, const Lexicon& lexicon);

// Longest inventory suffix that leaves at least kMinKazakhStem code points.
// The split is made on the original surface, so stem + ending == token.
MorphSplit split_kk(std::string_view kk_token, const Lexicon& lexicon);

// Strips the longest Russian inventory suffix leaving at least
// kMinRussianStem code points; returns the word unchanged when nothing fits.
std::string stem_ru(std::string_view ru_word, const Lexicon& lexicon);

std::string compose_hybrid(std::string_view ru_stem, std::string_view kk_ending);

const std::string& random_form(const LexEntry& entry, Rng& rng);

struct LexiconIssue {
  std::string kind;
  std::string detail;
};

// Inventory hygiene: suffixes that coincide with a lemma or a Russian word
// form in the lexicon, and entries whose forms are empty strings.
std::vector<LexiconIssue> check_lexicon(const Lexicon& lexicon);

}  // namespace cswitch

#endif  // CSWITCH_LEXICON_H_
