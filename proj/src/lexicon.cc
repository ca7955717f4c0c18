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

#include "cswitch/lexicon.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cswitch/error.h"
#include "cswitch/unicode.h"

namespace cswitch {

namespace {

std::string lemma_key(std::string_view text) {
  return unicode::to_lower(unicode::nfc(text));
}

std::vector<std::string> sorted_inventory(std::vector<std::string> suffixes) {
  std::vector<std::pair<std::u32string, std::string>> keyed;
  std::set<std::string> seen;
  for (auto& s : suffixes) {
    std::string lower = lemma_key(unicode::trim(s));
    if (lower.empty() || !seen.insert(lower).second) continue;
    keyed.emplace_back(unicode::decode(lower), lower);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Length of the longest inventory suffix of `lower` (in code points) that
// leaves at least `min_stem` code points; 0 when none applies.
std::size_t longest_suffix(const std::u32string& lower,
                           const std::vector<std::string>& inventory,
                           std::size_t min_stem) {
  for (const auto& suffix : inventory) {
    const std::u32string s = unicode::decode(suffix);
    if (s.size() + min_stem > lower.size()) continue;
    if (lower.compare(lower.size() - s.size(), s.size(), s) == 0) return s.size();
  }
  return 0;
}

std::u32string lower_codepoints(std::string_view text) {
  std::u32string out = unicode::decode(text);
  for (auto& cp : out) cp = unicode::to_lower(cp);
  return out;
}

void require_letters(std::string_view token, std::size_t min_letters) {
  if (unicode::letter_count(token) < min_letters) {
    throw Error(ErrorCode::kTokenTooShort,
                "'" + std::string(token) + "' has fewer than " +
                    std::to_string(min_letters) + " letters");
  }
}

}  // namespace

void Lexicon::add(LexEntry entry) {
  std::string key = lemma_key(entry.kk_lemma);
  if (key.empty()) throw Error(ErrorCode::kMalformedRow, "empty Kazakh lemma");
  if (index_.contains(key)) {
    throw Error(ErrorCode::kDuplicateLemma, "lemma '" + entry.kk_lemma + "' appears twice");
  }
  if (std::find(entry.ru_forms.begin(), entry.ru_forms.end(), entry.ru_normal) ==
      entry.ru_forms.end()) {
    entry.ru_forms.insert(entry.ru_forms.begin(), entry.ru_normal);
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(entry));
}

void Lexicon::set_kazakh_suffixes(std::vector<std::string> suffixes) {
  kk_suffixes_ = sorted_inventory(std::move(suffixes));
}

void Lexicon::set_russian_suffixes(std::vector<std::string> suffixes) {
  ru_suffixes_ = sorted_inventory(std::move(suffixes));
}

const LexEntry* Lexicon::find_lemma(std::string_view lemma) const {
  const auto it = index_.find(std::string(lemma));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

Lexicon parse_lexicon(std::string_view tsv) {
  Lexicon lexicon;
  std::size_t line_no = 0;
  for (auto& line : split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split(line, '\t');
    if (cols.size() < 2 || cols.size() > 3 || cols[0].empty() || cols[1].empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  "lexicon line " + std::to_string(line_no) +
                      ": expected kk_lemma<TAB>ru_normal[<TAB>forms]");
    }
    LexEntry entry{cols[0], cols[1], {}};
    if (cols.size() == 3) {
      for (auto& form : split(cols[2], ',')) {
        std::string f = unicode::trim(form);
        if (!f.empty()) entry.ru_forms.push_back(std::move(f));
      }
    }
    lexicon.add(std::move(entry));
  }
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(read_file(path));
}

std::string serialize_lexicon(const Lexicon& lexicon) {
  std::string out;
  for (const auto& e : lexicon.entries()) {
    out += e.kk_lemma;
    out += '\t';
    out += e.ru_normal;
    out += '\t';
    for (std::size_t i = 0; i < e.ru_forms.size(); ++i) {
      if (i) out += ',';
      out += e.ru_forms[i];
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> parse_suffix_inventory(std::string_view text) {
  std::vector<std::string> out;
  for (auto& line : split(text, '\n')) {
    std::string s = unicode::trim(line);
    if (s.empty() || s.front() == '#') continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> load_suffix_inventory(const std::filesystem::path& path) {
  return parse_suffix_inventory(read_file(path));
}

Lexicon load_lexicon(const std::filesystem::path& lexicon_path,
                     const std::filesystem::path& kk_suffix_path,
                     const std::filesystem::path& ru_suffix_path) {
  Lexicon lexicon = load_lexicon(lexicon_path);
  lexicon.set_kazakh_suffixes(load_suffix_inventory(kk_suffix_path));
  lexicon.set_russian_suffixes(load_suffix_inventory(ru_suffix_path));
  return lexicon;
}

const LexEntry* lookup(std::string_view kk_token, const Lexicon& lexicon) {
  const std::string key = lemma_key(kk_token);
  if (const auto* hit = lexicon.find_lemma(key)) return hit;
  const std::u32string lower = unicode::decode(key);
  for (const auto& suffix : lexicon.kazakh_suffixes()) {
    const std::u32string s = unicode::decode(suffix);
    if (s.size() + kMinKazakhStem > lower.size()) continue;
    if (lower.compare(lower.size() - s.size(), s.size(), s) != 0) continue;
    const std::string stem = unicode::encode(lower.substr(0, lower.size() - s.size()));
    if (const auto* hit = lexicon.find_lemma(stem)) return hit;
  }
  return nullptr;
}

MorphSplit split_kk(std::string_view kk_token, const Lexicon& lexicon) {
  require_letters(kk_token, 3);
  const std::u32string original = unicode::decode(kk_token);
  const std::size_t cut =
      longest_suffix(lower_codepoints(kk_token), lexicon.kazakh_suffixes(), kMinKazakhStem);
  const std::size_t stem_len = original.size() - cut;
  return {unicode::encode(original.substr(0, stem_len)),
          unicode::encode(original.substr(stem_len))};
}

std::string stem_ru(std::string_view ru_word, const Lexicon& lexicon) {
  require_letters(ru_word, 3);
  const std::u32string original = unicode::decode(ru_word);
  const std::size_t cut =
      longest_suffix(lower_codepoints(ru_word), lexicon.russian_suffixes(), kMinRussianStem);
  return unicode::encode(original.substr(0, original.size() - cut));
}

std::string compose_hybrid(std::string_view ru_stem, std::string_view kk_ending) {
  if (ru_stem.empty()) throw Error(ErrorCode::kInvalidArgument, "empty Russian stem");
  std::string joined(ru_stem);
  joined += kk_ending;
  return unicode::to_lower(joined);
}

const std::string& random_form(const LexEntry& entry, Rng& rng) {
  if (entry.ru_forms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "entry '" + entry.kk_lemma + "' has no forms");
  }
  return entry.ru_forms[rng.uniform(entry.ru_forms.size())];
}

std::vector<LexiconIssue> check_lexicon(const Lexicon& lexicon) {
  std::vector<LexiconIssue> issues;
  std::set<std::string> ru_words;
  for (const auto& e : lexicon.entries()) {
    for (const auto& f : e.ru_forms) ru_words.insert(unicode::to_lower(f));
  }
  for (const auto& s : lexicon.kazakh_suffixes()) {
    if (lexicon.find_lemma(s) != nullptr) {
      issues.push_back({"kk_suffix_is_word", "Kazakh suffix '" + s + "' is also a lemma"});
    }
  }
  for (const auto& s : lexicon.russian_suffixes()) {
    if (ru_words.contains(s)) {
      issues.push_back({"ru_suffix_is_word", "Russian suffix '" + s + "' is also a word form"});
    }
  }
  return issues;
}

}  // namespace cswitch
