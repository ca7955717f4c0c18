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

#include "cswitch/corpus.h"

#include "cswitch/error.h"
#include "cswitch/unicode.h"

namespace cswitch {

std::string_view lang_tag(Lang lang) {
  return lang == Lang::kKazakh ? "kk" : "ru";
}

Lang parse_lang(std::string_view tag) {
  if (tag == "kk") return Lang::kKazakh;
  if (tag == "ru") return Lang::kRussian;
  throw Error(ErrorCode::kUnknownLanguage, "unsupported language tag '" +
                                               std::string(tag) + "'");
}

Token make_token(std::string surface) {
  Token token{std::move(surface), {}};
  unicode::for_each_codepoint(token.surface, [&](char32_t cp) {
    switch (unicode::classify(cp)) {
      case unicode::CharClass::kLetter: ++token.summary.letters; break;
      case unicode::CharClass::kDigit: ++token.summary.digits; break;
      case unicode::CharClass::kPunctuation: ++token.summary.punctuation; break;
      case unicode::CharClass::kOther: ++token.summary.other; break;
    }
  });
  return token;
}

std::vector<std::string> Sentence::surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

void Corpus::renumber() {
  for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i].id = i;
}

namespace {

struct Span {
  std::size_t begin;
  std::size_t end;
  bool punct;
};

void split_chunk(std::string_view text, std::size_t begin, std::size_t end,
                 std::vector<Token>& out) {
  // Code point boundaries and punctuation flags for the chunk.
  std::vector<Span> cps;
  std::size_t pos = begin;
  while (pos < end) {
    const std::size_t start = pos;
    const char32_t cp = unicode::next_codepoint(text, pos);
    cps.push_back({start, pos, unicode::is_punct_or_symbol(cp)});
  }
  std::size_t lead = 0;
  while (lead < cps.size() && cps[lead].punct) ++lead;
  if (lead == cps.size()) {
    for (const auto& s : cps) {
      out.push_back(make_token(std::string(text.substr(s.begin, s.end - s.begin))));
    }
    return;
  }
  std::size_t trail = cps.size();
  while (trail > lead && cps[trail - 1].punct) --trail;
  for (std::size_t i = 0; i < lead; ++i) {
    out.push_back(make_token(
        std::string(text.substr(cps[i].begin, cps[i].end - cps[i].begin))));
  }
  const std::size_t core_begin = cps[lead].begin;
  const std::size_t core_end = cps[trail - 1].end;
  out.push_back(make_token(std::string(text.substr(core_begin, core_end - core_begin))));
  for (std::size_t i = trail; i < cps.size(); ++i) {
    out.push_back(make_token(
        std::string(text.substr(cps[i].begin, cps[i].end - cps[i].begin))));
  }
}

}  // namespace

Sentence tokenize(std::string_view text, Lang lang) {
  Sentence sentence;
  sentence.raw = std::string(text);
  sentence.lang = lang;
  const std::string normalized = unicode::nfc(text);
  std::string_view view = normalized;
  std::size_t pos = 0;
  std::size_t chunk_begin = std::string_view::npos;
  while (pos < view.size()) {
    const std::size_t start = pos;
    const char32_t cp = unicode::next_codepoint(view, pos);
    if (unicode::is_whitespace(cp)) {
      if (chunk_begin != std::string_view::npos) {
        split_chunk(view, chunk_begin, start, sentence.tokens);
        chunk_begin = std::string_view::npos;
      }
    } else if (chunk_begin == std::string_view::npos) {
      chunk_begin = start;
    }
  }
  if (chunk_begin != std::string_view::npos) {
    split_chunk(view, chunk_begin, view.size(), sentence.tokens);
  }
  return sentence;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string detokenize(const Sentence& sentence) {
  return join_tokens(sentence.surfaces());
}

Sentence sentence_from_tokens(const std::vector<std::string>& tokens, Lang lang) {
  Sentence sentence;
  sentence.lang = lang;
  sentence.raw = join_tokens(tokens);
  sentence.tokens.reserve(tokens.size());
  for (const auto& t : tokens) sentence.tokens.push_back(make_token(t));
  return sentence;
}

SentencePair make_pair(std::string_view source, std::string_view target,
                       std::uint64_t id) {
  return {tokenize(source, Lang::kKazakh), tokenize(target, Lang::kRussian), id};
}

bool is_kazakh_specific_letter(char32_t cp) {
  switch (cp) {
    case U'Ә': case U'ә':
    case U'Ғ': case U'ғ':
    case U'Қ': case U'қ':
    case U'Ң': case U'ң':
    case U'Ө': case U'ө':
    case U'Ұ': case U'ұ':
    case U'Ү': case U'ү':
    case U'Һ': case U'һ':
    case U'І': case U'і':
      return true;
    default:
      return false;
  }
}

bool is_core_russian_letter(char32_t cp) {
  return (cp >= U'А' && cp <= U'я') || cp == U'Ё' || cp == U'ё';
}

bool is_embedded_token(std::string_view token, Lang matrix_lang,
                       const EmbeddedVocabulary* vocabulary) {
  if (matrix_lang != Lang::kKazakh) {
    throw Error(ErrorCode::kInvalidArgument,
                "embedded-token detection supports matrix language kk only");
  }
  bool any_letter = false;
  bool all_russian = true;
  unicode::for_each_codepoint(token, [&](char32_t cp) {
    if (!unicode::is_letter(cp)) return;
    any_letter = true;
    if (!is_core_russian_letter(cp)) all_russian = false;
  });
  if (!any_letter || !all_russian) return false;
  if (vocabulary == nullptr) return true;
  const std::string lower = unicode::to_lower(token);
  if (vocabulary->words.contains(lower)) return true;
  return vocabulary->stem && vocabulary->words.contains(vocabulary->stem(lower));
}

nlohmann::json to_json(const StatsReport& report) {
  nlohmann::json j;
  j["sentence_count"] = report.sentence_count;
  j["avg_tokens_source"] = report.avg_tokens_source;
  j["avg_embedded_tokens"] = report.avg_embedded_tokens;
  j["avg_tokens_corrected"] = report.avg_tokens_corrected
                                  ? nlohmann::json(*report.avg_tokens_corrected)
                                  : nlohmann::json(nullptr);
  j["avg_tokens_target"] = report.avg_tokens_target;
  return j;
}

StatsReport compute_stats(const Corpus& corpus, const EmbeddedVocabulary* vocabulary,
                          const Corpus* corrected) {
  const std::size_t n = corpus.size();
  if (n == 0) throw Error(ErrorCode::kEmptyCorpus, "corpus '" + corpus.name + "' is empty");
  if (corrected != nullptr && corrected->size() != n) {
    throw Error(ErrorCode::kLineCountMismatch,
                "corrected side has " + std::to_string(corrected->size()) +
                    " sentences, expected " + std::to_string(n));
  }
  // Integer totals keep the reduction order-independent.
  std::uint64_t source_tokens = 0;
  std::uint64_t target_tokens = 0;
  std::uint64_t embedded = 0;
  auto count_source = [&](const Sentence& s) {
    source_tokens += s.size();
    for (const auto& t : s.tokens) {
      embedded += is_embedded_token(t.surface, Lang::kKazakh, vocabulary) ? 1 : 0;
    }
  };
  if (corpus.kind == CorpusKind::kParallel) {
    for (const auto& p : corpus.pairs) {
      count_source(p.source);
      target_tokens += p.target.size();
    }
  } else {
    for (const auto& s : corpus.sentences) count_source(s);
  }
  StatsReport report;
  const auto denom = static_cast<double>(n);
  report.sentence_count = n;
  report.avg_tokens_source = static_cast<double>(source_tokens) / denom;
  report.avg_tokens_target = static_cast<double>(target_tokens) / denom;
  report.avg_embedded_tokens = static_cast<double>(embedded) / denom;
  if (corrected != nullptr) {
    std::uint64_t corrected_tokens = 0;
    if (corrected->kind == CorpusKind::kParallel) {
      for (const auto& p : corrected->pairs) corrected_tokens += p.source.size();
    } else {
      for (const auto& s : corrected->sentences) corrected_tokens += s.size();
    }
    report.avg_tokens_corrected = static_cast<double>(corrected_tokens) / denom;
  }
  return report;
}

}  // namespace cswitch
