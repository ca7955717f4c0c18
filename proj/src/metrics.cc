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

#include "cswitch/metrics.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "cswitch/corpus.h"
#include "cswitch/error.h"
#include "cswitch/unicode.h"

namespace cswitch {

BleuSmoothing parse_bleu_smoothing(std::string_view name) {
  if (name == "none") return BleuSmoothing::kNone;
  if (name == "epsilon" || name == "floor") return BleuSmoothing::kEpsilon;
  if (name == "add_k" || name == "add-k") return BleuSmoothing::kAddK;
  throw Error(ErrorCode::kInvalidArgument, "unknown BLEU smoothing '" + std::string(name) + "'");
}

namespace {

using NgramCounts = std::unordered_map<std::string, int>;

void check_inputs(const std::vector<std::string>& hyps,
                  const std::vector<std::vector<std::string>>& refs) {
  if (hyps.empty() || refs.empty()) throw Error(ErrorCode::kEmptyInput, "no hypotheses");
  for (const auto& stream : refs) {
    if (stream.size() != hyps.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  std::to_string(hyps.size()) + " hypotheses vs " +
                      std::to_string(stream.size()) + " references");
    }
  }
}

std::vector<std::string> whitespace_split(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = unicode::next_codepoint(text, pos);
    if (unicode::is_whitespace(cp)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.append(text.substr(start, pos - start));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> bleu_tokens(std::string_view text, const BleuConfig& config) {
  std::string cased = config.case_sensitive ? std::string(text) : unicode::to_lower(text);
  if (config.tokenization == BleuTokenization::kBuiltin) {
    return tokenize(cased, Lang::kKazakh).surfaces();
  }
  return whitespace_split(cased);
}

NgramCounts word_ngrams(const std::vector<std::string>& tokens, int n) {
  NgramCounts counts;
  const auto order = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < order; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

double bleu(const std::vector<std::string>& hypotheses,
            const std::vector<std::vector<std::string>>& references, const BleuConfig& config) {
  check_inputs(hypotheses, references);
  if (config.max_order < 1) throw Error(ErrorCode::kInvalidArgument, "max_order must be >= 1");
  const auto orders = static_cast<std::size_t>(config.max_order);
  std::vector<double> matches(orders, 0.0);
  std::vector<double> totals(orders, 0.0);
  double hyp_len = 0.0;
  double ref_len = 0.0;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto hyp = bleu_tokens(hypotheses[s], config);
    std::vector<std::vector<std::string>> refs;
    for (const auto& stream : references) refs.push_back(bleu_tokens(stream[s], config));
    hyp_len += static_cast<double>(hyp.size());
    // Closest reference length; ties go to the shorter one.
    std::size_t best = refs.front().size();
    for (const auto& r : refs) {
      const auto d = [&](std::size_t len) {
        return len > hyp.size() ? len - hyp.size() : hyp.size() - len;
      };
      if (d(r.size()) < d(best) || (d(r.size()) == d(best) && r.size() < best)) best = r.size();
    }
    ref_len += static_cast<double>(best);
    for (std::size_t n = 1; n <= orders; ++n) {
      const auto hyp_counts = word_ngrams(hyp, static_cast<int>(n));
      NgramCounts max_ref;
      for (const auto& r : refs) {
        for (const auto& [g, c] : word_ngrams(r, static_cast<int>(n))) {
          max_ref[g] = std::max(max_ref[g], c);
        }
      }
      for (const auto& [g, c] : hyp_counts) {
        const auto it = max_ref.find(g);
        if (it != max_ref.end()) matches[n - 1] += std::min(c, it->second);
        totals[n - 1] += c;
      }
    }
  }
  if (hyp_len == 0.0) return 0.0;
  if (std::all_of(matches.begin(), matches.end(), [](double m) { return m == 0.0; })) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < orders; ++n) {
    double p = 0.0;
    switch (config.smoothing) {
      case BleuSmoothing::kNone:
        if (totals[n] == 0.0 || matches[n] == 0.0) return 0.0;
        p = matches[n] / totals[n];
        break;
      case BleuSmoothing::kEpsilon:
        if (totals[n] == 0.0) return 0.0;
        p = (matches[n] == 0.0 ? config.epsilon : matches[n]) / totals[n];
        break;
      case BleuSmoothing::kAddK:
        if (n == 0) {
          if (totals[n] == 0.0 || matches[n] == 0.0) return 0.0;
          p = matches[n] / totals[n];
        } else {
          p = (matches[n] + config.add_k) / (totals[n] + config.add_k);
        }
        break;
    }
    log_sum += std::log(p);
  }
  const double bp = hyp_len < ref_len ? std::exp(1.0 - ref_len / hyp_len) : 1.0;
  return 100.0 * bp * std::exp(log_sum / static_cast<double>(orders));
}

double bleu(const std::vector<std::string>& hypotheses, const std::vector<std::string>& references,
            const BleuConfig& config) {
  return bleu(hypotheses, std::vector<std::vector<std::string>>{references}, config);
}

namespace {

bool is_ascii_punct(char32_t cp) {
  return cp < 0x80 && std::string_view("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~").find(
                          static_cast<char>(cp)) != std::string_view::npos;
}

// Peels one leading or one trailing ASCII punctuation character off each
// word, as the reference chrF++ implementation does.
std::vector<std::string> chrf_words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& w : whitespace_split(text)) {
    const std::u32string cps = unicode::decode(w);
    if (cps.size() == 1) {
      out.push_back(std::move(w));
    } else if (is_ascii_punct(cps.back())) {
      out.push_back(unicode::encode(cps.substr(0, cps.size() - 1)));
      out.push_back(unicode::encode(cps.substr(cps.size() - 1)));
    } else if (is_ascii_punct(cps.front())) {
      out.push_back(unicode::encode(cps.substr(0, 1)));
      out.push_back(unicode::encode(cps.substr(1)));
    } else {
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::unordered_map<std::u32string, int> char_ngrams(const std::u32string& chars, std::size_t n) {
  std::unordered_map<std::u32string, int> counts;
  for (std::size_t i = 0; i + n <= chars.size(); ++i) ++counts[chars.substr(i, n)];
  return counts;
}

template <typename Map>
void add_stats(const Map& hyp, const Map& ref, double* stats) {
  for (const auto& [g, c] : hyp) {
    stats[0] += c;
    const auto it = ref.find(g);
    if (it != ref.end()) stats[2] += std::min(c, it->second);
  }
  for (const auto& [g, c] : ref) stats[1] += c;
}

// Flattened [hyp, ref, match] triples per order: char orders then word orders.
std::vector<double> sentence_stats(std::string_view hyp, std::string_view ref,
                                   const ChrfConfig& config) {
  const std::size_t orders = static_cast<std::size_t>(config.char_order + config.word_order);
  std::vector<double> stats(3 * orders, 0.0);
  auto strip = [](std::string_view text) {
    std::u32string out;
    unicode::for_each_codepoint(text, [&](char32_t cp) {
      if (!unicode::is_whitespace(cp)) out.push_back(cp);
    });
    return out;
  };
  const auto hyp_chars = strip(hyp);
  const auto ref_chars = strip(ref);
  for (int n = 1; n <= config.char_order; ++n) {
    add_stats(char_ngrams(hyp_chars, static_cast<std::size_t>(n)),
              char_ngrams(ref_chars, static_cast<std::size_t>(n)), &stats[3 * (n - 1)]);
  }
  const auto hyp_words = chrf_words(hyp);
  const auto ref_words = chrf_words(ref);
  for (int n = 1; n <= config.word_order; ++n) {
    add_stats(word_ngrams(hyp_words, n), word_ngrams(ref_words, n),
              &stats[3 * static_cast<std::size_t>(config.char_order + n - 1)]);
  }
  return stats;
}

double chrf_from_stats(const std::vector<double>& stats, double beta) {
  const double factor = beta * beta;
  double avg_prec = 0.0;
  double avg_rec = 0.0;
  int effective = 0;
  for (std::size_t i = 0; i + 2 < stats.size(); i += 3) {
    const double n_hyp = stats[i];
    const double n_ref = stats[i + 1];
    const double n_match = stats[i + 2];
    if (n_hyp > 0 && n_ref > 0) {
      avg_prec += n_match / n_hyp;
      avg_rec += n_match / n_ref;
      ++effective;
    }
  }
  if (effective == 0) return 0.0;
  avg_prec /= effective;
  avg_rec /= effective;
  if (avg_prec + avg_rec == 0.0) return 0.0;
  return 100.0 * (1 + factor) * avg_prec * avg_rec / (factor * avg_prec + avg_rec);
}

}  // namespace

double chrf_pp(const std::vector<std::string>& hypotheses,
               const std::vector<std::vector<std::string>>& references, const ChrfConfig& config) {
  check_inputs(hypotheses, references);
  if (config.char_order < 1 || config.word_order < 0 || !(config.beta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid chrF configuration");
  }
  const std::size_t orders = static_cast<std::size_t>(config.char_order + config.word_order);
  std::vector<double> totals(3 * orders, 0.0);
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    // With several references, keep the one with the best sentence score.
    std::vector<double> best;
    double best_score = -1.0;
    for (const auto& stream : references) {
      auto stats = sentence_stats(hypotheses[s], stream[s], config);
      const double f = chrf_from_stats(stats, config.beta);
      if (f > best_score) {
        best_score = f;
        best = std::move(stats);
      }
    }
    for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += best[k];
  }
  return chrf_from_stats(totals, config.beta);
}

double chrf_pp(const std::vector<std::string>& hypotheses,
               const std::vector<std::string>& references, const ChrfConfig& config) {
  return chrf_pp(hypotheses, std::vector<std::vector<std::string>>{references}, config);
}

ScoreReport score_systems(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& outputs,
    const std::vector<std::string>& references, const BleuConfig& bleu_config,
    const ChrfConfig& chrf_config, ExternalScorer* external,
    const std::vector<std::string>* sources, std::string dataset) {
  ScoreReport report;
  report.dataset = std::move(dataset);
  for (const auto& [name, hyps] : outputs) {
    SystemScore row;
    row.system = name;
    try {
      row.bleu = bleu(hyps, references, bleu_config);
      row.chrf_pp = chrf_pp(hyps, references, chrf_config);
      if (external != nullptr) {
        const std::vector<std::string> no_sources(hyps.size());
        const auto scores =
            external->score(hyps, references, sources != nullptr ? *sources : no_sources);
        double sum = 0.0;
        for (double v : scores) sum += v;
        row.external[external->name()] = scores.empty() ? 0.0 : sum / static_cast<double>(scores.size());
      }
    } catch (const std::exception& e) {
      row.bleu.reset();
      row.chrf_pp.reset();
      row.external.clear();
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::json to_json(const ScoreReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row{{"system", r.system}};
    row["bleu"] = r.bleu ? nlohmann::json(*r.bleu) : nlohmann::json(nullptr);
    row["chrf_pp"] = r.chrf_pp ? nlohmann::json(*r.chrf_pp) : nlohmann::json(nullptr);
    row["external"] = r.external;
    if (r.error) row["error"] = *r.error;
    rows.push_back(std::move(row));
  }
  return {{"dataset", report.dataset}, {"rows", rows}};
}

std::string render_table(const ScoreReport& report) {
  std::vector<std::string> external_names;
  for (const auto& r : report.rows) {
    for (const auto& [k, v] : r.external) {
      if (std::find(external_names.begin(), external_names.end(), k) == external_names.end()) {
        external_names.push_back(k);
      }
    }
  }
  std::vector<std::string> header{"System", "BLEU", "ChrF++"};
  header.insert(header.end(), external_names.begin(), external_names.end());
  std::vector<std::vector<std::string>> cells{header};
  auto fmt = [](double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << v;
    return out.str();
  };
  for (const auto& r : report.rows) {
    std::vector<std::string> line{r.system};
    if (r.error) {
      line.push_back("error: " + *r.error);
    } else {
      line.push_back(fmt(*r.bleu));
      line.push_back(fmt(*r.chrf_pp));
      for (const auto& name : external_names) {
        const auto it = r.external.find(name);
        line.push_back(it == r.external.end() ? "-" : fmt(it->second));
      }
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size() && c < widths.size(); ++c) {
      widths[c] = std::max(widths[c], unicode::length(line[c]));
    }
  }
  std::ostringstream out;
  if (!report.dataset.empty()) out << "Dataset: " << report.dataset << '\n';
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << " | ";
      out << line[c];
      if (c + 1 < line.size() && c < widths.size()) {
        out << std::string(widths[c] - unicode::length(line[c]), ' ');
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cswitch
