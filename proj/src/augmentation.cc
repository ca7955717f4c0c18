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

#include "cswitch/augmentation.h"

#include <algorithm>
#include <cmath>

#include "cswitch/error.h"
#include "cswitch/parallel.h"
#include "cswitch/rng.h"
#include "cswitch/unicode.h"

namespace cswitch {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kCs1: return "cs1";
    case Strategy::kCs2: return "cs2";
    case Strategy::kCs3: return "cs3";
    case Strategy::kCs4: return "cs4";
    case Strategy::kCs5: return "cs5";
  }
  return "";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "cs1" || name == "cs-1") return Strategy::kCs1;
  if (name == "cs2" || name == "cs-2") return Strategy::kCs2;
  if (name == "cs3" || name == "cs-3") return Strategy::kCs3;
  if (name == "cs4" || name == "cs-4") return Strategy::kCs4;
  if (name == "cs5" || name == "cs-5") return Strategy::kCs5;
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

void AugmentConfig::validate() const {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rate must be in (0, 1]");
  }
  if (short_len < 1) throw Error(ErrorCode::kInvalidArgument, "short_len must be >= 1");
  if (short_count < 1) throw Error(ErrorCode::kInvalidArgument, "short_count must be >= 1");
  if (sim_iterations < 1) throw Error(ErrorCode::kInvalidArgument, "sim_iterations must be >= 1");
}

std::size_t replacement_count(std::size_t n_tokens, const AugmentConfig& config) {
  if (n_tokens < static_cast<std::size_t>(config.short_len)) {
    return static_cast<std::size_t>(config.short_count);
  }
  // The epsilon absorbs representation error when rate * n is integral.
  return static_cast<std::size_t>(
      std::floor(config.rate * static_cast<double>(n_tokens) + 1e-9));
}

namespace {

bool uses_lexicon(Strategy s) {
  return s == Strategy::kCs1 || s == Strategy::kCs2 || s == Strategy::kCs3;
}

void require_resources(const AugmentConfig& config, const AugmentResources& resources) {
  const auto name = std::string(strategy_name(config.strategy));
  if (uses_lexicon(config.strategy) && resources.lexicon == nullptr) {
    throw Error(ErrorCode::kMissingResource, name + " needs a lexicon");
  }
  if (config.strategy == Strategy::kCs4 && resources.alignments == nullptr &&
      (resources.forward_table == nullptr || resources.backward_table == nullptr)) {
    throw Error(ErrorCode::kMissingResource,
                "cs4 needs alignments or forward and backward translation tables");
  }
  if (config.strategy == Strategy::kCs5 && resources.similarities == nullptr) {
    throw Error(ErrorCode::kMissingResource, "cs5 needs similarity matrices");
  }
}

bool cs2_feasible(std::string_view token, const LexEntry& entry) {
  return unicode::letter_count(token) >= 3 && unicode::letter_count(entry.ru_normal) >= 3;
}

AlignmentLinkSet pair_alignment(const SentencePair& pair, const AugmentConfig& config,
                                const AugmentResources& resources) {
  const auto id = static_cast<std::size_t>(pair.id);
  if (config.strategy == Strategy::kCs5) {
    if (id >= resources.similarities->size()) {
      throw Error(ErrorCode::kMissingResource,
                  "no similarity matrix for pair " + std::to_string(pair.id));
    }
    const auto& m = (*resources.similarities)[id];
    if (m.rows != pair.source.size() || m.cols != pair.target.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "similarity matrix for pair " + std::to_string(pair.id) + " is " +
                      std::to_string(m.rows) + "x" + std::to_string(m.cols));
    }
    return sim_align(m, config.sim_method, config.sim_iterations);
  }
  if (resources.alignments != nullptr) {
    if (id >= resources.alignments->size()) {
      throw Error(ErrorCode::kMissingResource, "no alignment for pair " + std::to_string(pair.id));
    }
    return (*resources.alignments)[id];
  }
  const auto fwd = viterbi_align(pair, *resources.forward_table, Direction::kForward);
  const auto bwd = viterbi_align(pair, *resources.backward_table, Direction::kReverse);
  return symmetrize(fwd, bwd, config.heuristic);
}

std::string cs1_payload(const LexEntry& entry) { return entry.ru_normal; }

std::string cs2_payload(std::string_view token, const LexEntry& entry, const Lexicon& lexicon) {
  return compose_hybrid(stem_ru(entry.ru_normal, lexicon), split_kk(token, lexicon).ending);
}

std::string with_case(std::string payload, std::string_view original,
                      const AugmentConfig& config) {
  if (config.inherit_case && unicode::starts_upper(original)) return unicode::capitalize(payload);
  return payload;
}

// Draws up to k distinct items from `pool` (partial Fisher-Yates).
std::vector<std::size_t> sample(std::vector<std::size_t> pool, std::size_t k, Rng& rng) {
  k = std::min(k, pool.size());
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t r = t + rng.uniform(pool.size() - t);
    std::swap(pool[t], pool[r]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::vector<std::size_t> eligible_positions(const SentencePair& pair, const AugmentConfig& config,
                                            const AugmentResources& resources) {
  require_resources(config, resources);
  std::vector<std::size_t> out;
  if (uses_lexicon(config.strategy)) {
    for (std::size_t i = 0; i < pair.source.size(); ++i) {
      const auto& token = pair.source.tokens[i].surface;
      const LexEntry* entry = lookup(token, *resources.lexicon);
      if (entry == nullptr) continue;
      if (config.strategy == Strategy::kCs2 && !cs2_feasible(token, *entry)) continue;
      out.push_back(i);
    }
    return out;
  }
  const auto units = extract_mau(pair, pair_alignment(pair, config, resources)).units;
  for (const auto& u : units) {
    for (std::size_t i = u.src.first; i <= u.src.last; ++i) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AugmentPlan plan(const SentencePair& pair, const AugmentConfig& config,
                 const AugmentResources& resources) {
  require_resources(config, resources);
  AugmentPlan result;
  result.pair_id = pair.id;
  result.strategy = config.strategy;
  const std::size_t n = pair.source.size();
  if (n == 0) return result;
  const std::size_t k = replacement_count(n, config);
  Rng rng(config.seed, pair.id);
  const auto& tokens = pair.source.tokens;

  if (uses_lexicon(config.strategy)) {
    const Lexicon& lexicon = *resources.lexicon;
    result.positions = sample(eligible_positions(pair, config, resources), k, rng);
    for (std::size_t pos : result.positions) {
      const std::string& token = tokens[pos].surface;
      const LexEntry& entry = *lookup(token, lexicon);
      std::string payload;
      switch (config.strategy) {
        case Strategy::kCs1:
          payload = cs1_payload(entry);
          break;
        case Strategy::kCs2:
          payload = cs2_payload(token, entry, lexicon);
          break;
        default:
          if (config.cs3_mode == Cs3Mode::kRandomForm) {
            payload = random_form(entry, rng);
          } else if (rng.uniform(2) == 0 || !cs2_feasible(token, entry)) {
            payload = cs1_payload(entry);
          } else {
            payload = cs2_payload(token, entry, lexicon);
          }
          break;
      }
      result.replacements.push_back({{pos, pos}, {with_case(std::move(payload), token, config)}});
    }
    return result;
  }

  const auto units = extract_mau(pair, pair_alignment(pair, config, resources)).units;
  std::vector<std::size_t> pool;
  std::vector<std::size_t> unit_of(n, units.size());
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t i = units[u].src.first; i <= units[u].src.last; ++i) {
      pool.push_back(i);
      unit_of[i] = u;
    }
  }
  std::sort(pool.begin(), pool.end());
  std::vector<std::size_t> chosen;
  std::size_t covered = 0;
  while (covered < k && !pool.empty()) {
    const std::size_t u = unit_of[pool[rng.uniform(pool.size())]];
    chosen.push_back(u);
    covered += units[u].src.size();
    std::erase_if(pool, [&](std::size_t i) { return unit_of[i] == u; });
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t u : chosen) {
    const auto& unit = units[u];
    Replacement rep{unit.src, {}};
    for (std::size_t j = unit.tgt.first; j <= unit.tgt.last; ++j) {
      rep.tokens.push_back(pair.target.tokens[j].surface);
    }
    rep.tokens.front() = with_case(rep.tokens.front(), tokens[unit.src.first].surface, config);
    for (std::size_t i = unit.src.first; i <= unit.src.last; ++i) result.positions.push_back(i);
    result.replacements.push_back(std::move(rep));
  }
  return result;
}

AugmentedPair apply(const SentencePair& pair, const AugmentPlan& plan) {
  if (plan.pair_id != pair.id) {
    throw Error(ErrorCode::kPlanMismatch, "plan for pair " + std::to_string(plan.pair_id) +
                                              " applied to pair " + std::to_string(pair.id));
  }
  const std::size_t n = pair.source.size();
  std::size_t next_free = 0;
  for (const auto& rep : plan.replacements) {
    if (rep.span.first < next_free || rep.span.last >= n || rep.span.first > rep.span.last ||
        rep.tokens.empty()) {
      throw Error(ErrorCode::kPlanMismatch,
                  "plan span does not fit pair " + std::to_string(pair.id));
    }
    next_free = rep.span.last + 1;
  }
  std::vector<std::string> out;
  out.reserve(n + 4);
  auto rep = plan.replacements.begin();
  for (std::size_t i = 0; i < n;) {
    if (rep != plan.replacements.end() && rep->span.first == i) {
      out.insert(out.end(), rep->tokens.begin(), rep->tokens.end());
      i = rep->span.last + 1;
      ++rep;
      continue;
    }
    out.push_back(pair.source.tokens[i].surface);
    ++i;
  }
  AugmentedPair result{pair, {}, plan};
  if (plan.empty()) {
    result.augmented_source = pair.source;
  } else {
    result.augmented_source = sentence_from_tokens(out, pair.source.lang);
  }
  return result;
}

nlohmann::json to_json(const AugmentPlan& plan) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : plan.replacements) {
    reps.push_back({{"span", {r.span.first, r.span.last}}, {"tokens", r.tokens}});
  }
  return {{"id", plan.pair_id},
          {"strategy", strategy_name(plan.strategy)},
          {"positions", plan.positions},
          {"replacements", reps}};
}

double AugmentReport::replaced_fraction() const {
  return source_tokens == 0 ? 0.0
                            : static_cast<double>(replaced_tokens) /
                                  static_cast<double>(source_tokens);
}

double AugmentReport::coverage() const {
  return pairs == 0 ? 0.0 : static_cast<double>(augmented_pairs) / static_cast<double>(pairs);
}

nlohmann::json to_json(const AugmentReport& report) {
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"id", s.pair_id}, {"error", s.error}});
  return {{"strategy", strategy_name(report.strategy)},
          {"pairs", report.pairs},
          {"augmented_pairs", report.augmented_pairs},
          {"passthrough_pairs", report.passthrough_pairs},
          {"source_tokens", report.source_tokens},
          {"replaced_tokens", report.replaced_tokens},
          {"inserted_tokens", report.inserted_tokens},
          {"replaced_fraction", report.replaced_fraction()},
          {"coverage", report.coverage()},
          {"skipped", skipped}};
}

Corpus AugmentOutput::corpus() const {
  Corpus out;
  out.kind = CorpusKind::kParallel;
  out.pairs.reserve(pairs.size());
  for (const auto& p : pairs) out.pairs.push_back({p.augmented_source, p.original.target, p.original.id});
  return out;
}

AugmentOutput augment_corpus(const Corpus& corpus, const AugmentConfig& config,
                             const AugmentResources& resources, int jobs) {
  config.validate();
  require_resources(config, resources);
  AugmentOutput output;
  const std::size_t n = corpus.pairs.size();
  output.pairs.resize(n);
  std::vector<std::optional<std::string>> errors(n);
  parallel_for(n, jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& pair = corpus.pairs[i];
      try {
        output.pairs[i] = apply(pair, plan(pair, config, resources));
      } catch (const Error& e) {
        errors[i] = e.what();
        AugmentPlan empty;
        empty.pair_id = pair.id;
        empty.strategy = config.strategy;
        output.pairs[i] = AugmentedPair{pair, pair.source, empty};
      }
    }
  });
  auto& report = output.report;
  report.strategy = config.strategy;
  report.pairs = n;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = output.pairs[i];
    report.source_tokens += p.original.source.size();
    if (errors[i]) {
      report.skipped.push_back({p.original.id, *errors[i]});
      continue;
    }
    if (p.plan.empty()) {
      ++report.passthrough_pairs;
      continue;
    }
    ++report.augmented_pairs;
    report.replaced_tokens += p.plan.positions.size();
    for (const auto& r : p.plan.replacements) report.inserted_tokens += r.tokens.size();
  }
  return output;
}

}  // namespace cswitch
