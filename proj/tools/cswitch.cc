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

// Command-line front end. Each subcommand reads files, calls one library
// operation and writes its results atomically.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cswitch/alignment.h"
#include "cswitch/augmentation.h"
#include "cswitch/config.h"
#include "cswitch/corpus.h"
#include "cswitch/domain.h"
#include "cswitch/error.h"
#include "cswitch/filtering.h"
#include "cswitch/io.h"
#include "cswitch/lexicon.h"
#include "cswitch/metrics.h"
#include "cswitch/unicode.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cswitch {
namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr std::size_t kStreamBatch = 1 << 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config;
  std::map<std::string, std::string> overrides;
  bool json = false;
  int jobs = 1;
  bool dry_run = false;
};

// Corpus on disk: either two line-aligned files or one two-column TSV.
struct CorpusPaths {
  std::string src;
  std::string tgt;
  std::string tsv;

  bool given() const { return !tsv.empty() || !src.empty() || !tgt.empty(); }
  void check(const std::string& what) const {
    if (!tsv.empty() && (!src.empty() || !tgt.empty())) {
      throw UsageError(what + ": give either a TSV file or a source/target pair, not both");
    }
    if (tsv.empty() && (src.empty() || tgt.empty())) {
      throw UsageError(what + ": both source and target files are required");
    }
  }
};

void add_input(CLI::App* sub, CorpusPaths& in) {
  sub->add_option("--src", in.src, "Kazakh side, one sentence per line");
  sub->add_option("--tgt", in.tgt, "Russian side, line-aligned with --src");
  sub->add_option("--tsv", in.tsv, "Two-column TSV instead of --src/--tgt");
}

void add_output(CLI::App* sub, CorpusPaths& out) {
  sub->add_option("--out-src", out.src, "Output source file");
  sub->add_option("--out-tgt", out.tgt, "Output target file");
  sub->add_option("--out-tsv", out.tsv, "Output TSV file");
}

// Flag whose value lands in the config under `key`, so flags and the config
// file share one parser and flags win.
CLI::Option* add_key(CLI::App* sub, Common& common, const std::string& flag, const std::string& key,
                     const std::string& help) {
  return sub->add_option_function<std::string>(
      flag, [&common, key](const std::string& v) { common.overrides[key] = v; }, help);
}

PipelineConfig resolve_config(const Common& common) {
  PipelineConfig cfg;
  try {
    if (!common.config.empty()) cfg.apply(load_config(common.config));
    for (const auto& [k, v] : common.overrides) cfg.set(k, v);
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Corpus read_corpus(const CorpusPaths& in) {
  in.check("input");
  return in.tsv.empty() ? read_parallel(in.src, in.tgt) : read_parallel_tsv(in.tsv);
}

ParallelReader open_reader(const CorpusPaths& in) {
  in.check("input");
  return in.tsv.empty() ? ParallelReader::open(in.src, in.tgt) : ParallelReader::open_tsv(in.tsv);
}

void check_output(const CorpusPaths& out, bool dry_run) {
  if (dry_run && !out.given()) return;
  out.check("output");
}

void write_corpus(const Corpus& corpus, const CorpusPaths& out) {
  if (out.tsv.empty()) {
    write_parallel(corpus, out.src, out.tgt);
  } else {
    write_parallel_tsv(corpus, out.tsv);
  }
}

void emit(const Common& common, const json& j, const std::string& text) {
  if (common.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::vector<AlignmentLinkSet> read_alignments(const std::string& path, const Corpus& corpus) {
  const auto lines = read_lines(path);
  if (lines.size() != corpus.size()) {
    throw Error(ErrorCode::kLineCountMismatch, path + " has " + std::to_string(lines.size()) +
                                                   " lines for " + std::to_string(corpus.size()) +
                                                   " pairs");
  }
  std::vector<AlignmentLinkSet> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out.push_back(parse_pharaoh(lines[i], corpus.pairs[i].source.size(),
                                corpus.pairs[i].target.size()));
  }
  return out;
}

void write_alignments(const std::vector<AlignmentLinkSet>& links, const std::string& path) {
  std::string text;
  for (const auto& l : links) text += to_pharaoh(l) + "\n";
  write_text_atomic(path, text);
}

Direction parse_direction(const std::string& s) {
  if (s == "fwd" || s == "forward") return Direction::kForward;
  if (s == "rev" || s == "reverse") return Direction::kReverse;
  throw UsageError("--direction must be fwd or rev, got '" + s + "'");
}

Lexicon read_lexicon(const PipelineConfig& cfg) {
  if (cfg.lexicon.empty()) throw UsageError("a lexicon is required (--lexicon or lexicon.path)");
  if (cfg.kk_suffixes.empty() || cfg.ru_suffixes.empty()) {
    throw UsageError("suffix inventories are required (--kk-suffixes, --ru-suffixes)");
  }
  return load_lexicon(cfg.lexicon, cfg.kk_suffixes, cfg.ru_suffixes);
}

// Streaming clean/dedup: bounded memory apart from the digest set.
int run_filter(const Common& common, const CorpusPaths& in, const CorpusPaths& out,
               bool ratio_filters) {
  const auto cfg = resolve_config(common);
  check_output(out, common.dry_run);
  auto reader = open_reader(in);
  std::optional<ParallelWriter> writer;
  if (!common.dry_run) {
    writer.emplace(out.tsv.empty() ? ParallelWriter::open(out.src, out.tgt)
                                   : ParallelWriter::open_tsv(out.tsv));
  }
  StreamingFilter filter(cfg.filter, ratio_filters, common.jobs);
  std::vector<RawPair> batch;
  std::vector<RawPair> kept;
  while (true) {
    batch.clear();
    if (!reader.read_batch(kStreamBatch, batch)) break;
    kept.clear();
    filter.process(batch, kept);
    if (writer) {
      for (const auto& p : kept) writer->write(p.source, p.target);
    }
  }
  if (writer) writer->commit();
  const auto& report = filter.report();
  emit(common, to_json(report), report.summary_line() + "\n");
  return 0;
}

int run_stats(const Common& common, const CorpusPaths& in, const std::string& corrected_path,
              const std::string& vocab_path) {
  const auto cfg = resolve_config(common);
  const Corpus corpus = read_corpus(in);
  std::optional<Corpus> corrected;
  if (!corrected_path.empty()) {
    corrected = read_monolingual(corrected_path, Lang::kKazakh);
  }
  std::optional<EmbeddedVocabulary> vocab;
  std::optional<Lexicon> lexicon;
  if (!vocab_path.empty()) {
    vocab.emplace();
    for (const auto& w : read_lines(vocab_path)) {
      if (!w.empty()) vocab->words.insert(unicode::to_lower(w));
    }
    if (!cfg.lexicon.empty()) {
      lexicon = read_lexicon(cfg);
      vocab->stem = [&lex = *lexicon](std::string_view w) { return stem_ru(w, lex); };
    }
  }
  const auto report =
      compute_stats(corpus, vocab ? &*vocab : nullptr, corrected ? &*corrected : nullptr);
  std::ostringstream text;
  text << std::fixed << std::setprecision(2) << "sentences            " << report.sentence_count
       << "\navg tokens (source)  " << report.avg_tokens_source
       << "\navg embedded tokens  " << report.avg_embedded_tokens;
  if (report.avg_tokens_corrected) text << "\navg tokens (corrected) " << *report.avg_tokens_corrected;
  text << "\navg tokens (target)  " << report.avg_tokens_target << '\n';
  emit(common, to_json(report), text.str());
  return 0;
}

int run_align_train(const Common& common, const CorpusPaths& in, const std::string& out,
                    const std::string& direction) {
  auto cfg = resolve_config(common);
  if (out.empty() && !common.dry_run) throw UsageError("--out is required");
  cfg.align.direction = parse_direction(direction);
  cfg.align.jobs = common.jobs;
  const Corpus corpus = read_corpus(in);
  auto result = train_ibm1(corpus, cfg.align);
  if (!common.dry_run) save_table(result.table, out);
  std::ostringstream text;
  for (std::size_t i = 0; i < result.log_likelihood.size(); ++i) {
    text << "iteration " << i << " log-likelihood " << std::setprecision(10)
         << result.log_likelihood[i] << '\n';
  }
  emit(common, json{{"log_likelihood", result.log_likelihood}, {"entries", result.table.entries().size()}},
       text.str());
  return 0;
}

int run_align_apply(const Common& common, const CorpusPaths& in, const std::string& table_path,
                    const std::string& sim_path, const std::string& direction,
                    const std::string& out) {
  const auto cfg = resolve_config(common);
  if (out.empty() && !common.dry_run) throw UsageError("--out is required");
  if (table_path.empty() == sim_path.empty()) {
    throw UsageError("give exactly one of --table and --similarities");
  }
  const Corpus corpus = read_corpus(in);
  std::vector<AlignmentLinkSet> links(corpus.size());
  if (!table_path.empty()) {
    const auto table = load_table(table_path);
    const auto dir = parse_direction(direction);
    for (std::size_t i = 0; i < corpus.size(); ++i) links[i] = viterbi_align(corpus.pairs[i], table, dir);
  } else {
    const auto sims = load_similarities(sim_path);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (i >= sims.size() || sims[i].rows == 0) {
        links[i] = AlignmentLinkSet(corpus.pairs[i].source.size(), corpus.pairs[i].target.size());
        continue;
      }
      links[i] = sim_align(sims[i], cfg.augment.sim_method, cfg.augment.sim_iterations);
    }
  }
  std::size_t total = 0;
  for (const auto& l : links) total += l.size();
  if (!common.dry_run) write_alignments(links, out);
  emit(common, json{{"pairs", links.size()}, {"links", total}},
       std::to_string(links.size()) + " pairs, " + std::to_string(total) + " links\n");
  return 0;
}

int run_symmetrize(const Common& common, const CorpusPaths& in, const std::string& fwd_path,
                   const std::string& bwd_path, const std::string& out) {
  const auto cfg = resolve_config(common);
  if (out.empty() && !common.dry_run) throw UsageError("--out is required");
  const Corpus corpus = read_corpus(in);
  const auto fwd = read_alignments(fwd_path, corpus);
  Corpus flipped;
  for (const auto& p : corpus.pairs) {
    SentencePair f;
    f.source = p.target;
    f.target = p.source;
    f.id = p.id;
    flipped.pairs.push_back(std::move(f));
  }
  const auto bwd = read_alignments(bwd_path, flipped);
  std::vector<AlignmentLinkSet> links;
  std::size_t total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    links.push_back(symmetrize(fwd[i], bwd[i], cfg.augment.heuristic));
    total += links.back().size();
  }
  if (!common.dry_run) write_alignments(links, out);
  emit(common, json{{"pairs", links.size()}, {"links", total}, {"heuristic", heuristic_name(cfg.augment.heuristic)}},
       std::to_string(links.size()) + " pairs, " + std::to_string(total) + " links\n");
  return 0;
}

int run_extract_mau(const Common& common, const CorpusPaths& in, const std::string& align_path,
                    const std::string& out) {
  resolve_config(common);
  if (out.empty() && !common.dry_run) throw UsageError("--out is required");
  const Corpus corpus = read_corpus(in);
  const auto links = read_alignments(align_path, corpus);
  std::string text;
  std::size_t units = 0;
  std::size_t discarded = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto mau = extract_mau(corpus.pairs[i], links[i]);
    json rec{{"id", corpus.pairs[i].id}, {"units", json::array()},
             {"discarded_components", mau.discarded_components}};
    for (const auto& u : mau.units) {
      rec["units"].push_back({{"src", {u.src.first, u.src.last}}, {"tgt", {u.tgt.first, u.tgt.last}}});
    }
    text += rec.dump() + "\n";
    units += mau.units.size();
    discarded += mau.discarded_components;
  }
  if (!common.dry_run) write_text_atomic(out, text);
  emit(common, json{{"pairs", corpus.size()}, {"units", units}, {"discarded_components", discarded}},
       std::to_string(units) + " units, " + std::to_string(discarded) + " discarded components\n");
  return 0;
}

struct AugmentArgs {
  std::string alignments;
  std::string forward_table;
  std::string backward_table;
  std::string similarities;
  std::string plan;
};

int run_augment(const Common& common, const CorpusPaths& in, const CorpusPaths& out,
                const AugmentArgs& args) {
  const auto cfg = resolve_config(common);
  if (!cfg.seed_set) throw UsageError("--seed is required for augment");
  check_output(out, common.dry_run);
  const Corpus corpus = read_corpus(in);
  std::optional<Lexicon> lexicon;
  AugmentResources res;
  const Strategy s = cfg.augment.strategy;
  if (s == Strategy::kCs1 || s == Strategy::kCs2 || s == Strategy::kCs3) {
    lexicon = read_lexicon(cfg);
    res.lexicon = &*lexicon;
  }
  std::vector<AlignmentLinkSet> alignments;
  std::optional<TranslationTable> fwd;
  std::optional<TranslationTable> bwd;
  std::vector<SimilarityMatrix> sims;
  if (s == Strategy::kCs4) {
    if (!args.alignments.empty()) {
      alignments = read_alignments(args.alignments, corpus);
      res.alignments = &alignments;
    } else if (!args.forward_table.empty() && !args.backward_table.empty()) {
      fwd = load_table(args.forward_table);
      bwd = load_table(args.backward_table);
      res.forward_table = &*fwd;
      res.backward_table = &*bwd;
    } else {
      throw UsageError("cs4 needs --alignments or both --forward-table and --backward-table");
    }
  }
  if (s == Strategy::kCs5) {
    if (args.similarities.empty()) throw UsageError("cs5 needs --similarities");
    sims = load_similarities(args.similarities);
    res.similarities = &sims;
  }
  const auto output = augment_corpus(corpus, cfg.augment, res, common.jobs);
  if (!common.dry_run) {
    write_corpus(output.corpus(), out);
    if (!args.plan.empty()) {
      std::string text;
      for (const auto& p : output.pairs) text += to_json(p.plan).dump() + "\n";
      write_text_atomic(args.plan, text);
    }
  }
  const auto& r = output.report;
  std::ostringstream text;
  text << strategy_name(r.strategy) << ": " << r.augmented_pairs << "/" << r.pairs
       << " pairs augmented, " << r.replaced_tokens << "/" << r.source_tokens
       << " tokens replaced, " << r.skipped.size() << " skipped"
       << (common.dry_run ? " (dry run, nothing written)" : "") << '\n';
  for (const auto& sk : r.skipped) std::cerr << "skip pair " << sk.pair_id << ": " << sk.error << '\n';
  emit(common, to_json(r), text.str());
  return 0;
}

int run_score(const Common& common, const std::string& ref_path,
              const std::vector<std::string>& hyps, const std::string& src_path, bool external,
              const std::string& dataset) {
  const auto cfg = resolve_config(common);
  if (hyps.empty()) throw UsageError("--hyp is required");
  const auto refs = read_lines(ref_path);
  std::vector<std::pair<std::string, std::vector<std::string>>> outputs;
  for (const auto& h : hyps) {
    const auto eq = h.find('=');
    const std::string name = eq == std::string::npos ? fs::path(h).stem().string() : h.substr(0, eq);
    const std::string path = eq == std::string::npos ? h : h.substr(eq + 1);
    outputs.emplace_back(name, read_lines(path));
  }
  std::vector<std::string> sources;
  if (!src_path.empty()) sources = read_lines(src_path);
  std::unique_ptr<BatchTransport> transport;
  std::optional<ScorerClient> scorer;
  if (external) {
    try {
      transport = make_transport(cfg.scorer);
    } catch (const Error& e) {
      throw UsageError(std::string("scorer configuration: ") + e.what());
    }
    scorer.emplace(cfg.scorer, *transport);
  }
  const auto report = score_systems(outputs, refs, cfg.bleu, cfg.chrf, scorer ? &*scorer : nullptr,
                                    src_path.empty() ? nullptr : &sources, dataset);
  emit(common, to_json(report), render_table(report));
  for (const auto& row : report.rows) {
    if (row.error) return kDataError;
  }
  return 0;
}

int run_domain_report(const Common& common, const std::vector<std::string>& files) {
  resolve_config(common);
  std::vector<EmbeddingSet> sets;
  for (const auto& f : files) sets.push_back(load_embeddings(f));
  const auto report = domain_report(sets);
  std::ostringstream text;
  text << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < report.datasets.size(); ++i) {
    text << report.datasets[i] << " nearest " << report.datasets[report.nearest[i]] << " ("
         << report.distances[i][report.nearest[i]] << ")\n";
  }
  emit(common, to_json(report), text.str());
  return 0;
}

int run_translate(const Common& common, const std::string& input, const CorpusPaths& out,
                  const std::string& journal) {
  const auto cfg = resolve_config(common);
  check_output(out, common.dry_run);
  std::unique_ptr<BatchTransport> transport;
  try {
    transport = make_transport(cfg.translator);
  } catch (const Error& e) {
    throw UsageError(std::string("translator configuration: ") + e.what());
  }
  const auto lines = read_lines(input);
  if (common.dry_run) {
    const auto batches = (lines.size() + cfg.translator.batch_size - 1) / cfg.translator.batch_size;
    emit(common, json{{"sentences", lines.size()}, {"batches", batches}},
         std::to_string(lines.size()) + " sentences in " + std::to_string(batches) + " batches\n");
    return 0;
  }
  const auto result = translate_corpus(lines, cfg.translator, *transport, journal);
  write_corpus(result.corpus, out);
  std::size_t skipped = 0;
  json skips = json::array();
  for (const auto& s : result.skipped) {
    skipped += s.ids.size();
    skips.push_back({{"batch", s.batch}, {"ids", s.ids}, {"error", s.error}});
    std::cerr << "batch " << s.batch << " skipped (" << s.ids.size() << " sentences): " << s.error << '\n';
  }
  emit(common,
       json{{"sentences", lines.size()}, {"translated", result.corpus.size()}, {"resumed", result.resumed},
            {"requests", result.requests}, {"skipped", skips}},
       std::to_string(result.corpus.size()) + "/" + std::to_string(lines.size()) + " translated, " +
           std::to_string(result.resumed) + " from journal, " + std::to_string(skipped) +
           " skipped\n");
  return 0;
}

int run_lexicon_check(const Common& common) {
  const auto cfg = resolve_config(common);
  const Lexicon lexicon = read_lexicon(cfg);
  const auto issues = check_lexicon(lexicon);
  json j{{"entries", lexicon.size()}, {"issues", json::array()}};
  std::string text = std::to_string(lexicon.size()) + " entries, " + std::to_string(issues.size()) + " issues\n";
  for (const auto& i : issues) {
    j["issues"].push_back({{"kind", i.kind}, {"detail", i.detail}});
    text += i.kind + ": " + i.detail + "\n";
  }
  emit(common, j, text);
  return issues.empty() ? 0 : kDataError;
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Code-switching augmentation toolkit for Kazakh-Russian parallel data"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config, "Config file (key = value)")->check(CLI::ExistingFile);
  app.add_flag("--json", common.json, "Print reports as JSON");
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_flag("--dry-run", common.dry_run, "Do not write any output");

  CorpusPaths in;
  CorpusPaths out;
  std::function<int()> action;

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  add_input(stats, in);
  std::string corrected;
  std::string vocab;
  stats->add_option("--corrected", corrected, "Corrected source side, line-aligned");
  stats->add_option("--vocab", vocab, "Russian word list confirming embedded tokens");
  add_key(stats, common, "--lexicon", "lexicon.path", "Lexicon used to stem --vocab words");
  add_key(stats, common, "--ru-suffixes", "lexicon.ru_suffixes", "Russian suffix inventory");
  add_key(stats, common, "--kk-suffixes", "lexicon.kk_suffixes", "Kazakh suffix inventory");
  stats->callback([&] { action = [&] { return run_stats(common, in, corrected, vocab); }; });

  for (const char* name : {"clean", "dedup"}) {
    const bool ratio = std::string(name) == "clean";
    auto* sub = app.add_subcommand(name, ratio ? "Drop noisy pairs and exact duplicates"
                                               : "Drop exact duplicate pairs");
    add_input(sub, in);
    add_output(sub, out);
    if (ratio) {
      add_key(sub, common, "--punct-threshold", "filter.punct_threshold", "Max punctuation ratio");
      add_key(sub, common, "--charset-threshold", "filter.charset_threshold", "Min charset ratio");
    }
    sub->callback([&, ratio] { action = [&, ratio] { return run_filter(common, in, out, ratio); }; });
  }

  std::string direction = "fwd";
  std::string table;
  std::string sims;
  std::string out_file;
  auto* train = app.add_subcommand("align-train", "Train an IBM Model 1 translation table");
  add_input(train, in);
  train->add_option("--out", out_file, "Translation table TSV");
  train->add_option("--direction", direction, "fwd (kk->ru) or rev (ru->kk)");
  add_key(train, common, "--iterations", "align.iterations", "EM iterations");
  add_key(train, common, "--diag-weight", "align.diag_weight", "Diagonal prior strength (0 = off)");
  add_key(train, common, "--null-prob", "align.null_prob", "NULL probability with the diagonal prior");
  train->callback([&] { action = [&] { return run_align_train(common, in, out_file, direction); }; });

  auto* apply_cmd = app.add_subcommand("align-apply", "Word-align each pair");
  add_input(apply_cmd, in);
  apply_cmd->add_option("--table", table, "Translation table from align-train");
  apply_cmd->add_option("--similarities", sims, "Similarity matrices instead of a table");
  apply_cmd->add_option("--direction", direction, "fwd or rev (table decoding)");
  add_key(apply_cmd, common, "--method", "augment.sim_method", "argmax or itermax");
  add_key(apply_cmd, common, "--sim-iterations", "augment.sim_iterations", "itermax passes");
  apply_cmd->add_option("--out", out_file, "Pharaoh alignment file");
  apply_cmd->callback([&] {
    action = [&] { return run_align_apply(common, in, table, sims, direction, out_file); };
  });

  std::string fwd_path;
  std::string bwd_path;
  auto* sym = app.add_subcommand("symmetrize", "Combine forward and reverse alignments");
  add_input(sym, in);
  sym->add_option("--forward", fwd_path, "Forward alignments (kk-ru)")->required();
  sym->add_option("--backward", bwd_path, "Reverse alignments (ru-kk)")->required();
  add_key(sym, common, "--heuristic", "augment.heuristic", "intersection, union or gdfa");
  sym->add_option("--out", out_file, "Pharaoh alignment file");
  sym->callback([&] { action = [&] { return run_symmetrize(common, in, fwd_path, bwd_path, out_file); }; });

  std::string align_path;
  auto* mau = app.add_subcommand("extract-mau", "Minimal aligned units per pair (JSONL)");
  add_input(mau, in);
  mau->add_option("--alignments", align_path, "Pharaoh alignment file")->required();
  mau->add_option("--out", out_file, "Output JSONL");
  mau->callback([&] { action = [&] { return run_extract_mau(common, in, align_path, out_file); }; });

  AugmentArgs aug_args;
  auto* aug = app.add_subcommand("augment", "Synthesize code-switched source sentences");
  add_input(aug, in);
  add_output(aug, out);
  add_key(aug, common, "--strategy", "augment.strategy", "cs1 .. cs5");
  add_key(aug, common, "--seed", "augment.seed", "Random seed (required)");
  add_key(aug, common, "--rate", "augment.rate", "Replacement rate");
  add_key(aug, common, "--short-len", "augment.short_len", "Sentences shorter than this get --short-count");
  add_key(aug, common, "--short-count", "augment.short_count", "Replacements in short sentences");
  add_key(aug, common, "--cs3-mode", "augment.cs3_mode", "random_form or cs1_or_cs2");
  add_key(aug, common, "--inherit-case", "augment.inherit_case", "true or false");
  add_key(aug, common, "--heuristic", "augment.heuristic", "Symmetrization for table-based cs4");
  add_key(aug, common, "--method", "augment.sim_method", "argmax or itermax (cs5)");
  add_key(aug, common, "--lexicon", "lexicon.path", "Bilingual lexicon TSV");
  add_key(aug, common, "--kk-suffixes", "lexicon.kk_suffixes", "Kazakh suffix inventory");
  add_key(aug, common, "--ru-suffixes", "lexicon.ru_suffixes", "Russian suffix inventory");
  aug->add_option("--alignments", aug_args.alignments, "Symmetrized alignments (cs4)");
  aug->add_option("--forward-table", aug_args.forward_table, "Forward table (cs4)");
  aug->add_option("--backward-table", aug_args.backward_table, "Reverse table (cs4)");
  aug->add_option("--similarities", aug_args.similarities, "Similarity matrices (cs5)");
  aug->add_option("--plan", aug_args.plan, "Write per-pair replacement plans as JSONL");
  aug->callback([&] { action = [&] { return run_augment(common, in, out, aug_args); }; });

  std::string ref;
  std::vector<std::string> hyps;
  std::string src;
  std::string dataset;
  bool external = false;
  auto* score = app.add_subcommand("score", "BLEU and ChrF++ per system");
  score->add_option("--ref", ref, "Reference file")->required();
  score->add_option("--hyp", hyps, "System output, NAME=FILE or FILE (repeatable)");
  score->add_option("--src", src, "Source file for the external scorer");
  score->add_option("--dataset", dataset, "Dataset label for the report");
  score->add_flag("--external", external, "Also query the external scorer (scorer.* keys)");
  add_key(score, common, "--smoothing", "bleu.smoothing", "none, epsilon or add_k");
  add_key(score, common, "--tokenize", "bleu.tokenize", "none or builtin");
  score->callback([&] { action = [&] { return run_score(common, ref, hyps, src, external, dataset); }; });

  std::vector<std::string> embeddings;
  auto* dom = app.add_subcommand("domain-report", "Centroid distances between embedding sets");
  dom->add_option("embeddings", embeddings, "Embedding files, one per dataset")->required()->expected(2, -1);
  dom->callback([&] { action = [&] { return run_domain_report(common, embeddings); }; });

  std::string input;
  std::string journal;
  auto* tr = app.add_subcommand("translate", "Translate a monolingual file through a service");
  tr->add_option("--input", input, "One sentence per line")->required();
  add_output(tr, out);
  tr->add_option("--journal", journal, "Progress journal (JSONL); resumes when present");
  add_key(tr, common, "--endpoint", "translator.endpoint", "http:// URL");
  add_key(tr, common, "--exchange-dir", "translator.exchange_dir", "File-exchange directory");
  add_key(tr, common, "--batch-size", "translator.batch_size", "Sentences per request");
  add_key(tr, common, "--window", "translator.window", "Requests in flight");
  add_key(tr, common, "--max-retries", "translator.max_retries", "Retries per batch");
  add_key(tr, common, "--src-lang", "translator.src", "Source language tag");
  add_key(tr, common, "--tgt-lang", "translator.tgt", "Target language tag");
  tr->callback([&] { action = [&] { return run_translate(common, input, out, journal); }; });

  auto* lex = app.add_subcommand("lexicon-check", "Report lexicon and suffix inventory issues");
  add_key(lex, common, "--lexicon", "lexicon.path", "Bilingual lexicon TSV");
  add_key(lex, common, "--kk-suffixes", "lexicon.kk_suffixes", "Kazakh suffix inventory");
  add_key(lex, common, "--ru-suffixes", "lexicon.ru_suffixes", "Russian suffix inventory");
  lex->callback([&] { action = [&] { return run_lexicon_check(common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInvalidArgument ? kUsageError : kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace
}  // namespace cswitch

int main(int argc, char** argv) { return cswitch::main_impl(argc, argv); }
