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

#include "cswitch/alignment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "cswitch/error.h"
#include "cswitch/parallel.h"

namespace cswitch {

// ---------------------------------------------------------------------------
// AlignmentLinkSet

AlignmentLinkSet::AlignmentLinkSet(std::size_t src_len, std::size_t tgt_len)
    : src_len_(src_len), tgt_len_(tgt_len) {}

AlignmentLinkSet::AlignmentLinkSet(std::size_t src_len, std::size_t tgt_len,
                                   std::vector<Link> links)
    : src_len_(src_len), tgt_len_(tgt_len) {
  for (const auto& [i, j] : links) add(i, j);
}

void AlignmentLinkSet::add(std::size_t i, std::size_t j) {
  if (i >= src_len_ || j >= tgt_len_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "link " + std::to_string(i) + "-" + std::to_string(j) + " outside " +
                    std::to_string(src_len_) + "x" + std::to_string(tgt_len_));
  }
  const Link link{i, j};
  const auto it = std::lower_bound(links_.begin(), links_.end(), link);
  if (it == links_.end() || *it != link) links_.insert(it, link);
}

bool AlignmentLinkSet::contains(std::size_t i, std::size_t j) const {
  return std::binary_search(links_.begin(), links_.end(), Link{i, j});
}

AlignmentLinkSet AlignmentLinkSet::transposed() const {
  std::vector<Link> flipped;
  flipped.reserve(links_.size());
  for (const auto& [i, j] : links_) flipped.emplace_back(j, i);
  return AlignmentLinkSet(tgt_len_, src_len_, std::move(flipped));
}

std::string to_pharaoh(const AlignmentLinkSet& links) {
  std::string out;
  for (const auto& [i, j] : links.links()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(i);
    out.push_back('-');
    out += std::to_string(j);
  }
  return out;
}

AlignmentLinkSet parse_pharaoh(std::string_view line, std::size_t src_len,
                               std::size_t tgt_len) {
  AlignmentLinkSet links(src_len, tgt_len);
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    const std::string_view item = line.substr(pos, end - pos);
    const auto dash = item.find('-');
    std::size_t i = 0, j = 0;
    const bool ok =
        dash != std::string_view::npos &&
        std::from_chars(item.data(), item.data() + dash, i).ec == std::errc{} &&
        std::from_chars(item.data() + dash + 1, item.data() + item.size(), j).ec ==
            std::errc{};
    if (!ok) {
      throw Error(ErrorCode::kMalformedRow, "bad Pharaoh link '" + std::string(item) + "'");
    }
    links.add(i, j);
    pos = end;
  }
  return links;
}

// ---------------------------------------------------------------------------
// TranslationTable

TranslationTable::TranslationTable() {
  source_words_.emplace_back(kNullToken);
  source_index_.emplace(std::string(kNullToken), kNull);
}

std::uint32_t TranslationTable::source_id(std::string_view word) const {
  const auto it = source_index_.find(std::string(word));
  return it == source_index_.end() ? kUnknown : it->second;
}

std::uint32_t TranslationTable::target_id(std::string_view word) const {
  const auto it = target_index_.find(std::string(word));
  return it == target_index_.end() ? kUnknown : it->second;
}

std::uint32_t TranslationTable::add_source(std::string_view word) {
  const auto [it, inserted] = source_index_.emplace(
      std::string(word), static_cast<std::uint32_t>(source_words_.size()));
  if (inserted) source_words_.emplace_back(word);
  return it->second;
}

std::uint32_t TranslationTable::add_target(std::string_view word) {
  const auto [it, inserted] = target_index_.emplace(
      std::string(word), static_cast<std::uint32_t>(target_words_.size()));
  if (inserted) target_words_.emplace_back(word);
  return it->second;
}

double TranslationTable::prob(std::uint32_t source, std::uint32_t target) const {
  const auto it = probs_.find(key(source, target));
  return it == probs_.end() ? 0.0 : it->second;
}

void TranslationTable::set(std::uint32_t source, std::uint32_t target, double p) {
  probs_[key(source, target)] = p;
}

double TranslationTable::score(std::string_view source, std::string_view target) const {
  const auto s = source_id(source);
  const auto t = target_id(target);
  if (s == kUnknown || t == kUnknown) {
    return 1.0 / static_cast<double>(std::max<std::size_t>(1, target_words_.size()));
  }
  return prob(s, t);
}

double TranslationTable::null_score(std::string_view target) const {
  const auto t = target_id(target);
  if (t == kUnknown) {
    return 1.0 / static_cast<double>(std::max<std::size_t>(1, target_words_.size()));
  }
  return prob(kNull, t);
}

double TranslationTable::row_sum(std::uint32_t source) const {
  double sum = 0.0;
  for (std::uint32_t t = 0; t < target_words_.size(); ++t) sum += prob(source, t);
  return sum;
}

std::string serialize_table(const TranslationTable& table) {
  std::vector<std::tuple<std::string, std::string, double>> rows;
  rows.reserve(table.entries().size());
  for (const auto& [k, p] : table.entries()) {
    rows.emplace_back(table.source_word(static_cast<std::uint32_t>(k >> 32)),
                      table.target_word(static_cast<std::uint32_t>(k & 0xFFFFFFFFu)), p);
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out.precision(17);
  out << "# iterations=" << table.trained_iterations << " diag_weight=" << table.diag_weight
      << " null_prob=" << table.null_prob << '\n';
  for (const auto& [s, t, p] : rows) out << s << '\t' << t << '\t' << p << '\n';
  return out.str();
}

TranslationTable parse_table(std::string_view tsv) {
  TranslationTable table;
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream header(line.substr(1));
      std::string field;
      while (header >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string name = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (name == "iterations") table.trained_iterations = std::stoi(value);
        if (name == "diag_weight") table.diag_weight = std::stod(value);
        if (name == "null_prob") table.null_prob = std::stod(value);
      }
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedRow,
                  "translation table line " + std::to_string(line_no) + ": expected 3 columns");
    }
    const std::string src = line.substr(0, t1);
    const std::string tgt = line.substr(t1 + 1, t2 - t1 - 1);
    double p = 0.0;
    try {
      p = std::stod(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedRow,
                  "translation table line " + std::to_string(line_no) + ": bad probability");
    }
    const auto s = src == TranslationTable::kNullToken ? TranslationTable::kNull
                                                       : table.add_source(src);
    table.set(s, table.add_target(tgt), p);
  }
  return table;
}

void save_table(const TranslationTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << serialize_table(table);
}

TranslationTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

// ---------------------------------------------------------------------------
// EM training

namespace {

constexpr std::size_t kChunkPairs = 512;

struct EncodedPair {
  std::vector<std::uint32_t> source;  // without NULL
  std::vector<std::uint32_t> target;
};

// Alignment prior for source position i (0 = NULL, 1..l real words) given
// target position j of m. Uniform when diag_weight is 0.
class AlignmentPrior {
 public:
  AlignmentPrior(double diag_weight, double null_prob)
      : diag_weight_(diag_weight), null_prob_(null_prob) {}

  void fill(std::size_t j, std::size_t m, std::size_t l, std::vector<double>& out) const {
    out.assign(l + 1, 0.0);
    if (diag_weight_ <= 0.0) {
      std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(l + 1));
      return;
    }
    out[0] = null_prob_;
    double z = 0.0;
    const double tpos = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
    for (std::size_t i = 1; i <= l; ++i) {
      const double spos = (static_cast<double>(i) - 0.5) / static_cast<double>(l);
      out[i] = std::exp(-diag_weight_ * std::abs(spos - tpos));
      z += out[i];
    }
    for (std::size_t i = 1; i <= l; ++i) out[i] *= (1.0 - null_prob_) / z;
  }

 private:
  double diag_weight_;
  double null_prob_;
};

// Row-compressed t(target | source) over co-occurring pairs only.
struct SparseTable {
  std::vector<std::size_t> offsets;    // per source id, size V_s + 1
  std::vector<std::uint32_t> targets;  // sorted within each row
  std::vector<double> probs;

  std::size_t index(std::uint32_t s, std::uint32_t t) const {
    const auto begin = targets.begin() + static_cast<std::ptrdiff_t>(offsets[s]);
    const auto end = targets.begin() + static_cast<std::ptrdiff_t>(offsets[s + 1]);
    return static_cast<std::size_t>(std::lower_bound(begin, end, t) - targets.begin());
  }
};

}  // namespace

TrainResult train_ibm1(const Corpus& corpus, const TrainOptions& options) {
  if (corpus.kind != CorpusKind::kParallel || corpus.pairs.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "alignment training needs a non-empty parallel corpus");
  }
  if (options.iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  }
  TrainResult result;
  TranslationTable& table = result.table;
  table.diag_weight = options.diag_weight;
  table.null_prob = options.null_prob;
  const bool forward = options.direction == Direction::kForward;

  std::vector<EncodedPair> encoded;
  encoded.reserve(corpus.pairs.size());
  for (const auto& pair : corpus.pairs) {
    const Sentence& src = forward ? pair.source : pair.target;
    const Sentence& tgt = forward ? pair.target : pair.source;
    EncodedPair e;
    for (const auto& t : src.tokens) e.source.push_back(table.add_source(t.surface));
    for (const auto& t : tgt.tokens) e.target.push_back(table.add_target(t.surface));
    encoded.push_back(std::move(e));
  }

  // Co-occurrence structure; NULL co-occurs with every target.
  const std::size_t vs = table.source_vocab_size();
  std::vector<std::vector<std::uint32_t>> cooc(vs);
  for (const auto& e : encoded) {
    if (e.target.empty()) continue;
    cooc[TranslationTable::kNull].insert(cooc[TranslationTable::kNull].end(), e.target.begin(),
                                         e.target.end());
    for (auto s : e.source) cooc[s].insert(cooc[s].end(), e.target.begin(), e.target.end());
  }
  SparseTable sparse;
  sparse.offsets.assign(vs + 1, 0);
  for (std::size_t s = 0; s < vs; ++s) {
    auto& row = cooc[s];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    sparse.offsets[s + 1] = sparse.offsets[s] + row.size();
    sparse.targets.insert(sparse.targets.end(), row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k) {
      sparse.probs.push_back(1.0 / static_cast<double>(row.size()));
    }
    std::vector<std::uint32_t>().swap(row);
  }

  // Per-pair parameter indices, resolved once.
  std::vector<std::vector<std::size_t>> param_index(encoded.size());
  for (std::size_t p = 0; p < encoded.size(); ++p) {
    const auto& e = encoded[p];
    auto& idx = param_index[p];
    idx.reserve((e.source.size() + 1) * e.target.size());
    for (auto t : e.target) {
      idx.push_back(sparse.index(TranslationTable::kNull, t));
      for (auto s : e.source) idx.push_back(sparse.index(s, t));
    }
  }

  const AlignmentPrior prior(options.diag_weight, options.null_prob);
  const std::size_t n_chunks = (encoded.size() + kChunkPairs - 1) / kChunkPairs;

  struct ChunkStats {
    std::unordered_map<std::size_t, double> counts;
    double log_likelihood = 0.0;
  };

  auto e_step = [&](bool collect) {
    std::vector<ChunkStats> chunks(n_chunks);
    parallel_for(n_chunks, options.jobs, [&](std::size_t cb, std::size_t ce) {
      std::vector<double> a;
      std::vector<double> post;
      for (std::size_t c = cb; c < ce; ++c) {
        auto& stats = chunks[c];
        const std::size_t end = std::min(encoded.size(), (c + 1) * kChunkPairs);
        for (std::size_t p = c * kChunkPairs; p < end; ++p) {
          const auto& e = encoded[p];
          const std::size_t l = e.source.size();
          const std::size_t m = e.target.size();
          const auto& idx = param_index[p];
          for (std::size_t j = 0; j < m; ++j) {
            prior.fill(j, m, l, a);
            post.assign(l + 1, 0.0);
            double denom = 0.0;
            for (std::size_t i = 0; i <= l; ++i) {
              post[i] = a[i] * sparse.probs[idx[j * (l + 1) + i]];
              denom += post[i];
            }
            stats.log_likelihood += std::log(denom);
            if (!collect) continue;
            for (std::size_t i = 0; i <= l; ++i) {
              stats.counts[idx[j * (l + 1) + i]] += post[i] / denom;
            }
          }
        }
      }
    });
    return chunks;
  };

  std::vector<double> counts(sparse.probs.size());
  for (int iter = 0; iter < options.iterations; ++iter) {
    auto chunks = e_step(true);
    std::fill(counts.begin(), counts.end(), 0.0);
    double ll = 0.0;
    // Chunk-ordered reduction keeps the result independent of the job count.
    for (const auto& chunk : chunks) {
      ll += chunk.log_likelihood;
      for (const auto& [k, v] : chunk.counts) counts[k] += v;
    }
    result.log_likelihood.push_back(ll);
    for (std::size_t s = 0; s < vs; ++s) {
      double total = 0.0;
      for (std::size_t k = sparse.offsets[s]; k < sparse.offsets[s + 1]; ++k) total += counts[k];
      if (total <= 0.0) continue;
      for (std::size_t k = sparse.offsets[s]; k < sparse.offsets[s + 1]; ++k) {
        sparse.probs[k] = counts[k] / total;
      }
    }
  }
  {
    double ll = 0.0;
    for (const auto& chunk : e_step(false)) ll += chunk.log_likelihood;
    result.log_likelihood.push_back(ll);
  }

  for (std::size_t s = 0; s < vs; ++s) {
    for (std::size_t k = sparse.offsets[s]; k < sparse.offsets[s + 1]; ++k) {
      table.set(static_cast<std::uint32_t>(s), sparse.targets[k], sparse.probs[k]);
    }
  }
  table.trained_iterations = options.iterations;
  return result;
}

// ---------------------------------------------------------------------------
// Decoding

AlignmentLinkSet viterbi_align(const SentencePair& pair, const TranslationTable& table,
                               Direction direction) {
  const bool forward = direction == Direction::kForward;
  const Sentence& src = forward ? pair.source : pair.target;
  const Sentence& tgt = forward ? pair.target : pair.source;
  AlignmentLinkSet links(src.size(), tgt.size());
  if (src.size() == 0 || tgt.size() == 0) return links;
  const AlignmentPrior prior(table.diag_weight, table.null_prob);
  std::vector<double> a;
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    prior.fill(j, tgt.size(), src.size(), a);
    const std::string& f = tgt.tokens[j].surface;
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      const double s = a[i + 1] * table.score(src.tokens[i].surface, f);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    const double null_score = a[0] * table.null_score(f);
    if (null_score > best_score) continue;
    links.add(best, j);
  }
  return links;
}

// ---------------------------------------------------------------------------
// Symmetrization

std::string_view heuristic_name(SymmetrizeHeuristic h) {
  switch (h) {
    case SymmetrizeHeuristic::kIntersection: return "intersection";
    case SymmetrizeHeuristic::kUnion: return "union";
    case SymmetrizeHeuristic::kGrowDiagFinalAnd: return "grow-diag-final-and";
  }
  return "";
}

SymmetrizeHeuristic parse_heuristic(std::string_view name) {
  if (name == "intersection" || name == "intersect") return SymmetrizeHeuristic::kIntersection;
  if (name == "union") return SymmetrizeHeuristic::kUnion;
  if (name == "grow-diag-final-and" || name == "gdfa") {
    return SymmetrizeHeuristic::kGrowDiagFinalAnd;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown heuristic '" + std::string(name) + "'");
}

AlignmentLinkSet symmetrize(const AlignmentLinkSet& forward, const AlignmentLinkSet& backward,
                            SymmetrizeHeuristic heuristic) {
  if (forward.src_len() != backward.tgt_len() || forward.tgt_len() != backward.src_len()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "forward is " + std::to_string(forward.src_len()) + "x" +
                    std::to_string(forward.tgt_len()) + ", backward is " +
                    std::to_string(backward.src_len()) + "x" +
                    std::to_string(backward.tgt_len()));
  }
  const AlignmentLinkSet bwd = backward.transposed();
  const std::size_t rows = forward.src_len();
  const std::size_t cols = forward.tgt_len();
  AlignmentLinkSet out(rows, cols);
  if (heuristic == SymmetrizeHeuristic::kUnion) {
    for (const auto& [i, j] : forward.links()) out.add(i, j);
    for (const auto& [i, j] : bwd.links()) out.add(i, j);
    return out;
  }
  for (const auto& [i, j] : forward.links()) {
    if (bwd.contains(i, j)) out.add(i, j);
  }
  if (heuristic == SymmetrizeHeuristic::kIntersection) return out;

  std::vector<char> grid(rows * cols, 0);
  std::vector<char> in_union(rows * cols, 0);
  std::vector<int> src_aligned(rows, 0);
  std::vector<int> tgt_aligned(cols, 0);
  for (const auto& [i, j] : forward.links()) in_union[i * cols + j] = 1;
  for (const auto& [i, j] : bwd.links()) in_union[i * cols + j] = 1;
  auto add_point = [&](std::size_t i, std::size_t j) {
    grid[i * cols + j] = 1;
    ++src_aligned[i];
    ++tgt_aligned[j];
  };
  for (const auto& [i, j] : out.links()) add_point(i, j);

  static constexpr int kNeighbors[8][2] = {{-1, 0}, {0, -1}, {1, 0},  {0, 1},
                                           {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  bool added = true;
  while (added) {
    added = false;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!grid[i * cols + j]) continue;
        for (const auto& d : kNeighbors) {
          const auto ni = static_cast<std::ptrdiff_t>(i) + d[0];
          const auto nj = static_cast<std::ptrdiff_t>(j) + d[1];
          if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(rows) ||
              nj >= static_cast<std::ptrdiff_t>(cols)) {
            continue;
          }
          const auto ui = static_cast<std::size_t>(ni);
          const auto uj = static_cast<std::size_t>(nj);
          if (grid[ui * cols + uj] || !in_union[ui * cols + uj]) continue;
          if (src_aligned[ui] == 0 || tgt_aligned[uj] == 0) {
            add_point(ui, uj);
            added = true;
          }
        }
      }
    }
  }
  auto final_and = [&](const AlignmentLinkSet& directional) {
    for (const auto& [i, j] : directional.links()) {
      if (!grid[i * cols + j] && src_aligned[i] == 0 && tgt_aligned[j] == 0) add_point(i, j);
    }
  };
  final_and(forward);
  final_and(bwd);

  AlignmentLinkSet result(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (grid[i * cols + j]) result.add(i, j);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Similarity matching

std::string_view sim_method_name(SimMethod m) {
  return m == SimMethod::kArgmax ? "argmax" : "itermax";
}

SimMethod parse_sim_method(std::string_view name) {
  if (name == "argmax") return SimMethod::kArgmax;
  if (name == "itermax") return SimMethod::kItermax;
  throw Error(ErrorCode::kInvalidArgument, "unknown similarity method '" + std::string(name) + "'");
}

namespace {

// Mutual argmax over unmasked rows and columns; ties go to the lowest index.
std::vector<AlignmentLinkSet::Link> mutual_argmax(const SimilarityMatrix& m,
                                                  const std::vector<char>& row_masked,
                                                  const std::vector<char>& col_masked) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> row_best(m.rows, kNone);
  std::vector<std::size_t> col_best(m.cols, kNone);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (row_masked[i]) continue;
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (col_masked[j]) continue;
      if (row_best[i] == kNone || m.at(i, j) > m.at(i, row_best[i])) row_best[i] = j;
      if (col_best[j] == kNone || m.at(i, j) > m.at(col_best[j], j)) col_best[j] = i;
    }
  }
  std::vector<AlignmentLinkSet::Link> links;
  for (std::size_t i = 0; i < m.rows; ++i) {
    const std::size_t j = row_best[i];
    if (j != kNone && col_best[j] == i) links.emplace_back(i, j);
  }
  return links;
}

}  // namespace

AlignmentLinkSet sim_align(const SimilarityMatrix& matrix, SimMethod method, int iterations) {
  if (matrix.rows == 0 || matrix.cols == 0) {
    throw Error(ErrorCode::kEmptyMatrix, "similarity matrix has no rows or columns");
  }
  if (matrix.values.size() != matrix.rows * matrix.cols) {
    throw Error(ErrorCode::kDimensionMismatch, "similarity matrix value count does not match shape");
  }
  AlignmentLinkSet out(matrix.rows, matrix.cols);
  std::vector<char> row_masked(matrix.rows, 0);
  std::vector<char> col_masked(matrix.cols, 0);
  const int passes = method == SimMethod::kArgmax ? 1 : std::max(1, iterations);
  for (int pass = 0; pass < passes; ++pass) {
    const auto links = mutual_argmax(matrix, row_masked, col_masked);
    if (links.empty()) break;
    for (const auto& [i, j] : links) {
      out.add(i, j);
      row_masked[i] = 1;
      col_masked[j] = 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal aligned units

MauExtraction extract_mau(const AlignmentLinkSet& alignment) {
  MauExtraction result;
  const std::size_t rows = alignment.src_len();
  const std::size_t cols = alignment.tgt_len();
  if (alignment.empty()) return result;

  std::vector<std::vector<std::size_t>> src_links(rows);
  std::vector<std::vector<std::size_t>> tgt_links(cols);
  for (const auto& [i, j] : alignment.links()) {
    src_links[i].push_back(j);
    tgt_links[j].push_back(i);
  }

  // Union-find over source nodes [0, rows) and target nodes [rows, rows+cols).
  std::vector<std::size_t> parent(rows + cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : alignment.links()) parent[find(i)] = find(rows + j);

  struct Box {
    IndexSpan src;
    IndexSpan tgt;
  };
  std::vector<Box> components;
  std::unordered_map<std::size_t, std::size_t> root_to_component;
  for (const auto& [i, j] : alignment.links()) {
    const std::size_t root = find(i);
    auto [it, inserted] = root_to_component.emplace(root, components.size());
    if (inserted) {
      components.push_back({{i, i}, {j, j}});
      continue;
    }
    auto& box = components[it->second];
    box.src.first = std::min(box.src.first, i);
    box.src.last = std::max(box.src.last, i);
    box.tgt.first = std::min(box.tgt.first, j);
    box.tgt.last = std::max(box.tgt.last, j);
  }

  // Grow each component's bounding box until no link leaves it, then keep
  // it only when every word inside is aligned.
  std::vector<MinimalAlignedUnit> candidates;
  for (auto box : components) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = box.src.first; i <= box.src.last; ++i) {
        for (std::size_t j : src_links[i]) {
          if (j < box.tgt.first) box.tgt.first = j, changed = true;
          if (j > box.tgt.last) box.tgt.last = j, changed = true;
        }
      }
      for (std::size_t j = box.tgt.first; j <= box.tgt.last; ++j) {
        for (std::size_t i : tgt_links[j]) {
          if (i < box.src.first) box.src.first = i, changed = true;
          if (i > box.src.last) box.src.last = i, changed = true;
        }
      }
    }
    bool fully_linked = true;
    for (std::size_t i = box.src.first; i <= box.src.last && fully_linked; ++i) {
      fully_linked = !src_links[i].empty();
    }
    for (std::size_t j = box.tgt.first; j <= box.tgt.last && fully_linked; ++j) {
      fully_linked = !tgt_links[j].empty();
    }
    if (fully_linked) candidates.push_back({box.src, box.tgt});
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto inside = [](const MinimalAlignedUnit& inner, const MinimalAlignedUnit& outer) {
    return inner.src.first >= outer.src.first && inner.src.last <= outer.src.last &&
           inner.tgt.first >= outer.tgt.first && inner.tgt.last <= outer.tgt.last;
  };
  for (const auto& c : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const auto& o) {
      return o != c && inside(o, c);
    });
    if (minimal) result.units.push_back(c);
  }
  for (const auto& box : components) {
    const MinimalAlignedUnit as_unit{box.src, box.tgt};
    const bool covered = std::any_of(result.units.begin(), result.units.end(),
                                     [&](const auto& u) { return inside(as_unit, u); });
    if (!covered) ++result.discarded_components;
  }
  return result;
}

MauExtraction extract_mau(const SentencePair& pair, const AlignmentLinkSet& alignment) {
  if (alignment.src_len() != pair.source.size() || alignment.tgt_len() != pair.target.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "alignment is " + std::to_string(alignment.src_len()) + "x" +
                    std::to_string(alignment.tgt_len()) + " but pair " +
                    std::to_string(pair.id) + " is " + std::to_string(pair.source.size()) +
                    "x" + std::to_string(pair.target.size()));
  }
  return extract_mau(alignment);
}

}  // namespace cswitch
