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

#include <gtest/gtest.h>

#include "cswitch/error.h"
#include "cswitch/rng.h"
#include "mau_oracle.h"

namespace cswitch {
namespace {

using Links = std::vector<AlignmentLinkSet::Link>;

AlignmentLinkSet links(std::size_t rows, std::size_t cols, const Links& l) {
  AlignmentLinkSet out(rows, cols);
  for (const auto& [i, j] : l) out.add(i, j);
  return out;
}

Corpus corpus_of(const std::vector<std::pair<std::string, std::string>>& rows) {
  Corpus c;
  c.kind = CorpusKind::kParallel;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.pairs.push_back(make_pair(rows[i].first, rows[i].second, i));
  }
  return c;
}

Corpus random_corpus(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  const std::vector<std::string> kk = {"бір", "екі", "үш", "төрт", "бес", "алты", "жеті"};
  const std::vector<std::string> ru = {"один", "два", "три", "четыре", "пять", "шесть", "семь"};
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t p = 0; p < n; ++p) {
    std::string s;
    std::string t;
    const auto len = 1 + rng.uniform(6);
    for (std::uint64_t k = 0; k < len; ++k) {
      const auto w = rng.uniform(kk.size());
      s += (k ? " " : "") + kk[w];
      if (rng.uniform(5) != 0) t += (t.empty() ? "" : " ") + ru[w];
      if (rng.uniform(6) == 0) t += (t.empty() ? "" : " ") + ru[rng.uniform(ru.size())];
    }
    if (t.empty()) t = ru[0];
    rows.emplace_back(s, t);
  }
  return corpus_of(rows);
}

double t_of(const TranslationTable& table, const std::string& s, const std::string& t) {
  return table.prob(table.source_id(s), table.target_id(t));
}

TEST(LinkSet, SortedUniqueAndBounded) {
  AlignmentLinkSet a(2, 2);
  a.add(1, 0);
  a.add(0, 1);
  a.add(1, 0);
  EXPECT_EQ(a.links(), (Links{{0, 1}, {1, 0}}));
  try {
    a.add(2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Pharaoh, RoundTrip) {
  const auto a = links(3, 4, {{0, 0}, {1, 2}, {2, 3}});
  EXPECT_EQ(to_pharaoh(a), "0-0 1-2 2-3");
  EXPECT_EQ(parse_pharaoh("0-0 1-2 2-3", 3, 4), a);
  EXPECT_EQ(parse_pharaoh("", 3, 4).size(), 0u);
  EXPECT_THROW(parse_pharaoh("0-9", 3, 4), Error);
  EXPECT_THROW(parse_pharaoh("0:1", 3, 4), Error);
}

// Values below come from an independent dense EM implementation in Python.
TEST(Ibm1, ToyCorpusMatchesOracle) {
  const auto corpus = corpus_of({{"a", "x"}, {"a b", "x y"}});
  TrainOptions opt;
  opt.iterations = 1;
  auto r = train_ibm1(corpus, opt);
  EXPECT_NEAR(t_of(r.table, "a", "x"), 0.714285714286, 1e-9);
  EXPECT_NEAR(t_of(r.table, "b", "y"), 0.5, 1e-9);
  opt.iterations = 2;
  r = train_ibm1(corpus, opt);
  EXPECT_NEAR(t_of(r.table, "a", "x"), 0.765472312704, 1e-9);
  EXPECT_NEAR(t_of(r.table, "b", "y"), 0.642857142857, 1e-9);
  opt.iterations = 20;
  r = train_ibm1(corpus, opt);
  EXPECT_NEAR(t_of(r.table, "a", "x"), 0.979592836525, 1e-9);
  EXPECT_NEAR(t_of(r.table, "b", "y"), 0.999977105225, 1e-9);
  EXPECT_NEAR(r.table.null_score("x"), 0.979592836525, 1e-9);
}

TEST(Ibm1, LogLikelihoodMatchesOracle) {
  TrainOptions opt;
  opt.iterations = 5;
  const auto r = train_ibm1(corpus_of({{"a", "x"}, {"a b", "x y"}}), opt);
  const std::vector<double> expected = {-2.0794415416798357, -1.8079244060814101,
                                        -1.7228408866573193, -1.6580061032483626,
                                        -1.6107884559535632, -1.5772747374863128};
  ASSERT_EQ(r.log_likelihood.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(r.log_likelihood[i], expected[i], 1e-12) << i;
  }
}

TEST(Ibm1, SingleWordPair) {
  TrainOptions opt;
  opt.iterations = 1;
  const auto r = train_ibm1(corpus_of({{"a", "x"}}), opt);
  EXPECT_DOUBLE_EQ(t_of(r.table, "a", "x"), 1.0);
}

TEST(Ibm1, RowsNormalized) {
  TrainOptions opt;
  opt.iterations = 4;
  const auto r = train_ibm1(random_corpus(1, 50), opt);
  for (std::uint32_t s = 0; s < r.table.source_vocab_size(); ++s) {
    EXPECT_NEAR(r.table.row_sum(s), 1.0, 1e-9) << r.table.source_word(s);
  }
}

TEST(Ibm1, LogLikelihoodNonDecreasing) {
  for (double diag : {0.0, 4.0}) {
    TrainOptions opt;
    opt.iterations = 15;
    opt.diag_weight = diag;
    const auto r = train_ibm1(random_corpus(2, 50), opt);
    for (std::size_t i = 1; i < r.log_likelihood.size(); ++i) {
      EXPECT_GE(r.log_likelihood[i], r.log_likelihood[i - 1] - 1e-9) << "diag " << diag << " it " << i;
    }
  }
}

TEST(Ibm1, JobCountDoesNotChangeTable) {
  const auto corpus = random_corpus(3, 3000);
  TrainOptions opt;
  opt.iterations = 3;
  opt.jobs = 1;
  const auto a = train_ibm1(corpus, opt);
  opt.jobs = 4;
  const auto b = train_ibm1(corpus, opt);
  EXPECT_EQ(serialize_table(a.table), serialize_table(b.table));
  EXPECT_EQ(a.log_likelihood, b.log_likelihood);
}

TEST(Ibm1, EmptyCorpus) {
  try {
    train_ibm1(Corpus{}, TrainOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(Table, SerializeRoundTrip) {
  TrainOptions opt;
  opt.iterations = 3;
  opt.diag_weight = 2.0;
  const auto r = train_ibm1(random_corpus(4, 40), opt);
  const auto text = serialize_table(r.table);
  const auto back = parse_table(text);
  EXPECT_EQ(serialize_table(back), text);
  EXPECT_DOUBLE_EQ(back.diag_weight, 2.0);
  EXPECT_EQ(back.trained_iterations, 3);
}

TEST(Viterbi, ToyTable) {
  const auto corpus = corpus_of({{"a", "x"}, {"a b", "x y"}});
  TrainOptions opt;
  opt.iterations = 20;
  const auto r = train_ibm1(corpus, opt);
  EXPECT_EQ(viterbi_align(corpus.pairs[1], r.table, Direction::kForward).links(),
            (Links{{0, 0}, {1, 1}}));
}

TEST(Viterbi, UnseenWordsTieToLowestIndex) {
  const auto r = train_ibm1(corpus_of({{"a", "x"}}), TrainOptions{});
  const auto pair = make_pair("p q r", "u v", 0);
  EXPECT_EQ(viterbi_align(pair, r.table, Direction::kForward).links(), (Links{{0, 0}, {0, 1}}));
}

TEST(Viterbi, EmptyTarget) {
  const auto r = train_ibm1(corpus_of({{"a", "x"}}), TrainOptions{});
  EXPECT_TRUE(viterbi_align(make_pair("a", "", 0), r.table, Direction::kForward).empty());
}

TEST(Viterbi, ReverseIndexesRussianFirst) {
  const auto corpus = corpus_of({{"a", "x"}, {"a b", "x y"}, {"b", "y"}});
  TrainOptions opt;
  opt.iterations = 10;
  opt.direction = Direction::kReverse;
  const auto r = train_ibm1(corpus, opt);
  const auto rev = viterbi_align(make_pair("b a", "x y", 0), r.table, Direction::kReverse);
  EXPECT_EQ(rev.src_len(), 2u);
  EXPECT_EQ(rev.links(), (Links{{0, 1}, {1, 0}}));
}

TEST(Symmetrize, Intersection) {
  const auto fwd = links(2, 3, {{0, 0}, {1, 1}});
  const auto bwd = links(3, 2, {{0, 0}, {2, 1}});
  EXPECT_EQ(symmetrize(fwd, bwd, SymmetrizeHeuristic::kIntersection).links(), (Links{{0, 0}}));
  EXPECT_EQ(symmetrize(fwd, bwd, SymmetrizeHeuristic::kUnion).links(),
            (Links{{0, 0}, {1, 1}, {1, 2}}));
}

TEST(Symmetrize, AgreeingInputsAreFixedPoints) {
  const auto fwd = links(3, 3, {{0, 1}, {1, 0}, {2, 2}});
  for (auto h : {SymmetrizeHeuristic::kIntersection, SymmetrizeHeuristic::kUnion,
                 SymmetrizeHeuristic::kGrowDiagFinalAnd}) {
    EXPECT_EQ(symmetrize(fwd, fwd.transposed(), h), fwd);
  }
}

// Intersection {(0,0),(2,2)}; (1,1) neighbours (0,0) diagonally and both of
// its words are unaligned, so grow-diag adopts it.
TEST(Symmetrize, GrowDiagAdoptsDiagonalNeighbour) {
  const auto fwd = links(3, 3, {{0, 0}, {2, 2}});
  const auto bwd = links(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  EXPECT_EQ(symmetrize(fwd, bwd, SymmetrizeHeuristic::kGrowDiagFinalAnd).links(),
            (Links{{0, 0}, {1, 1}, {2, 2}}));
}

// (0,1) touches (0,0) but both of its words are already aligned.
TEST(Symmetrize, GrowDiagRejectsPointBetweenAlignedWords) {
  const auto fwd = links(2, 2, {{0, 0}, {1, 1}});
  const auto bwd = links(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(symmetrize(fwd, bwd, SymmetrizeHeuristic::kGrowDiagFinalAnd).links(),
            (Links{{0, 0}, {1, 1}}));
}

TEST(Symmetrize, FinalAndNeedsBothWordsUnaligned) {
  // (2,2) is isolated from the intersection; both words unaligned -> kept.
  // (1,2) would attach target 2 again after that and is dropped.
  const auto fwd = links(3, 3, {{0, 0}, {2, 2}});
  const auto bwd = links(3, 3, {{0, 0}, {2, 1}});
  const auto out = symmetrize(fwd, bwd.transposed(), SymmetrizeHeuristic::kGrowDiagFinalAnd);
  EXPECT_TRUE(out.contains(0, 0));
  for (const auto& [i, j] : out.links()) {
    const auto u = symmetrize(fwd, bwd.transposed(), SymmetrizeHeuristic::kUnion);
    EXPECT_TRUE(u.contains(i, j));
  }
}

TEST(Symmetrize, ResultWithinUnionRandomized) {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rows = 1 + rng.uniform(6);
    const auto cols = 1 + rng.uniform(6);
    AlignmentLinkSet f(rows, cols);
    AlignmentLinkSet b(cols, rows);
    for (std::size_t k = 0; k < rows + cols; ++k) {
      f.add(rng.uniform(rows), rng.uniform(cols));
      b.add(rng.uniform(cols), rng.uniform(rows));
    }
    const auto u = symmetrize(f, b, SymmetrizeHeuristic::kUnion);
    const auto in = symmetrize(f, b, SymmetrizeHeuristic::kIntersection);
    const auto g = symmetrize(f, b, SymmetrizeHeuristic::kGrowDiagFinalAnd);
    for (const auto& [i, j] : g.links()) ASSERT_TRUE(u.contains(i, j));
    for (const auto& [i, j] : in.links()) ASSERT_TRUE(g.contains(i, j));
  }
}

TEST(Symmetrize, DimensionMismatch) {
  EXPECT_THROW(symmetrize(links(2, 3, {}), links(2, 3, {}), SymmetrizeHeuristic::kUnion), Error);
}

SimilarityMatrix matrix(std::size_t rows, std::size_t cols, std::vector<double> v) {
  return {rows, cols, std::move(v)};
}

TEST(SimAlign, Examples) {
  EXPECT_EQ(sim_align(matrix(2, 2, {0.9, 0.1, 0.2, 0.8}), SimMethod::kArgmax).links(),
            (Links{{0, 0}, {1, 1}}));
  EXPECT_EQ(sim_align(matrix(2, 2, {0.9, 0.8, 0.85, 0.7}), SimMethod::kArgmax).links(),
            (Links{{0, 0}}));
  EXPECT_EQ(sim_align(matrix(2, 2, {0.9, 0.8, 0.85, 0.7}), SimMethod::kItermax, 2).links(),
            (Links{{0, 0}, {1, 1}}));
}

TEST(SimAlign, Errors) {
  EXPECT_THROW(sim_align(matrix(0, 0, {}), SimMethod::kArgmax), Error);
  EXPECT_THROW(sim_align(matrix(2, 2, {0.1}), SimMethod::kArgmax), Error);
}

TEST(SimAlign, TiesGoToLowestIndex) {
  EXPECT_EQ(sim_align(matrix(2, 2, {0.5, 0.5, 0.5, 0.5}), SimMethod::kArgmax).links(),
            (Links{{0, 0}}));
}

TEST(Mau, Examples) {
  const auto m = extract_mau(links(2, 3, {{0, 0}, {1, 1}, {1, 2}}));
  ASSERT_EQ(m.units.size(), 2u);
  EXPECT_EQ(m.units[0], (MinimalAlignedUnit{{0, 0}, {0, 0}}));
  EXPECT_EQ(m.units[1], (MinimalAlignedUnit{{1, 1}, {1, 2}}));
  EXPECT_TRUE(extract_mau(links(3, 3, {})).units.empty());
}

// Two crossing links form two separate components; each is its own unit.
TEST(Mau, CrossingLinksGiveTwoUnits) {
  const auto m = extract_mau(links(2, 2, {{0, 1}, {1, 0}}));
  ASSERT_EQ(m.units.size(), 2u);
  EXPECT_EQ(m.units[0], (MinimalAlignedUnit{{0, 0}, {1, 1}}));
  EXPECT_EQ(m.units[1], (MinimalAlignedUnit{{1, 1}, {0, 0}}));
}

TEST(Mau, GapInsideComponentIsDiscarded) {
  // Source 0 links to targets 0 and 2; target 1 is unaligned.
  const auto m = extract_mau(links(2, 3, {{0, 0}, {0, 2}, {1, 1}}));
  EXPECT_EQ(m.units, (std::vector<MinimalAlignedUnit>{{{1, 1}, {1, 1}}}));
  EXPECT_EQ(m.discarded_components, 1u);
}

TEST(Mau, MatchesBruteForceOnRandomGrids) {
  Rng rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto rows = 1 + rng.uniform(5);
    const auto cols = 1 + rng.uniform(5);
    AlignmentLinkSet a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (rng.uniform(3) == 0) a.add(i, j);
      }
    }
    const auto got = extract_mau(a);
    const auto want = testing::brute_force_mau(a);
    ASSERT_EQ(got.units, want.units) << to_pharaoh(a);
    ASSERT_EQ(got.discarded_components, want.discarded_components) << to_pharaoh(a);
  }
}

TEST(Mau, PairDimensionsChecked) {
  const auto pair = make_pair("a b", "x", 0);
  EXPECT_THROW(extract_mau(pair, links(3, 1, {{0, 0}})), Error);
}

}  // namespace
}  // namespace cswitch
