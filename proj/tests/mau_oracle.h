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

// Exhaustive minimal-aligned-unit enumeration used as a test oracle.

#ifndef CSWITCH_TESTS_MAU_ORACLE_H_
#define CSWITCH_TESTS_MAU_ORACLE_H_

#include <algorithm>
#include <vector>

#include "cswitch/alignment.h"

namespace cswitch::testing {

// Every contiguous (source span, target span) pair whose words are all aligned
// and whose links stay inside the pair, minus those strictly containing
// another such pair.
inline MauExtraction brute_force_mau(const AlignmentLinkSet& a) {
  const std::size_t rows = a.src_len();
  const std::size_t cols = a.tgt_len();
  std::vector<std::vector<bool>> grid(rows, std::vector<bool>(cols, false));
  std::vector<bool> src_aligned(rows, false);
  std::vector<bool> tgt_aligned(cols, false);
  for (const auto& [i, j] : a.links()) {
    grid[i][j] = true;
    src_aligned[i] = true;
    tgt_aligned[j] = true;
  }
  std::vector<MinimalAlignedUnit> phrases;
  for (std::size_t s0 = 0; s0 < rows; ++s0) {
    for (std::size_t s1 = s0; s1 < rows; ++s1) {
      for (std::size_t t0 = 0; t0 < cols; ++t0) {
        for (std::size_t t1 = t0; t1 < cols; ++t1) {
          bool ok = true;
          for (std::size_t i = s0; i <= s1 && ok; ++i) ok = src_aligned[i];
          for (std::size_t j = t0; j <= t1 && ok; ++j) ok = tgt_aligned[j];
          for (std::size_t i = 0; i < rows && ok; ++i) {
            for (std::size_t j = 0; j < cols && ok; ++j) {
              if (!grid[i][j]) continue;
              const bool in_s = i >= s0 && i <= s1;
              const bool in_t = j >= t0 && j <= t1;
              ok = in_s == in_t;
            }
          }
          if (ok) phrases.push_back({{s0, s1}, {t0, t1}});
        }
      }
    }
  }
  auto inside = [](const MinimalAlignedUnit& in, const MinimalAlignedUnit& out) {
    return in.src.first >= out.src.first && in.src.last <= out.src.last &&
           in.tgt.first >= out.tgt.first && in.tgt.last <= out.tgt.last;
  };
  MauExtraction out;
  for (const auto& p : phrases) {
    const bool minimal = std::none_of(phrases.begin(), phrases.end(),
                                      [&](const auto& q) { return q != p && inside(q, p); });
    if (minimal) out.units.push_back(p);
  }
  std::sort(out.units.begin(), out.units.end());

  // Components by flood fill over the bipartite link graph.
  std::vector<int> src_comp(rows, -1);
  std::vector<int> tgt_comp(cols, -1);
  int n_comp = 0;
  std::vector<MinimalAlignedUnit> boxes;
  for (const auto& [i0, j0] : a.links()) {
    if (src_comp[i0] >= 0) continue;
    MinimalAlignedUnit box{{i0, i0}, {j0, j0}};
    std::vector<std::pair<bool, std::size_t>> stack{{true, i0}};
    src_comp[i0] = n_comp;
    while (!stack.empty()) {
      const auto [is_src, x] = stack.back();
      stack.pop_back();
      if (is_src) {
        box.src.first = std::min(box.src.first, x);
        box.src.last = std::max(box.src.last, x);
        for (std::size_t j = 0; j < cols; ++j) {
          if (grid[x][j] && tgt_comp[j] < 0) {
            tgt_comp[j] = n_comp;
            stack.push_back({false, j});
          }
        }
      } else {
        box.tgt.first = std::min(box.tgt.first, x);
        box.tgt.last = std::max(box.tgt.last, x);
        for (std::size_t i = 0; i < rows; ++i) {
          if (grid[i][x] && src_comp[i] < 0) {
            src_comp[i] = n_comp;
            stack.push_back({true, i});
          }
        }
      }
    }
    boxes.push_back(box);
    ++n_comp;
  }
  for (const auto& b : boxes) {
    if (std::none_of(out.units.begin(), out.units.end(), [&](const auto& u) { return inside(b, u); })) {
      ++out.discarded_components;
    }
  }
  return out;
}

}  // namespace cswitch::testing

#endif  // CSWITCH_TESTS_MAU_ORACLE_H_
