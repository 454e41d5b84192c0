// Copyright 2026 The repwords Authors.
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

#include "repwords/repetition.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "repwords/errors.hpp"

namespace repwords {
namespace {

// Visits every start i such that w[i + j] == w[i + j + p] for j in [0, need),
// i.e. a stretch of period p and length p + need begins at i. Positions are
// visited right to left. Stops early when `visit` returns false; the return
// value says whether the scan ran to completion.
template <typename Visit>
bool scan_period(WordView w, std::size_t p, std::size_t need, Visit&& visit) {
  const std::size_t n = w.size();
  if (p == 0 || p + need > n) return true;
  std::size_t run = 0;
  for (std::size_t j = n - p; j-- > 0;) {
    run = (w[j] == w[j + p]) ? run + 1 : 0;
    if (run >= need && !visit(j)) return false;
  }
  return true;
}

}  // namespace

std::vector<SquareOccurrence> find_squares(WordView w, std::size_t min_root,
                                           std::size_t max_root) {
  std::vector<SquareOccurrence> out;
  const std::size_t hi = std::min(max_root, w.size() / 2);
  for (std::size_t p = std::max<std::size_t>(min_root, 1); p <= hi; ++p) {
    scan_period(w, p, p, [&](std::size_t i) {
      out.push_back({i, p});
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_square(WordView w, std::size_t min_root, std::size_t max_root) {
  const std::size_t hi = std::min(max_root, w.size() / 2);
  for (std::size_t p = std::max<std::size_t>(min_root, 1); p <= hi; ++p) {
    if (!scan_period(w, p, p, [](std::size_t) { return false; })) return true;
  }
  return false;
}

bool is_squarefree(WordView w) { return !has_square(w); }

std::vector<CubeOccurrence> find_cubes(WordView w) {
  std::vector<CubeOccurrence> out;
  for (std::size_t p = 1; 3 * p <= w.size(); ++p) {
    scan_period(w, p, 2 * p, [&](std::size_t i) {
      out.push_back({i, p});
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cubefree(WordView w) {
  for (std::size_t p = 1; 3 * p <= w.size(); ++p) {
    if (!scan_period(w, p, 2 * p, [](std::size_t) { return false; })) return false;
  }
  return true;
}

std::vector<OverlapOccurrence> find_overlaps(WordView w) {
  std::vector<OverlapOccurrence> out;
  for (std::size_t p = 1; 2 * p + 1 <= w.size(); ++p) {
    scan_period(w, p, p + 1, [&](std::size_t i) {
      out.push_back({i, p});
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_overlapfree(WordView w) {
  for (std::size_t p = 1; 2 * p + 1 <= w.size(); ++p) {
    if (!scan_period(w, p, p + 1, [](std::size_t) { return false; })) return false;
  }
  return true;
}

std::size_t max_square_root(WordView w) {
  for (std::size_t p = w.size() / 2; p >= 1; --p) {
    if (!scan_period(w, p, p, [](std::size_t) { return false; })) return p;
  }
  return 0;
}

std::optional<std::size_t> find_factor(WordView w, WordView factor) {
  if (factor.empty()) throw DomainError("factor must be nonempty");
  const auto it = std::search(w.begin(), w.end(), factor.begin(), factor.end());
  if (it == w.end()) return std::nullopt;
  return static_cast<std::size_t>(it - w.begin());
}

bool contains_factor(WordView w, WordView factor) { return find_factor(w, factor).has_value(); }

FactorSet::FactorSet(std::vector<Word> members) : members_(std::move(members)) {
  for (const Word& f : members_) {
    if (f.empty()) throw DomainError("factor sets may not contain the empty word");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

FactorSet FactorSet::parse(std::string_view text, unsigned alphabet_size) {
  std::vector<Word> members;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto is_sep = [](char c) {
      return c == ',' || std::isspace(static_cast<unsigned char>(c));
    };
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) members.push_back(parse_word(text.substr(i, j - i), alphabet_size));
    i = j;
  }
  return FactorSet(std::move(members));
}

std::size_t FactorSet::max_length() const noexcept {
  std::size_t longest = 0;
  for (const Word& f : members_) longest = std::max(longest, f.size());
  return longest;
}

std::optional<FactorHit> first_factor_hit(WordView w, const FactorSet& factors) {
  std::optional<FactorHit> best;
  for (const Word& f : factors.members()) {
    if (auto pos = find_factor(w, f); pos && (!best || *pos < best->position)) {
      best = FactorHit{f, *pos};
    }
  }
  return best;
}

bool avoids_factors(WordView w, const FactorSet& factors) {
  return std::none_of(factors.members().begin(), factors.members().end(),
                      [&](const Word& f) { return contains_factor(w, f); });
}

namespace factor_sets {

const FactorSet& quaternary_pairs() {
  static const FactorSet set = FactorSet::parse("12 13 21 32", 4);
  return set;
}

const FactorSet& quaternary_all() {
  static const FactorSet set = FactorSet::parse("12 13 21 32 231 10302", 4);
  return set;
}

}  // namespace factor_sets

RepetitionReport analyze_repetitions(WordView w, std::size_t min_square_root) {
  RepetitionReport report;
  report.squares = find_squares(w, min_square_root);
  report.cubes = find_cubes(w);
  report.overlaps = find_overlaps(w);
  report.max_square_root = max_square_root(w);
  return report;
}

bool is_square_at(WordView w, const SquareOccurrence& s) {
  const std::size_t p = s.root_length;
  if (p == 0 || s.position + 2 * p > w.size()) return false;
  for (std::size_t j = 0; j < p; ++j) {
    if (w[s.position + j] != w[s.position + p + j]) return false;
  }
  return true;
}

bool is_cube_at(WordView w, const CubeOccurrence& c) {
  const std::size_t p = c.root_length;
  return is_square_at(w, {c.position, p}) && is_square_at(w, {c.position + p, p});
}

bool is_overlap_at(WordView w, const OverlapOccurrence& o) {
  const std::size_t p = o.period;
  return is_square_at(w, {o.position, p}) && o.position + 2 * p < w.size() &&
         w[o.position + 2 * p] == w[o.position];
}

}  // namespace repwords
