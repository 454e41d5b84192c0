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

#ifndef REPWORDS_REPETITION_HPP_
#define REPWORDS_REPETITION_HPP_

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "repwords/word.hpp"

namespace repwords {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// w[position, position + p) == w[position + p, position + 2p), p = root_length.
struct SquareOccurrence {
  std::size_t position = 0;
  std::size_t root_length = 0;
  friend auto operator<=>(const SquareOccurrence&, const SquareOccurrence&) = default;
};

// Three consecutive copies of a root of length root_length.
struct CubeOccurrence {
  std::size_t position = 0;
  std::size_t root_length = 0;
  friend auto operator<=>(const CubeOccurrence&, const CubeOccurrence&) = default;
};

// An overlap axaxa of length 2 * period + 1, where period = |ax|.
struct OverlapOccurrence {
  std::size_t position = 0;
  std::size_t period = 0;
  friend auto operator<=>(const OverlapOccurrence&, const OverlapOccurrence&) = default;
};

// All squares with min_root <= p <= max_root, sorted by (position, root).
// Nested and overlapping occurrences are all reported.
std::vector<SquareOccurrence> find_squares(WordView w, std::size_t min_root = 1,
                                           std::size_t max_root = kUnbounded);
bool has_square(WordView w, std::size_t min_root = 1, std::size_t max_root = kUnbounded);
bool is_squarefree(WordView w);

std::vector<CubeOccurrence> find_cubes(WordView w);
bool is_cubefree(WordView w);

std::vector<OverlapOccurrence> find_overlaps(WordView w);
bool is_overlapfree(WordView w);

// Longest root of any square in w, or 0 when w is squarefree.
std::size_t max_square_root(WordView w);

// First occurrence of `factor` in w. DomainError if `factor` is empty.
std::optional<std::size_t> find_factor(WordView w, WordView factor);
bool contains_factor(WordView w, WordView factor);

// A finite set of nonempty words, kept sorted and deduplicated.
class FactorSet {
 public:
  FactorSet() = default;
  explicit FactorSet(std::vector<Word> members);

  // Comma- or whitespace-separated digit strings, e.g. "12,13,21".
  static FactorSet parse(std::string_view text, unsigned alphabet_size = kMaxAlphabetSize);

  [[nodiscard]] const std::vector<Word>& members() const noexcept { return members_; }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] std::size_t max_length() const noexcept;

  friend bool operator==(const FactorSet&, const FactorSet&) = default;

 private:
  std::vector<Word> members_;
};

// The first member of `factors` occurring in w, with its position.
struct FactorHit {
  Word factor;
  std::size_t position = 0;
};
std::optional<FactorHit> first_factor_hit(WordView w, const FactorSet& factors);
bool avoids_factors(WordView w, const FactorSet& factors);

namespace factor_sets {
// {12, 13, 21, 32}
const FactorSet& quaternary_pairs();
// {12, 13, 21, 32, 231, 10302}
const FactorSet& quaternary_all();
}  // namespace factor_sets

struct RepetitionReport {
  std::vector<SquareOccurrence> squares;
  std::vector<CubeOccurrence> cubes;
  std::vector<OverlapOccurrence> overlaps;
  std::size_t max_square_root = 0;
};

// Squares are restricted to roots >= min_square_root; cubes and overlaps
// are always reported in full. max_square_root is over all squares.
RepetitionReport analyze_repetitions(WordView w, std::size_t min_square_root = 1);

// Direct letter comparisons, independent of the scanners above.
bool is_square_at(WordView w, const SquareOccurrence& s);
bool is_cube_at(WordView w, const CubeOccurrence& c);
bool is_overlap_at(WordView w, const OverlapOccurrence& o);

}  // namespace repwords

#endif  // REPWORDS_REPETITION_HPP_
