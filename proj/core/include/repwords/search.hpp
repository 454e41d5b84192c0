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

#ifndef REPWORDS_SEARCH_HPP_
#define REPWORDS_SEARCH_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "repwords/repetition.hpp"
#include "repwords/word.hpp"

namespace repwords {

// A factor-closed set of constraints on words: if a word passes, so does
// every factor of it.
struct AvoidancePredicate {
  unsigned alphabet_size = 2;
  // Squares with root length >= this value are violations; nullopt allows
  // squares of every length.
  std::optional<std::size_t> min_forbidden_square_root;
  bool forbid_cubes = false;
  bool forbid_overlaps = false;
  FactorSet forbidden_factors;

  // Full evaluation over every factor of w.
  [[nodiscard]] bool passes(WordView w) const;

  // True when renaming letters maps passing words to passing words, which
  // holds whenever no explicit factors are forbidden.
  [[nodiscard]] bool is_letter_symmetric() const noexcept { return forbidden_factors.empty(); }
};

// Whether w passes p, looking only at violations that end at the last
// letter. Valid when every proper prefix of w passes; otherwise the result
// is unspecified.
bool incremental_violation_check(WordView w, const AvoidancePredicate& p);

enum class Traversal { depth_first, breadth_first, parallel };

struct SearchOptions {
  std::optional<Letter> fix_first;
  std::size_t depth_cap = 64;
  Traversal traversal = Traversal::depth_first;
};

// Summary of the avoidance tree: the root is the empty word (or the fixed
// first letter); a node whose label violates the predicate is a leaf;
// every other node below depth_cap has one child per letter.
struct SearchReport {
  // No passing node sits at depth_cap, so the tree is exhausted.
  bool finite = true;
  std::size_t leaf_count = 0;
  // Length of the longest node label.
  std::size_t height = 0;
  std::size_t nodes_visited = 0;
  // Labels of length `height`, lexicographically sorted.
  std::vector<Word> deepest_words;
  // Longest labels that pass the predicate, lexicographically sorted.
  std::vector<Word> maximal_avoiding;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

// DomainError if depth_cap is 0 or the fixed letter is outside the alphabet.
SearchReport search(const AvoidancePredicate& p, const SearchOptions& options = {});

struct LongestAvoiding {
  std::size_t length = 0;
  std::vector<Word> words;
  // The cap was reached: `length` is only a lower bound and longer passing
  // words exist.
  bool lower_bound = false;
};

LongestAvoiding longest_avoiding(const AvoidancePredicate& p, std::optional<Letter> fix_first,
                                 std::size_t depth_cap);

// Calls `visit` on every passing word of length <= max_length, in
// lexicographic (preorder) order, pruning below violations.
void enumerate_avoiding(const AvoidancePredicate& p, std::size_t max_length,
                        const std::function<void(WordView)>& visit);

}  // namespace repwords

#endif  // REPWORDS_SEARCH_HPP_
