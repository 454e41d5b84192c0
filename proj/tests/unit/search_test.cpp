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

#include "repwords/search.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "repwords/errors.hpp"

namespace repwords {
namespace {

AvoidancePredicate cubes_and_long_squares(std::size_t min_root) {
  AvoidancePredicate p;
  p.alphabet_size = 2;
  p.forbid_cubes = true;
  p.min_forbidden_square_root = min_root;
  return p;
}

AvoidancePredicate squarefree(unsigned k) {
  AvoidancePredicate p;
  p.alphabet_size = k;
  p.min_forbidden_square_root = 1;
  return p;
}

AvoidancePredicate overlapfree_short_squares(std::size_t min_root) {
  AvoidancePredicate p;
  p.alphabet_size = 2;
  p.forbid_overlaps = true;
  p.min_forbidden_square_root = min_root;
  return p;
}

// Full-scan predicate over strings, sharing nothing with the library.
bool oracle_passes(const std::string& w, const AvoidancePredicate& p) {
  if (p.min_forbidden_square_root) {
    for (const auto& [i, root] : oracle::squares(w)) {
      if (root >= *p.min_forbidden_square_root) return false;
    }
  }
  if (p.forbid_cubes && !oracle::cubes(w).empty()) return false;
  if (p.forbid_overlaps && !oracle::overlaps(w).empty()) return false;
  for (const Word& f : p.forbidden_factors.members()) {
    if (w.find(format_word(f)) != std::string::npos) return false;
  }
  return true;
}

TEST(SearchTest, CubesAndSquaresWithRootAtLeastThree) {
  const SearchReport r = search(cubes_and_long_squares(3), {0, 40, Traversal::depth_first});
  EXPECT_TRUE(r.finite);
  EXPECT_EQ(r.leaf_count, 289u);
  EXPECT_EQ(r.height, 30u);
  ASSERT_EQ(r.maximal_avoiding.size(), 1u);
  EXPECT_EQ(format_word(r.maximal_avoiding.front()), "00110010100110101100101001100");
  for (const Word& w : r.deepest_words) EXPECT_EQ(w.size(), 30u);
}

TEST(SearchTest, BinarySquaresAreUnavoidableFromLengthFour) {
  for (const std::optional<Letter> first : {std::optional<Letter>{}, std::optional<Letter>{0}}) {
    const SearchReport r = search(squarefree(2), {first, 10, Traversal::depth_first});
    EXPECT_TRUE(r.finite);
    EXPECT_EQ(r.height, 4u);
    for (const Word& w : r.maximal_avoiding) EXPECT_EQ(w.size(), 3u);
  }
}

TEST(SearchTest, CapReachedMeansPartialReport) {
  const SearchReport r = search(cubes_and_long_squares(4), {0, 24, Traversal::depth_first});
  EXPECT_FALSE(r.finite);
  EXPECT_EQ(r.height, 24u);
  ASSERT_FALSE(r.maximal_avoiding.empty());
  EXPECT_EQ(r.maximal_avoiding.front().size(), 24u);
  // Squarefree words over three letters never run out either.
  EXPECT_FALSE(search(squarefree(3), {std::nullopt, 30, Traversal::depth_first}).finite);
}

TEST(SearchTest, RootThatAlreadyFails) {
  AvoidancePredicate p;
  p.alphabet_size = 2;
  p.forbidden_factors = FactorSet::parse("1", 2);
  const SearchReport r = search(p, {1, 5, Traversal::depth_first});
  EXPECT_TRUE(r.finite);
  EXPECT_EQ(r.leaf_count, 1u);
  EXPECT_EQ(r.nodes_visited, 1u);
  EXPECT_EQ(r.height, 1u);
  EXPECT_TRUE(r.maximal_avoiding.empty());
}

TEST(SearchTest, RejectsBadOptions) {
  EXPECT_THROW(search(squarefree(2), {std::nullopt, 0, Traversal::depth_first}), DomainError);
  EXPECT_THROW(search(squarefree(2), {2, 10, Traversal::depth_first}), DomainError);
  AvoidancePredicate p = squarefree(2);
  p.alphabet_size = 0;
  EXPECT_THROW(search(p), DomainError);
}

TEST(IncrementalCheckTest, Examples) {
  EXPECT_FALSE(incremental_violation_check(parse_word("00"), squarefree(2)));
  EXPECT_TRUE(incremental_violation_check(parse_word("001100101"), cubes_and_long_squares(3)));
  EXPECT_TRUE(cubes_and_long_squares(3).passes(parse_word("001100101")));
  AvoidancePredicate cubes;
  cubes.forbid_cubes = true;
  EXPECT_FALSE(incremental_violation_check(parse_word("000"), cubes));
  EXPECT_TRUE(incremental_violation_check(Word(), cubes));
}

// On every node of several small trees, the suffix-only check equals a
// from-scratch evaluation.
TEST(IncrementalCheckTest, AgreesWithFullEvaluationOnEveryNode) {
  AvoidancePredicate with_factors = squarefree(4);
  with_factors.forbidden_factors = factor_sets::quaternary_all();
  const std::vector<AvoidancePredicate> predicates{
      cubes_and_long_squares(3), cubes_and_long_squares(4), overlapfree_short_squares(2),
      squarefree(3), with_factors};
  for (const AvoidancePredicate& p : predicates) {
    std::size_t nodes = 0;
    enumerate_avoiding(p, p.alphabet_size == 2 ? 16 : 9, [&](WordView parent) {
      for (unsigned a = 0; a < p.alphabet_size; ++a) {
        std::vector<Letter> child(parent.begin(), parent.end());
        child.push_back(static_cast<Letter>(a));
        const bool incremental = incremental_violation_check(child, p);
        ASSERT_EQ(incremental, p.passes(child));
        ASSERT_EQ(incremental, oracle_passes(format_word(child), p));
        ++nodes;
      }
    });
    EXPECT_GT(nodes, 0u);
  }
}

TEST(SearchPropertyTest, TraversalOrderIndependence) {
  AvoidancePredicate with_factors = squarefree(4);
  with_factors.forbidden_factors = factor_sets::quaternary_pairs();
  const std::vector<std::pair<AvoidancePredicate, SearchOptions>> cases{
      {cubes_and_long_squares(3), {0, 40, Traversal::depth_first}},
      {cubes_and_long_squares(3), {std::nullopt, 40, Traversal::depth_first}},
      {cubes_and_long_squares(4), {0, 22, Traversal::depth_first}},
      {overlapfree_short_squares(2), {std::nullopt, 20, Traversal::depth_first}},
      {with_factors, {std::nullopt, 12, Traversal::depth_first}},
      {squarefree(2), {std::nullopt, 3, Traversal::depth_first}},
  };
  for (const auto& [p, options] : cases) {
    const SearchReport dfs = search(p, options);
    SearchOptions bfs_options = options;
    bfs_options.traversal = Traversal::breadth_first;
    SearchOptions parallel_options = options;
    parallel_options.traversal = Traversal::parallel;
    EXPECT_EQ(search(p, bfs_options), dfs);
    EXPECT_EQ(search(p, parallel_options), dfs);
  }
}

TEST(SearchPropertyTest, SymmetryFactorForComplementSymmetricPredicates) {
  for (const AvoidancePredicate& p :
       {cubes_and_long_squares(3), squarefree(2), overlapfree_short_squares(2),
        cubes_and_long_squares(2)}) {
    ASSERT_TRUE(p.is_letter_symmetric());
    const SearchReport fixed = search(p, {0, 64, Traversal::depth_first});
    const SearchReport unfixed = search(p, {std::nullopt, 64, Traversal::depth_first});
    EXPECT_EQ(unfixed.leaf_count, 2 * fixed.leaf_count);
    EXPECT_EQ(unfixed.height, fixed.height);
  }
}

TEST(SearchPropertyTest, FailedNodesHaveNoPassingExtensions) {
  const AvoidancePredicate p = cubes_and_long_squares(3);
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> bit(0, 1);
  const SearchReport r = search(p, {0, 40, Traversal::depth_first});
  std::size_t failed_seen = 0;
  enumerate_avoiding(p, 29, [&](WordView parent) {
    for (Letter a = 0; a < 2; ++a) {
      std::vector<Letter> child(parent.begin(), parent.end());
      child.push_back(a);
      if (p.passes(child)) continue;
      ++failed_seen;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Letter> longer = child;
        for (int i = 0; i < 5; ++i) longer.push_back(static_cast<Letter>(bit(rng)));
        ASSERT_FALSE(p.passes(longer));
      }
    }
  });
  EXPECT_EQ(failed_seen, 2 * r.leaf_count);
}

TEST(SearchPropertyTest, MaximalAvoidingWordsCannotBeExtended) {
  const AvoidancePredicate p = overlapfree_short_squares(2);
  const SearchReport r = search(p, {std::nullopt, 64, Traversal::depth_first});
  ASSERT_TRUE(r.finite);
  for (const Word& w : r.maximal_avoiding) {
    EXPECT_TRUE(p.passes(w));
    for (Letter a = 0; a < 2; ++a) {
      Word longer = w;
      longer.push_back(a);
      EXPECT_FALSE(p.passes(longer));
    }
  }
  EXPECT_TRUE(std::is_sorted(r.maximal_avoiding.begin(), r.maximal_avoiding.end()));
  EXPECT_TRUE(std::is_sorted(r.deepest_words.begin(), r.deepest_words.end()));
}

TEST(LongestAvoidingTest, CubesAndSquaresWithRootAtLeastThree) {
  const LongestAvoiding l = longest_avoiding(cubes_and_long_squares(3), 0, 64);
  EXPECT_FALSE(l.lower_bound);
  EXPECT_EQ(l.length, 29u);
  ASSERT_EQ(l.words.size(), 1u);
  EXPECT_EQ(format_word(l.words.front()), "00110010100110101100101001100");
}

// Overlap-free words whose squares all have root 1: compare with plain
// enumeration of every binary word up to a safe length.
TEST(LongestAvoidingTest, OverlapFreeWithShortSquaresMatchesBruteForce) {
  const AvoidancePredicate p = overlapfree_short_squares(2);
  std::size_t best = 0;
  std::vector<std::string> best_words;
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const std::string& w : oracle::all_words(n, 2)) {
      if (!oracle_passes(w, p)) continue;
      if (w.size() > best) {
        best = w.size();
        best_words.clear();
      }
      best_words.push_back(w);
    }
  }
  ASSERT_LT(best, 14u);
  const LongestAvoiding l = longest_avoiding(p, std::nullopt, 64);
  EXPECT_FALSE(l.lower_bound);
  EXPECT_EQ(l.length, best);
  std::vector<std::string> got;
  for (const Word& w : l.words) got.push_back(format_word(w));
  EXPECT_EQ(got, best_words);
}

TEST(LongestAvoidingTest, InfiniteWithinCapIsFlagged) {
  const LongestAvoiding l = longest_avoiding(cubes_and_long_squares(4), 0, 40);
  EXPECT_TRUE(l.lower_bound);
  EXPECT_EQ(l.length, 40u);
}

TEST(EnumerateAvoidingTest, VisitsPassingWordsInLexicographicOrder) {
  std::vector<std::string> seen;
  enumerate_avoiding(squarefree(2), 5, [&](WordView w) { seen.push_back(format_word(w)); });
  EXPECT_EQ(seen, (std::vector<std::string>{"", "0", "01", "010", "1", "10", "101"}));
}

}  // namespace
}  // namespace repwords
