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
#include <atomic>
#include <deque>
#include <string>
#include <thread>
#include <utility>

#include "repwords/errors.hpp"

namespace repwords {
namespace {

using Label = std::vector<Letter>;

bool suffix_has_period(WordView w, std::size_t length, std::size_t period) {
  const std::size_t n = w.size();
  for (std::size_t j = n - length; j + period < n; ++j) {
    if (w[j] != w[j + period]) return false;
  }
  return true;
}

// Running totals for one traversal (or one subtree of a parallel one).
class Tally {
 public:
  void leaf(const Label& label) {
    ++leaf_count_;
    node(label);
  }

  void passing(const Label& label, bool at_cap) {
    node(label);
    if (at_cap) finite_ = false;
    if (!any_passing_ || label.size() > avoiding_length_) {
      any_passing_ = true;
      avoiding_length_ = label.size();
      maximal_avoiding_.clear();
    }
    if (label.size() == avoiding_length_) maximal_avoiding_.push_back(label);
  }

  void merge(Tally&& other) {
    finite_ = finite_ && other.finite_;
    leaf_count_ += other.leaf_count_;
    nodes_ += other.nodes_;
    merge_longest(any_node_, height_, deepest_, other.any_node_, other.height_,
                  std::move(other.deepest_));
    merge_longest(any_passing_, avoiding_length_, maximal_avoiding_, other.any_passing_,
                  other.avoiding_length_, std::move(other.maximal_avoiding_));
  }

  SearchReport finish(unsigned alphabet_size) && {
    SearchReport report;
    report.finite = finite_;
    report.leaf_count = leaf_count_;
    report.height = height_;
    report.nodes_visited = nodes_;
    report.deepest_words = to_words(std::move(deepest_), alphabet_size);
    report.maximal_avoiding = to_words(std::move(maximal_avoiding_), alphabet_size);
    return report;
  }

 private:
  void node(const Label& label) {
    ++nodes_;
    if (!any_node_ || label.size() > height_) {
      any_node_ = true;
      height_ = label.size();
      deepest_.clear();
    }
    if (label.size() == height_) deepest_.push_back(label);
  }

  static void merge_longest(bool& any, std::size_t& length, std::vector<Label>& words,
                            bool other_any, std::size_t other_length,
                            std::vector<Label>&& other_words) {
    if (!other_any) return;
    if (!any || other_length > length) {
      any = true;
      length = other_length;
      words = std::move(other_words);
    } else if (other_length == length) {
      words.insert(words.end(), std::make_move_iterator(other_words.begin()),
                   std::make_move_iterator(other_words.end()));
    }
  }

  static std::vector<Word> to_words(std::vector<Label> labels, unsigned alphabet_size) {
    std::sort(labels.begin(), labels.end());
    std::vector<Word> words;
    words.reserve(labels.size());
    for (Label& l : labels) words.emplace_back(std::move(l), alphabet_size);
    return words;
  }

  bool finite_ = true;
  std::size_t leaf_count_ = 0;
  std::size_t nodes_ = 0;
  bool any_node_ = false;
  std::size_t height_ = 0;
  std::vector<Label> deepest_;
  bool any_passing_ = false;
  std::size_t avoiding_length_ = 0;
  std::vector<Label> maximal_avoiding_;
};

class TreeWalker {
 public:
  TreeWalker(const AvoidancePredicate& p, std::size_t cap) : p_(p), cap_(cap) {}

  // `label` is known to pass. Tallies it and its whole subtree.
  void depth_first(Label& label, Tally& tally) const {
    if (label.size() >= cap_) {
      tally.passing(label, true);
      return;
    }
    tally.passing(label, false);
    for (unsigned a = 0; a < p_.alphabet_size; ++a) {
      label.push_back(static_cast<Letter>(a));
      if (incremental_violation_check(label, p_)) {
        depth_first(label, tally);
      } else {
        tally.leaf(label);
      }
      label.pop_back();
    }
  }

  // Expands passing nodes level by level. Passing nodes at `stop_depth`
  // (when below the cap) are handed back untallied instead of expanded.
  std::vector<Label> breadth_first(Label root, Tally& tally,
                                   std::size_t stop_depth = kUnbounded) const {
    std::vector<Label> frontier;
    std::deque<Label> queue;
    queue.push_back(std::move(root));
    while (!queue.empty()) {
      Label label = std::move(queue.front());
      queue.pop_front();
      if (label.size() >= cap_) {
        tally.passing(label, true);
        continue;
      }
      if (label.size() >= stop_depth) {
        frontier.push_back(std::move(label));
        continue;
      }
      tally.passing(label, false);
      for (unsigned a = 0; a < p_.alphabet_size; ++a) {
        Label child = label;
        child.push_back(static_cast<Letter>(a));
        if (incremental_violation_check(child, p_)) {
          queue.push_back(std::move(child));
        } else {
          tally.leaf(child);
        }
      }
    }
    return frontier;
  }

 private:
  const AvoidancePredicate& p_;
  std::size_t cap_;
};

constexpr std::size_t kParallelSplitDepth = 8;

Tally parallel_walk(const TreeWalker& walker, Label root) {
  Tally tally;
  const std::size_t stop = root.size() + kParallelSplitDepth;
  std::vector<Label> frontier = walker.breadth_first(std::move(root), tally, stop);
  if (frontier.empty()) return tally;

  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                      frontier.size());
  std::vector<Tally> partial(workers);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
          walker.depth_first(frontier[i], partial[t]);
        }
      });
    }
  }
  for (Tally& part : partial) tally.merge(std::move(part));
  return tally;
}

}  // namespace

bool AvoidancePredicate::passes(WordView w) const {
  if (min_forbidden_square_root && has_square(w, *min_forbidden_square_root)) return false;
  if (forbid_cubes && !is_cubefree(w)) return false;
  if (forbid_overlaps && !is_overlapfree(w)) return false;
  return avoids_factors(w, forbidden_factors);
}

bool incremental_violation_check(WordView w, const AvoidancePredicate& p) {
  const std::size_t n = w.size();
  if (n == 0) return true;
  if (p.min_forbidden_square_root) {
    for (std::size_t q = std::max<std::size_t>(*p.min_forbidden_square_root, 1); 2 * q <= n; ++q) {
      if (suffix_has_period(w, 2 * q, q)) return false;
    }
  }
  if (p.forbid_cubes) {
    for (std::size_t q = 1; 3 * q <= n; ++q) {
      if (suffix_has_period(w, 3 * q, q)) return false;
    }
  }
  if (p.forbid_overlaps) {
    for (std::size_t q = 1; 2 * q + 1 <= n; ++q) {
      if (suffix_has_period(w, 2 * q + 1, q)) return false;
    }
  }
  for (const Word& f : p.forbidden_factors.members()) {
    if (f.size() <= n && std::equal(f.begin(), f.end(), w.end() - static_cast<std::ptrdiff_t>(f.size()))) {
      return false;
    }
  }
  return true;
}

SearchReport search(const AvoidancePredicate& p, const SearchOptions& options) {
  if (options.depth_cap == 0) throw DomainError("depth cap must be at least 1");
  if (p.alphabet_size == 0 || p.alphabet_size > kMaxAlphabetSize) {
    throw DomainError("alphabet size out of range: " + std::to_string(p.alphabet_size));
  }
  Label root;
  if (options.fix_first) {
    if (*options.fix_first >= p.alphabet_size) {
      throw DomainError("fixed first letter is outside the alphabet");
    }
    root.push_back(*options.fix_first);
  }

  Tally tally;
  if (!p.passes(root)) {
    tally.leaf(root);
    return std::move(tally).finish(p.alphabet_size);
  }

  const TreeWalker walker(p, options.depth_cap);
  switch (options.traversal) {
    case Traversal::depth_first:
      walker.depth_first(root, tally);
      break;
    case Traversal::breadth_first:
      walker.breadth_first(std::move(root), tally);
      break;
    case Traversal::parallel:
      tally = parallel_walk(walker, std::move(root));
      break;
  }
  return std::move(tally).finish(p.alphabet_size);
}

LongestAvoiding longest_avoiding(const AvoidancePredicate& p, std::optional<Letter> fix_first,
                                 std::size_t depth_cap) {
  SearchReport report = search(p, {fix_first, depth_cap, Traversal::depth_first});
  LongestAvoiding out;
  out.lower_bound = !report.finite;
  out.words = std::move(report.maximal_avoiding);
  if (!out.words.empty()) out.length = out.words.front().size();
  return out;
}

void enumerate_avoiding(const AvoidancePredicate& p, std::size_t max_length,
                        const std::function<void(WordView)>& visit) {
  Label label;
  const auto recurse = [&](const auto& self) -> void {
    visit(label);
    if (label.size() >= max_length) return;
    for (unsigned a = 0; a < p.alphabet_size; ++a) {
      label.push_back(static_cast<Letter>(a));
      if (incremental_violation_check(label, p)) self(self);
      label.pop_back();
    }
  };
  recurse(recurse);
}

}  // namespace repwords
