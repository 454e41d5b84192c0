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

#include "repwords/stream.hpp"

#include <string>
#include <utility>

#include "repwords/errors.hpp"

namespace repwords {

WordStream::WordStream(Morphism inner, Letter seed) : inner_(std::move(inner)), seed_(seed) {
  if (inner_.target_alphabet_size() > inner_.source_alphabet_size()) {
    throw DomainError("fixed points need a morphism from an alphabet into itself");
  }
  if (!is_prolongable(inner_, seed_)) {
    throw DomainError("morphism is not prolongable on letter " + std::to_string(seed_));
  }
  const Word& first = inner_.image(seed_);
  fixed_point_.assign(first.begin(), first.end());
}

WordStream::WordStream(Morphism outer, Morphism inner, Letter seed)
    : WordStream(std::move(inner), seed) {
  if (inner_.target_alphabet_size() > outer.source_alphabet_size()) {
    throw DomainError("outer morphism does not accept the inner alphabet");
  }
  outer_ = std::move(outer);
}

unsigned WordStream::alphabet_size() const noexcept {
  return outer_ ? outer_->target_alphabet_size() : inner_.target_alphabet_size();
}

Letter WordStream::inner_letter(std::size_t index) {
  // expanded_ < fixed_point_.size() always holds, since the seed image has
  // at least two letters and every image at least one.
  while (fixed_point_.size() <= index) {
    const Word& img = inner_.image(fixed_point_[expanded_++]);
    fixed_point_.insert(fixed_point_.end(), img.begin(), img.end());
  }
  return fixed_point_[index];
}

void WordStream::fill_pending(std::size_t n) {
  const auto available = [this] { return pending_.size() - pending_head_; };
  const std::optional<std::size_t> width = outer_->uniform_width();
  while (available() < n) {
    // Uniform outer images let us ask for the exact number of inner letters
    // in one go; otherwise pull them one at a time.
    std::size_t batch = 1;
    if (width) batch = (n - available() + *width - 1) / *width;
    for (std::size_t i = 0; i < batch; ++i) {
      const Word& img = outer_->image(inner_letter(inner_cursor_++));
      pending_.insert(pending_.end(), img.begin(), img.end());
    }
  }
}

Word WordStream::next(std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  if (!outer_) {
    if (n > 0) inner_letter(emitted_ + n - 1);
    const auto first = fixed_point_.begin() + static_cast<std::ptrdiff_t>(emitted_);
    out.assign(first, first + static_cast<std::ptrdiff_t>(n));
  } else {
    fill_pending(n);
    const auto first = pending_.begin() + static_cast<std::ptrdiff_t>(pending_head_);
    out.assign(first, first + static_cast<std::ptrdiff_t>(n));
    pending_head_ += n;
    if (pending_head_ == pending_.size()) {
      pending_.clear();
      pending_head_ = 0;
    }
  }
  emitted_ += n;
  return Word(std::move(out), alphabet_size());
}

Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n) {
  return WordStream(m, a).next(n);
}

Word mapped_stream_prefix(const Morphism& outer, const Morphism& m, Letter a, std::size_t n) {
  return WordStream(outer, m, a).next(n);
}

}  // namespace repwords
