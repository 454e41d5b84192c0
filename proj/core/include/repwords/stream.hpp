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

#ifndef REPWORDS_STREAM_HPP_
#define REPWORDS_STREAM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "repwords/morphism.hpp"
#include "repwords/word.hpp"

namespace repwords {

// Lazily emits the fixed point of a prolongable morphism, optionally
// passed through a second ("outer") morphism.
//
// The fixed point at `seed` is seed x m(x) m^2(x) ... where m(seed) = seed x.
// It is grown one image at a time: once the first i letters are known,
// m(first i letters) is a longer known prefix. Output does not depend on how
// the caller splits its requests: next(n) followed by next(k) yields the
// same letters as next(n + k).
class WordStream {
 public:
  // Throws DomainError unless `inner` maps its alphabet into itself and is
  // prolongable on `seed`.
  WordStream(Morphism inner, Letter seed);
  // Streams outer(fixed point of inner at seed). `inner`'s letters must lie
  // in `outer`'s source alphabet.
  WordStream(Morphism outer, Morphism inner, Letter seed);

  // Next `n` letters after the cursor.
  Word next(std::size_t n);

  [[nodiscard]] std::size_t position() const noexcept { return emitted_; }
  [[nodiscard]] unsigned alphabet_size() const noexcept;

 private:
  Letter inner_letter(std::size_t index);
  void fill_pending(std::size_t n);

  Morphism inner_;
  std::optional<Morphism> outer_;
  Letter seed_;

  // Known prefix of the inner fixed point, and how many of its letters have
  // already had their images appended.
  std::vector<Letter> fixed_point_;
  std::size_t expanded_ = 1;

  // Inner letters consumed by the outer morphism so far, and outer letters
  // produced but not yet emitted.
  std::size_t inner_cursor_ = 0;
  std::vector<Letter> pending_;
  std::size_t pending_head_ = 0;

  std::size_t emitted_ = 0;
};

// First n letters of the fixed point of m starting with a.
Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n);

// First n letters of outer(fixed point of m starting with a). Generates
// only as much of the fixed point as the requested prefix needs.
Word mapped_stream_prefix(const Morphism& outer, const Morphism& m, Letter a, std::size_t n);

}  // namespace repwords

#endif  // REPWORDS_STREAM_HPP_
