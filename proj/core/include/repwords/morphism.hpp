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

#ifndef REPWORDS_MORPHISM_HPP_
#define REPWORDS_MORPHISM_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "repwords/word.hpp"

namespace repwords {

// A morphism from words over {0..k-1} to words over {0..target-1}, given by
// one nonempty image per source letter.
class Morphism {
 public:
  Morphism(std::vector<Word> images, unsigned target_alphabet_size);

  // Images written as digit strings, e.g. {"01", "10"}.
  static Morphism from_strings(std::initializer_list<std::string_view> images,
                               unsigned target_alphabet_size);

  [[nodiscard]] unsigned source_alphabet_size() const noexcept {
    return static_cast<unsigned>(images_.size());
  }
  [[nodiscard]] unsigned target_alphabet_size() const noexcept { return target_alphabet_size_; }

  // Throws DomainError for a letter outside the source alphabet.
  [[nodiscard]] const Word& image(Letter a) const;
  [[nodiscard]] const std::vector<Word>& images() const noexcept { return images_; }

  // Common image length when every image has the same length.
  [[nodiscard]] std::optional<std::size_t> uniform_width() const noexcept { return uniform_width_; }
  [[nodiscard]] std::size_t max_image_length() const noexcept;

  // Returns a copy with image(a)[pos] replaced by `letter`. Used for fault
  // injection when exercising the verification checks.
  [[nodiscard]] Morphism with_letter_replaced(Letter a, std::size_t pos, Letter letter) const;

 private:
  std::vector<Word> images_;
  unsigned target_alphabet_size_;
  std::optional<std::size_t> uniform_width_;
};

// Concatenation of m(w[0]) m(w[1]) ...; DomainError on an out-of-range letter.
Word morphism_apply(const Morphism& m, WordView w);

// m(a) starts with a and is longer than one letter.
bool is_prolongable(const Morphism& m, Letter a);

namespace morphisms {

// 10-uniform morphism on {0,1,2,3} whose fixed point at 0 is squarefree and
// avoids 12, 13, 21, 32, 231 and 10302.
const Morphism& squarefree_quaternary();

// 6-uniform coding {0,1,2,3} -> {0,1}; maps the word above to a cubefree
// binary word whose squares all have roots shorter than 4.
const Morphism& cubefree_binary();

// 0 -> 01, 1 -> 10.
const Morphism& thue_morse();

// 0 -> 0, ..., k-1 -> k-1.
Morphism identity(unsigned alphabet_size);

}  // namespace morphisms
}  // namespace repwords

#endif  // REPWORDS_MORPHISM_HPP_
