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

#include "repwords/morphism.hpp"

#include <algorithm>
#include <string>

#include "repwords/errors.hpp"

namespace repwords {

Morphism::Morphism(std::vector<Word> images, unsigned target_alphabet_size)
    : images_(std::move(images)), target_alphabet_size_(target_alphabet_size) {
  if (images_.empty() || images_.size() > kMaxAlphabetSize) {
    throw DomainError("a morphism needs between 1 and " + std::to_string(kMaxAlphabetSize) +
                      " images, got " + std::to_string(images_.size()));
  }
  if (target_alphabet_size == 0 || target_alphabet_size > kMaxAlphabetSize) {
    throw DomainError("target alphabet size out of range: " +
                      std::to_string(target_alphabet_size));
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) {
      throw DomainError("image of letter " + std::to_string(a) + " is empty");
    }
    // Revalidate against the target alphabet; the word may have been built
    // with a looser bound.
    images_[a] = Word(images_[a].view(), target_alphabet_size);
  }
  const std::size_t width = images_.front().size();
  if (std::all_of(images_.begin(), images_.end(),
                  [width](const Word& w) { return w.size() == width; })) {
    uniform_width_ = width;
  }
}

Morphism Morphism::from_strings(std::initializer_list<std::string_view> images,
                                unsigned target_alphabet_size) {
  std::vector<Word> words;
  words.reserve(images.size());
  for (std::string_view text : images) words.push_back(parse_word(text, target_alphabet_size));
  return Morphism(std::move(words), target_alphabet_size);
}

const Word& Morphism::image(Letter a) const {
  if (a >= images_.size()) {
    throw DomainError("letter " + std::to_string(a) + " is outside the source alphabet of size " +
                      std::to_string(images_.size()));
  }
  return images_[a];
}

std::size_t Morphism::max_image_length() const noexcept {
  std::size_t longest = 0;
  for (const Word& w : images_) longest = std::max(longest, w.size());
  return longest;
}

Morphism Morphism::with_letter_replaced(Letter a, std::size_t pos, Letter letter) const {
  std::vector<Word> images = images_;
  const Word& old = image(a);
  if (pos >= old.size()) throw DomainError("replacement position past the end of the image");
  std::vector<Letter> letters = old.letters();
  letters[pos] = letter;
  images[a] = Word(std::move(letters), target_alphabet_size_);
  return Morphism(std::move(images), target_alphabet_size_);
}

Word morphism_apply(const Morphism& m, WordView w) {
  std::vector<Letter> letters;
  std::size_t total = 0;
  for (Letter a : w) total += m.image(a).size();
  letters.reserve(total);
  for (Letter a : w) {
    const Word& img = m.image(a);
    letters.insert(letters.end(), img.begin(), img.end());
  }
  return Word(std::move(letters), m.target_alphabet_size());
}

bool is_prolongable(const Morphism& m, Letter a) {
  const Word& img = m.image(a);
  return img.size() >= 2 && img[0] == a;
}

namespace morphisms {

const Morphism& squarefree_quaternary() {
  static const Morphism m = Morphism::from_strings(
      {"0310201023", "0310230102", "0201031023", "0203010201"}, 4);
  return m;
}

const Morphism& cubefree_binary() {
  static const Morphism m =
      Morphism::from_strings({"010011", "010110", "011001", "011010"}, 2);
  return m;
}

const Morphism& thue_morse() {
  static const Morphism m = Morphism::from_strings({"01", "10"}, 2);
  return m;
}

Morphism identity(unsigned alphabet_size) {
  std::vector<Word> images;
  for (unsigned a = 0; a < alphabet_size; ++a) {
    images.push_back(Word({static_cast<Letter>(a)}, alphabet_size));
  }
  return Morphism(std::move(images), alphabet_size);
}

}  // namespace morphisms
}  // namespace repwords
