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

#ifndef REPWORDS_WORD_HPP_
#define REPWORDS_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repwords {

using Letter = std::uint8_t;

// Read-only view over a run of letters. Every detector and checker takes
// one of these so that callers can pass a Word, a slice, or a raw buffer.
using WordView = std::span<const Letter>;

// Textual I/O writes one ASCII digit per letter, so alphabets stop at 10.
inline constexpr unsigned kMaxAlphabetSize = 10;

// A finite word over {0, ..., alphabet_size - 1}.
//
// The alphabet size is a declared bound checked on construction; it does
// not take part in comparisons. A word over {0,1} is the same word when
// read as a word over {0,1,2,3}.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(unsigned alphabet_size);
  Word(std::vector<Letter> letters, unsigned alphabet_size);
  Word(std::initializer_list<Letter> letters, unsigned alphabet_size);
  Word(WordView letters, unsigned alphabet_size);

  [[nodiscard]] unsigned alphabet_size() const noexcept { return alphabet_size_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  [[nodiscard]] WordView view() const noexcept { return letters_; }
  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  operator WordView() const noexcept { return letters_; }  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const_iterator begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return letters_.end(); }

  // Factor of length `len` starting at `pos`, clamped to the end.
  [[nodiscard]] Word substr(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  [[nodiscard]] bool starts_with(WordView prefix) const noexcept;
  [[nodiscard]] bool ends_with(WordView suffix) const noexcept;

  void push_back(Letter a);
  Word& operator+=(WordView other);

  friend Word operator+(Word lhs, const Word& rhs);
  friend bool operator==(const Word& lhs, const Word& rhs) noexcept {
    return lhs.letters_ == rhs.letters_;
  }
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept {
    return lhs.letters_ <=> rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
  unsigned alphabet_size_ = kMaxAlphabetSize;
};

// Parses ASCII digits into letters, skipping whitespace. Any other
// character, or a digit >= alphabet_size, raises ParseError.
Word parse_word(std::string_view text, unsigned alphabet_size = kMaxAlphabetSize);

std::string format_word(WordView w);

std::ostream& operator<<(std::ostream& os, const Word& w);

// Repeats `root` `times` times; handy for spelling out squares and cubes.
Word power(const Word& root, std::size_t times);

}  // namespace repwords

#endif  // REPWORDS_WORD_HPP_
