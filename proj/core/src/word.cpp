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

#include "repwords/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>

#include "repwords/errors.hpp"

namespace repwords {
namespace {

void check_alphabet(unsigned alphabet_size) {
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabetSize) {
    throw DomainError("alphabet size must lie in [1, " + std::to_string(kMaxAlphabetSize) +
                      "], got " + std::to_string(alphabet_size));
  }
}

void check_letters(WordView letters, unsigned alphabet_size) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] >= alphabet_size) {
      throw DomainError("letter " + std::to_string(letters[i]) + " at position " +
                        std::to_string(i) + " is outside an alphabet of size " +
                        std::to_string(alphabet_size));
    }
  }
}

}  // namespace

Word::Word(unsigned alphabet_size) : alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
}

Word::Word(std::vector<Letter> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  check_letters(letters_, alphabet_size);
}

Word::Word(std::initializer_list<Letter> letters, unsigned alphabet_size)
    : Word(std::vector<Letter>(letters), alphabet_size) {}

Word::Word(WordView letters, unsigned alphabet_size)
    : Word(std::vector<Letter>(letters.begin(), letters.end()), alphabet_size) {}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word out(alphabet_size_);
  if (pos >= letters_.size()) return out;
  const std::size_t n = std::min(len, letters_.size() - pos);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + n));
  return out;
}

bool Word::starts_with(WordView prefix) const noexcept {
  return prefix.size() <= letters_.size() &&
         std::equal(prefix.begin(), prefix.end(), letters_.begin());
}

bool Word::ends_with(WordView suffix) const noexcept {
  return suffix.size() <= letters_.size() &&
         std::equal(suffix.begin(), suffix.end(),
                    letters_.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

void Word::push_back(Letter a) {
  if (a >= alphabet_size_) {
    throw DomainError("letter " + std::to_string(a) + " is outside an alphabet of size " +
                      std::to_string(alphabet_size_));
  }
  letters_.push_back(a);
}

Word& Word::operator+=(WordView other) {
  check_letters(other, alphabet_size_);
  letters_.insert(letters_.end(), other.begin(), other.end());
  return *this;
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.alphabet_size_ = std::max(lhs.alphabet_size_, rhs.alphabet_size_);
  lhs.letters_.insert(lhs.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return lhs;
}

Word parse_word(std::string_view text, unsigned alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) continue;
    if (ch < '0' || ch > '9') {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at offset " +
                       std::to_string(i));
    }
    const auto letter = static_cast<Letter>(ch - '0');
    if (letter >= alphabet_size) {
      throw ParseError("digit " + std::to_string(letter) + " at offset " + std::to_string(i) +
                       " is outside an alphabet of size " + std::to_string(alphabet_size));
    }
    letters.push_back(letter);
  }
  return Word(std::move(letters), alphabet_size);
}

std::string format_word(WordView w) {
  std::string out(w.size(), '0');
  std::transform(w.begin(), w.end(), out.begin(),
                 [](Letter a) { return static_cast<char>('0' + a); });
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

Word power(const Word& root, std::size_t times) {
  Word out(root.alphabet_size());
  for (std::size_t i = 0; i < times; ++i) out += root;
  return out;
}

}  // namespace repwords
