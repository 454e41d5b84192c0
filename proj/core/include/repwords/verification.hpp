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

#ifndef REPWORDS_VERIFICATION_HPP_
#define REPWORDS_VERIFICATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repwords/morphism.hpp"
#include "repwords/repetition.hpp"
#include "repwords/word.hpp"

// Mechanical checks of the finite case analyses behind the squarefree
// quaternary word and its cubefree binary image. Each check returns a
// report carrying the evidence it found; witnesses are plain strings so the
// reports can be printed or serialized without the typed structures.

namespace repwords {

struct Witness {
  // What kind of finding this is: "square", "cube", "factor", "interior",
  // "synchronization", "decomposition", "undecided", ...
  std::string kind;
  // The input the finding is about, e.g. "g(231)" or "h(3)h(1)".
  std::string subject;
  // Ordered key/value details ("position" -> "5", "root" -> "0110").
  std::vector<std::pair<std::string, std::string>> details;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string check_name;
  bool passed = false;
  std::optional<std::size_t> expected_count;
  std::optional<std::size_t> actual_count;
  std::vector<Witness> witnesses;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// image(a) image(b) = t image(c) u with t and u both nonempty.
struct InteriorOccurrence {
  Letter a = 0;
  Letter b = 0;
  Letter c = 0;
  Word t;
  Word u;
  // u is a prefix of some image(d).
  bool u_prefixes_an_image = false;

  friend bool operator==(const InteriorOccurrence&, const InteriorOccurrence&) = default;
};

// image(a) = s t, image(b) = u v, image(c) = s v, with s and v nonempty.
struct Synchronization {
  Letter a = 0;
  Letter b = 0;
  Letter c = 0;
  Word s;
  Word t;
  Word u;
  Word v;

  friend bool operator==(const Synchronization&, const Synchronization&) = default;
};

// x = u thue_morse(y) v with u, v in {e, 0, 1, 00, 11} and y overlap-free.
struct Decomposition {
  Word u;
  Word y;
  Word v;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Passes iff no member of F occurs inside an image or in the window of
// max|f| - 1 letters on each side of the seam of image(a) image(b). This is
// complete for images of length >= max|f| - 1.
VerificationReport check_factor_closure(const Morphism& m, const FactorSet& forbidden);

// Squarefree words of exactly `length` letters over {0..alphabet_size-1}
// that avoid `forbidden`, in lexicographic order.
std::vector<Word> enumerate_valid_words(std::size_t length, const FactorSet& forbidden,
                                        unsigned alphabet_size = 4);

// h(w) is squarefree for each of the 49 valid 5-letter words
// (valid = squarefree, avoiding 12, 13, 21, 32).
VerificationReport check_case1_h(const Morphism& h = morphisms::squarefree_quaternary());

// g(w) has no square with root >= 4 for each of the 41 valid 5-letter words
// (valid = squarefree, avoiding all six forbidden factors).
VerificationReport check_case1_g(const Morphism& g = morphisms::cubefree_binary());

// All nontrivial inclusions of an image inside the image of a pair.
// UnsupportedError unless m is uniform.
std::vector<InteriorOccurrence> find_interior_occurrences(const Morphism& m);
// Same, restricted to pairs ab that can occur in a squarefree word avoiding
// `forbidden` (a != b and ab avoids every member).
std::vector<InteriorOccurrence> find_interior_occurrences(const Morphism& m,
                                                          const FactorSet& forbidden);

// All splits with a != c and b != c. UnsupportedError unless m is uniform.
std::vector<Synchronization> find_synchronizations(const Morphism& m);

// The interior-occurrence and synchronization checks for h and g. Each
// passes iff the findings equal the known exceptional cases exactly and,
// for interior occurrences, no u is a prefix of an image.
VerificationReport check_interior_h(const Morphism& h = morphisms::squarefree_quaternary());
VerificationReport check_synchronization_h(const Morphism& h = morphisms::squarefree_quaternary());
VerificationReport check_interior_g(const Morphism& g = morphisms::cubefree_binary());
VerificationReport check_synchronization_g(const Morphism& g = morphisms::cubefree_binary());

// Pairs (prefix, suffix) of the given lengths for which the determined
// pieces 1·prefix, suffix·3·prefix and suffix·2 of w = 1 α 3 α 2, with
// α = prefix · (anything) · suffix, contain neither a square nor a member
// of the six-word forbidden set.
std::vector<std::pair<Word, Word>> alpha_lemma_undecided(std::size_t prefix_length,
                                                         std::size_t suffix_length);

// Every w = 1 α 3 α 2 contains a square or a forbidden factor. Part (a)
// tries every α with |α| <= prefix_length + suffix_length - 1 directly;
// part (b) requires alpha_lemma_undecided(prefix_length, suffix_length) to
// be empty, which covers every longer α.
VerificationReport check_alpha_lemma(std::size_t prefix_length = 3, std::size_t suffix_length = 3);

// The squares and the cube that make each of 12, 13, 21, 32, 231, 10302
// unusable under g.
VerificationReport check_g_forbidden_images(const Morphism& g = morphisms::cubefree_binary());

// None of the ten cubes with root length <= 3 occurs in g(w) for the 16
// valid 3-letter words.
VerificationReport check_g_cube_shortlist(const Morphism& g = morphisms::cubefree_binary());

// All decompositions of an overlap-free binary word. DomainError when x is
// not binary or contains an overlap. Ordered by u (shortest first), then v,
// so the front entry minimizes |u| and then |v|.
std::vector<Decomposition> decompose_overlapfree(WordView x);

// decompose_overlapfree is nonempty and sound on every overlap-free binary
// word of length 1..max_length.
VerificationReport check_overlapfree_decompositions(std::size_t max_length = 20);

// Independent re-validation by direct letter comparison.
bool validate(const InteriorOccurrence& o, const Morphism& m);
bool validate(const Synchronization& s, const Morphism& m);
bool validate(const Decomposition& d, WordView x);

struct CheckInfo {
  std::string_view name;
  // Alternate names accepted by lookups.
  std::vector<std::string_view> aliases;
  std::string_view description;
  VerificationReport (*run)(const Morphism& h, const Morphism& g);
};

// Names of the checks run_all performs, in run order.
std::span<const CheckInfo> check_catalog();
const CheckInfo* find_check(std::string_view name_or_alias);

// Runs one catalogued check against the given morphisms.
VerificationReport run_check(const CheckInfo& check,
                             const Morphism& h = morphisms::squarefree_quaternary(),
                             const Morphism& g = morphisms::cubefree_binary());

// One report per catalogued check, in catalogue order.
std::vector<VerificationReport> run_all(const Morphism& h = morphisms::squarefree_quaternary(),
                                        const Morphism& g = morphisms::cubefree_binary());

bool all_passed(std::span<const VerificationReport> reports);

}  // namespace repwords

#endif  // REPWORDS_VERIFICATION_HPP_
