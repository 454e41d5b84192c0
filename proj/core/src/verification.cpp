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

#include "repwords/verification.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "repwords/errors.hpp"
#include "repwords/search.hpp"

namespace repwords {
namespace {

using Details = std::vector<std::pair<std::string, std::string>>;

std::string letter_text(Letter a) { return std::string(1, static_cast<char>('0' + a)); }

std::string image_of(std::string_view name, WordView w) {
  return std::string(name) + "(" + format_word(w) + ")";
}

Witness square_witness(std::string subject, WordView w, const SquareOccurrence& s) {
  return {"square",
          std::move(subject),
          {{"position", std::to_string(s.position)},
           {"root_length", std::to_string(s.root_length)},
           {"root", format_word(w.subspan(s.position, s.root_length))}}};
}

// Every word of exactly `length` letters, in lexicographic order.
std::vector<Word> all_words(std::size_t length, unsigned alphabet_size) {
  std::vector<Word> out;
  std::vector<Letter> letters(length, 0);
  while (true) {
    out.emplace_back(letters, alphabet_size);
    std::size_t i = length;
    while (i > 0 && letters[i - 1] + 1u == alphabet_size) letters[--i] = 0;
    if (i == 0) break;
    ++letters[i - 1];
  }
  return out;
}

std::size_t require_uniform(const Morphism& m) {
  if (!m.uniform_width()) {
    throw UnsupportedError("alignment checks need a uniform morphism");
  }
  return *m.uniform_width();
}

bool u_prefixes_some_image(const Morphism& m, const Word& u) {
  return std::any_of(m.images().begin(), m.images().end(),
                     [&](const Word& img) { return img.starts_with(u); });
}

std::vector<InteriorOccurrence> interior_occurrences(
    const Morphism& m, const std::function<bool(Letter, Letter)>& admissible) {
  const std::size_t width = require_uniform(m);
  const unsigned k = m.source_alphabet_size();
  std::vector<InteriorOccurrence> out;
  for (unsigned a = 0; a < k; ++a) {
    for (unsigned b = 0; b < k; ++b) {
      const auto la = static_cast<Letter>(a);
      const auto lb = static_cast<Letter>(b);
      if (!admissible(la, lb)) continue;
      const Word pair = m.image(la) + m.image(lb);
      for (std::size_t offset = 1; offset < width; ++offset) {
        for (unsigned c = 0; c < k; ++c) {
          const auto lc = static_cast<Letter>(c);
          const Word& img = m.image(lc);
          if (!std::equal(img.begin(), img.end(), pair.begin() + static_cast<std::ptrdiff_t>(offset))) {
            continue;
          }
          InteriorOccurrence o{la, lb, lc, pair.substr(0, offset), pair.substr(offset + width), false};
          o.u_prefixes_an_image = u_prefixes_some_image(m, o.u);
          out.push_back(std::move(o));
        }
      }
    }
  }
  return out;
}

Witness interior_witness(std::string_view name, const InteriorOccurrence& o) {
  return {"interior",
          image_of(name, std::vector<Letter>{o.a}) + image_of(name, std::vector<Letter>{o.b}),
          {{"c", letter_text(o.c)},
           {"t", format_word(o.t)},
           {"u", format_word(o.u)},
           {"u_prefixes_an_image", o.u_prefixes_an_image ? "true" : "false"}}};
}

Witness synchronization_witness(const Synchronization& s) {
  return {"synchronization",
          "a=" + letter_text(s.a) + " b=" + letter_text(s.b) + " c=" + letter_text(s.c),
          {{"s", format_word(s.s)},
           {"t", format_word(s.t)},
           {"u", format_word(s.u)},
           {"v", format_word(s.v)}}};
}

template <typename Finding>
VerificationReport compare_findings(std::string name, std::vector<Finding> found,
                                    const std::vector<Finding>& expected,
                                    const std::function<Witness(const Finding&)>& to_witness,
                                    const std::function<bool(const Finding&)>& acceptable) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.expected_count = expected.size();
  r.actual_count = found.size();
  bool ok = found.size() == expected.size();
  for (const Finding& f : found) {
    ok = ok && acceptable(f) &&
         std::find(expected.begin(), expected.end(), f) != expected.end();
    r.witnesses.push_back(to_witness(f));
  }
  r.passed = ok;
  return r;
}

InteriorOccurrence interior(Letter a, Letter b, Letter c, std::string_view t, std::string_view u,
                            unsigned alphabet_size) {
  return {a, b, c, parse_word(t, alphabet_size), parse_word(u, alphabet_size), false};
}

bool bad_for_alpha_lemma(WordView w) {
  return !is_squarefree(w) || !avoids_factors(w, factor_sets::quaternary_all());
}

Word quaternary(std::string_view text) { return parse_word(text, 4); }

}  // namespace

VerificationReport check_factor_closure(const Morphism& m, const FactorSet& forbidden) {
  VerificationReport r;
  r.check_name = "factor-closure";
  const unsigned k = m.source_alphabet_size();
  const std::size_t reach = forbidden.max_length() == 0 ? 0 : forbidden.max_length() - 1;

  for (unsigned a = 0; a < k; ++a) {
    const Word& img = m.image(static_cast<Letter>(a));
    for (const Word& f : forbidden.members()) {
      if (auto pos = find_factor(img, f)) {
        r.witnesses.push_back({"factor",
                               image_of("m", std::vector<Letter>{static_cast<Letter>(a)}),
                               {{"factor", format_word(f)}, {"position", std::to_string(*pos)}}});
      }
    }
  }
  for (unsigned a = 0; a < k; ++a) {
    for (unsigned b = 0; b < k; ++b) {
      const Word& left = m.image(static_cast<Letter>(a));
      const Word& right = m.image(static_cast<Letter>(b));
      const std::size_t take_left = std::min(reach, left.size());
      const Word window = left.substr(left.size() - take_left) + right.substr(0, reach);
      for (const Word& f : forbidden.members()) {
        if (auto pos = find_factor(window, f)) {
          r.witnesses.push_back(
              {"factor",
               image_of("m", std::vector<Letter>{static_cast<Letter>(a)}) +
                   image_of("m", std::vector<Letter>{static_cast<Letter>(b)}) + " seam",
               {{"factor", format_word(f)},
                {"window", format_word(window)},
                {"position", std::to_string(*pos)}}});
        }
      }
    }
  }
  r.expected_count = 0;
  r.actual_count = r.witnesses.size();
  r.passed = r.witnesses.empty();
  return r;
}

std::vector<Word> enumerate_valid_words(std::size_t length, const FactorSet& forbidden,
                                        unsigned alphabet_size) {
  AvoidancePredicate p;
  p.alphabet_size = alphabet_size;
  p.min_forbidden_square_root = 1;
  p.forbidden_factors = forbidden;
  std::vector<Word> out;
  enumerate_avoiding(p, length, [&](WordView w) {
    if (w.size() == length) out.emplace_back(w, alphabet_size);
  });
  return out;
}

VerificationReport check_case1_h(const Morphism& h) {
  VerificationReport r;
  r.check_name = "short-words-squarefree-h";
  const std::vector<Word> words = enumerate_valid_words(5, factor_sets::quaternary_pairs());
  r.expected_count = 49;
  r.actual_count = words.size();
  for (const Word& w : words) {
    const Word img = morphism_apply(h, w);
    const auto squares = find_squares(img);
    if (!squares.empty()) r.witnesses.push_back(square_witness(image_of("h", w), img, squares.front()));
  }
  r.passed = r.actual_count == r.expected_count && r.witnesses.empty();
  return r;
}

VerificationReport check_case1_g(const Morphism& g) {
  VerificationReport r;
  r.check_name = "short-words-square-bound-g";
  const std::vector<Word> words = enumerate_valid_words(5, factor_sets::quaternary_all());
  r.expected_count = 41;
  r.actual_count = words.size();
  for (const Word& w : words) {
    const Word img = morphism_apply(g, w);
    if (max_square_root(img) > 3) {
      r.witnesses.push_back(square_witness(image_of("g", w), img, find_squares(img, 4).front()));
    }
  }
  r.passed = r.actual_count == r.expected_count && r.witnesses.empty();
  return r;
}

std::vector<InteriorOccurrence> find_interior_occurrences(const Morphism& m) {
  return interior_occurrences(m, [](Letter, Letter) { return true; });
}

std::vector<InteriorOccurrence> find_interior_occurrences(const Morphism& m,
                                                          const FactorSet& forbidden) {
  return interior_occurrences(m, [&](Letter a, Letter b) {
    const std::array<Letter, 2> pair{a, b};
    return a != b && avoids_factors(pair, forbidden);
  });
}

std::vector<Synchronization> find_synchronizations(const Morphism& m) {
  const std::size_t width = require_uniform(m);
  const unsigned k = m.source_alphabet_size();
  std::vector<Synchronization> out;
  for (unsigned a = 0; a < k; ++a) {
    for (unsigned b = 0; b < k; ++b) {
      for (unsigned c = 0; c < k; ++c) {
        if (a == c || b == c) continue;
        const Word& ia = m.image(static_cast<Letter>(a));
        const Word& ib = m.image(static_cast<Letter>(b));
        const Word& ic = m.image(static_cast<Letter>(c));
        for (std::size_t split = 1; split < width; ++split) {
          const auto cut = static_cast<std::ptrdiff_t>(split);
          if (std::equal(ia.begin(), ia.begin() + cut, ic.begin()) &&
              std::equal(ib.begin() + cut, ib.end(), ic.begin() + cut)) {
            out.push_back({static_cast<Letter>(a), static_cast<Letter>(b), static_cast<Letter>(c),
                           ia.substr(0, split), ia.substr(split), ib.substr(0, split),
                           ib.substr(split)});
          }
        }
      }
    }
  }
  return out;
}

VerificationReport check_interior_h(const Morphism& h) {
  const std::vector<InteriorOccurrence> expected{interior(3, 1, 2, "020301", "0102", 4)};
  return compare_findings<InteriorOccurrence>(
      "interior-occurrences-h", find_interior_occurrences(h), expected,
      [](const InteriorOccurrence& o) { return interior_witness("h", o); },
      [&](const InteriorOccurrence& o) { return !o.u_prefixes_an_image && validate(o, h); });
}

VerificationReport check_synchronization_h(const Morphism& h) {
  return compare_findings<Synchronization>(
      "synchronization-h", find_synchronizations(h), {}, synchronization_witness,
      [&](const Synchronization& s) { return validate(s, h); });
}

VerificationReport check_interior_g(const Morphism& g) {
  const std::vector<InteriorOccurrence> expected{
      interior(0, 1, 3, "010", "110", 2),
      interior(1, 0, 2, "01", "0011", 2),
      interior(2, 3, 1, "0110", "10", 2),
  };
  return compare_findings<InteriorOccurrence>(
      "interior-occurrences-g", find_interior_occurrences(g, factor_sets::quaternary_all()),
      expected, [](const InteriorOccurrence& o) { return interior_witness("g", o); },
      [&](const InteriorOccurrence& o) { return !o.u_prefixes_an_image && validate(o, g); });
}

VerificationReport check_synchronization_g(const Morphism& g) {
  const std::vector<Synchronization> expected{
      {2, 1, 3, parse_word("0110", 2), parse_word("01", 2), parse_word("0101", 2),
       parse_word("10", 2)}};
  return compare_findings<Synchronization>(
      "synchronization-g", find_synchronizations(g), expected, synchronization_witness,
      [&](const Synchronization& s) { return validate(s, g); });
}

std::vector<std::pair<Word, Word>> alpha_lemma_undecided(std::size_t prefix_length,
                                                         std::size_t suffix_length) {
  std::vector<std::pair<Word, Word>> out;
  const Word one = quaternary("1");
  const Word two = quaternary("2");
  const Word three = quaternary("3");
  const std::vector<Word> suffixes = all_words(suffix_length, 4);
  for (const Word& prefix : all_words(prefix_length, 4)) {
    if (bad_for_alpha_lemma(one + prefix)) continue;
    for (const Word& suffix : suffixes) {
      if (bad_for_alpha_lemma(suffix + two)) continue;
      if (bad_for_alpha_lemma(suffix + three + prefix)) continue;
      out.emplace_back(prefix, suffix);
    }
  }
  return out;
}

VerificationReport check_alpha_lemma(std::size_t prefix_length, std::size_t suffix_length) {
  VerificationReport r;
  r.check_name = "one-alpha-three-alpha-two";
  const Word one = quaternary("1");
  const Word two = quaternary("2");
  const Word three = quaternary("3");
  std::size_t examined = 0;

  const std::size_t split = prefix_length + suffix_length;
  for (std::size_t len = 0; len < split; ++len) {
    for (const Word& alpha : all_words(len, 4)) {
      ++examined;
      const Word w = one + alpha + three + alpha + two;
      if (!bad_for_alpha_lemma(w)) {
        r.witnesses.push_back({"counterexample", "alpha=" + format_word(alpha),
                               {{"w", format_word(w)}}});
      }
    }
  }

  examined += static_cast<std::size_t>(1) << (2 * split);
  for (const auto& [prefix, suffix] : alpha_lemma_undecided(prefix_length, suffix_length)) {
    r.witnesses.push_back({"undecided",
                           "alpha=" + format_word(prefix) + "..." + format_word(suffix),
                           {{"pieces", "1" + format_word(prefix) + " " + format_word(suffix) +
                                           "3" + format_word(prefix) + " " +
                                           format_word(suffix) + "2"}}});
  }
  r.actual_count = examined;
  r.passed = r.witnesses.empty();
  return r;
}

VerificationReport check_g_forbidden_images(const Morphism& g) {
  struct Claim {
    std::string_view preimage;
    std::size_t exponent;
    std::string_view root;
  };
  static constexpr std::array<Claim, 8> kClaims{{
      {"12", 2, "0110"},
      {"12", 2, "1100"},
      {"12", 2, "1001"},
      {"13", 2, "0110"},
      {"21", 3, "01"},
      {"32", 2, "1001"},
      {"231", 2, "10010110"},
      {"10302", 2, "100100110110"},
  }};

  VerificationReport r;
  r.check_name = "g-forbidden-images";
  r.expected_count = kClaims.size();
  std::size_t confirmed = 0;
  for (const Claim& claim : kClaims) {
    const Word pre = quaternary(claim.preimage);
    const Word img = morphism_apply(g, pre);
    const Word root = parse_word(claim.root, 2);
    const auto pos = find_factor(img, power(root, claim.exponent));
    const bool exact =
        pos && (claim.exponent == 3 ? is_cube_at(img, {*pos, root.size()})
                                    : is_square_at(img, {*pos, root.size()}));
    if (!exact) continue;
    ++confirmed;
    r.witnesses.push_back({claim.exponent == 3 ? "cube" : "square",
                           image_of("g", pre),
                           {{"image", format_word(img)},
                            {"position", std::to_string(*pos)},
                            {"root", std::string(claim.root)}}});
  }
  r.actual_count = confirmed;
  r.passed = confirmed == kClaims.size();
  return r;
}

VerificationReport check_g_cube_shortlist(const Morphism& g) {
  static constexpr std::array<std::string_view, 10> kRoots{
      "0", "1", "01", "10", "001", "010", "011", "100", "101", "110"};
  VerificationReport r;
  r.check_name = "g-cube-shortlist";
  const std::vector<Word> words = enumerate_valid_words(3, factor_sets::quaternary_all());
  r.expected_count = 16;
  r.actual_count = words.size();
  for (const Word& w : words) {
    const Word img = morphism_apply(g, w);
    for (std::string_view root : kRoots) {
      const Word cube = power(parse_word(root, 2), 3);
      if (auto pos = find_factor(img, cube)) {
        r.witnesses.push_back({"cube", image_of("g", w),
                               {{"root", std::string(root)}, {"position", std::to_string(*pos)}}});
      }
    }
  }
  r.passed = r.actual_count == r.expected_count && r.witnesses.empty();
  return r;
}

std::vector<Decomposition> decompose_overlapfree(WordView x) {
  if (std::any_of(x.begin(), x.end(), [](Letter a) { return a > 1; })) {
    throw DomainError("decomposition needs a binary word");
  }
  if (!is_overlapfree(x)) throw DomainError("decomposition needs an overlap-free word");

  static const std::array<Word, 5> kTrims{Word(2), parse_word("0", 2), parse_word("1", 2),
                                          parse_word("00", 2), parse_word("11", 2)};
  const Word word(x, 2);
  std::vector<Decomposition> out;
  for (const Word& u : kTrims) {
    for (const Word& v : kTrims) {
      if (u.size() + v.size() > word.size()) continue;
      const std::size_t middle = word.size() - u.size() - v.size();
      if (middle % 2 != 0 || !word.starts_with(u) || !word.ends_with(v)) continue;
      std::vector<Letter> y;
      bool blocks_ok = true;
      for (std::size_t i = u.size(); i < u.size() + middle; i += 2) {
        if (word[i] == word[i + 1]) {
          blocks_ok = false;
          break;
        }
        y.push_back(word[i]);
      }
      if (!blocks_ok || !is_overlapfree(y)) continue;
      out.push_back({u, Word(std::move(y), 2), v});
    }
  }
  return out;
}

VerificationReport check_overlapfree_decompositions(std::size_t max_length) {
  VerificationReport r;
  r.check_name = "overlapfree-decomposition";
  AvoidancePredicate p;
  p.alphabet_size = 2;
  p.forbid_overlaps = true;
  std::size_t checked = 0;
  enumerate_avoiding(p, max_length, [&](WordView x) {
    if (x.empty()) return;
    ++checked;
    const auto found = decompose_overlapfree(x);
    if (found.empty()) {
      r.witnesses.push_back({"undecomposable", format_word(x), {}});
    }
    for (const Decomposition& d : found) {
      if (!validate(d, x)) {
        r.witnesses.push_back({"unsound", format_word(x),
                               {{"u", format_word(d.u)},
                                {"y", format_word(d.y)},
                                {"v", format_word(d.v)}}});
      }
    }
  });
  r.actual_count = checked;
  r.passed = r.witnesses.empty();
  return r;
}

bool validate(const InteriorOccurrence& o, const Morphism& m) {
  if (o.t.empty() || o.u.empty()) return false;
  const Word& ia = m.image(o.a);
  const Word& ib = m.image(o.b);
  const Word& ic = m.image(o.c);
  if (o.t.size() + ic.size() + o.u.size() != ia.size() + ib.size()) return false;
  const auto at = [&](std::size_t i) { return i < ia.size() ? ia[i] : ib[i - ia.size()]; };
  std::size_t i = 0;
  for (Letter l : o.t) if (at(i++) != l) return false;
  for (Letter l : ic) if (at(i++) != l) return false;
  for (Letter l : o.u) if (at(i++) != l) return false;
  return o.u_prefixes_an_image == u_prefixes_some_image(m, o.u);
}

bool validate(const Synchronization& s, const Morphism& m) {
  if (s.a == s.c || s.b == s.c || s.s.empty() || s.v.empty()) return false;
  return m.image(s.a) == s.s + s.t && m.image(s.b) == s.u + s.v && m.image(s.c) == s.s + s.v;
}

bool validate(const Decomposition& d, WordView x) {
  const auto allowed = [](const Word& w) {
    return w.size() <= 2 && (w.size() < 2 || w[0] == w[1]);
  };
  if (!allowed(d.u) || !allowed(d.v)) return false;
  if (d.u.size() + 2 * d.y.size() + d.v.size() != x.size()) return false;
  for (std::size_t i = 0; i < d.u.size(); ++i) {
    if (x[i] != d.u[i]) return false;
  }
  for (std::size_t i = 0; i < d.y.size(); ++i) {
    const std::size_t at = d.u.size() + 2 * i;
    if (d.y[i] > 1 || x[at] != d.y[i] || x[at + 1] != 1 - d.y[i]) return false;
  }
  const std::size_t tail = x.size() - d.v.size();
  for (std::size_t i = 0; i < d.v.size(); ++i) {
    if (x[tail + i] != d.v[i]) return false;
  }
  return is_overlapfree(d.y);
}

namespace {

const std::vector<CheckInfo>& catalog() {
  static const std::vector<CheckInfo> kCatalog{
      {"factor-closure-h", {"factor-closure"},
       "h images and seams avoid 12, 13, 21, 32, 231, 10302",
       [](const Morphism& h, const Morphism&) {
         auto r = check_factor_closure(h, factor_sets::quaternary_all());
         r.check_name = "factor-closure-h";
         return r;
       }},
      {"short-words-squarefree-h", {"enum-h"},
       "h(w) squarefree for the 49 valid 5-letter words",
       [](const Morphism& h, const Morphism&) { return check_case1_h(h); }},
      {"short-words-square-bound-g", {"enum-g"},
       "g(w) has no square with root >= 4 for the 41 valid 5-letter words",
       [](const Morphism&, const Morphism& g) { return check_case1_g(g); }},
      {"interior-occurrences-h", {"interior-h"},
       "the only nontrivial h(ab) = t h(c) u is h(31) = 020301 h(2) 0102",
       [](const Morphism& h, const Morphism&) { return check_interior_h(h); }},
      {"synchronization-h", {"sync-h"},
       "h(a) = st, h(b) = uv, h(c) = sv forces a = c or b = c",
       [](const Morphism& h, const Morphism&) { return check_synchronization_h(h); }},
      {"interior-occurrences-g", {"interior-g"},
       "exactly three nontrivial g(ab) = t g(c) u over admissible pairs",
       [](const Morphism&, const Morphism& g) { return check_interior_g(g); }},
      {"synchronization-g", {"sync-g"},
       "exactly one exceptional split for g: a=2 b=1 c=3",
       [](const Morphism&, const Morphism& g) { return check_synchronization_g(g); }},
      {"one-alpha-three-alpha-two", {"alpha"},
       "every 1 a 3 a 2 has a square or a forbidden factor",
       [](const Morphism&, const Morphism&) { return check_alpha_lemma(); }},
      {"g-forbidden-images", {},
       "g(12), g(13), g(21), g(32), g(231), g(10302) carry long squares or a cube",
       [](const Morphism&, const Morphism& g) { return check_g_forbidden_images(g); }},
      {"g-cube-shortlist", {},
       "no cube with root length <= 3 in g(w) for the 16 valid 3-letter words",
       [](const Morphism&, const Morphism& g) { return check_g_cube_shortlist(g); }},
      {"overlapfree-decomposition", {},
       "every overlap-free binary word of length <= 20 is u mu(y) v",
       [](const Morphism&, const Morphism&) { return check_overlapfree_decompositions(20); }},
  };
  return kCatalog;
}

}  // namespace

std::span<const CheckInfo> check_catalog() { return catalog(); }

const CheckInfo* find_check(std::string_view name_or_alias) {
  for (const CheckInfo& info : catalog()) {
    if (info.name == name_or_alias ||
        std::find(info.aliases.begin(), info.aliases.end(), name_or_alias) != info.aliases.end()) {
      return &info;
    }
  }
  return nullptr;
}

VerificationReport run_check(const CheckInfo& check, const Morphism& h, const Morphism& g) {
  return check.run(h, g);
}

std::vector<VerificationReport> run_all(const Morphism& h, const Morphism& g) {
  std::vector<VerificationReport> reports;
  for (const CheckInfo& info : catalog()) reports.push_back(run_check(info, h, g));
  return reports;
}

bool all_passed(std::span<const VerificationReport> reports) {
  return !reports.empty() && std::all_of(reports.begin(), reports.end(),
                                         [](const VerificationReport& r) { return r.passed; });
}

}  // namespace repwords
