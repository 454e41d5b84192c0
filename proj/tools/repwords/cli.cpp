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

#include "repwords/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "repwords/errors.hpp"
#include "repwords/json.hpp"
#include "repwords/morphism.hpp"
#include "repwords/repetition.hpp"
#include "repwords/search.hpp"
#include "repwords/stream.hpp"
#include "repwords/verification.hpp"
#include "repwords/word.hpp"

namespace repwords::cli {
namespace {

enum class Format { text, json };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}};

const std::vector<std::string> kGeneratorNames{"h-fixed-point", "g-of-h", "thue-morse"};

WordStream make_stream(const std::string& name) {
  if (name == "h-fixed-point") return WordStream(morphisms::squarefree_quaternary(), 0);
  if (name == "g-of-h") {
    return WordStream(morphisms::cubefree_binary(), morphisms::squarefree_quaternary(), 0);
  }
  return WordStream(morphisms::thue_morse(), 0);
}

void print_list(std::ostream& out, const std::vector<Word>& words, std::size_t limit) {
  const std::size_t shown = std::min(limit, words.size());
  for (std::size_t i = 0; i < shown; ++i) out << "  " << words[i] << '\n';
  if (shown < words.size()) out << "  ... (" << words.size() - shown << " more)\n";
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string name;
  std::size_t length = 0;
  Format format = Format::text;
};

int do_generate(const GenerateArgs& args, std::ostream& out) {
  WordStream stream = make_stream(args.name);
  if (args.format == Format::json) {
    const nlohmann::json j = {
        {"name", args.name}, {"length", args.length}, {"word", stream.next(args.length)}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  constexpr std::size_t kChunk = 1 << 16;
  for (std::size_t left = args.length; left > 0;) {
    const std::size_t n = std::min(left, kChunk);
    out << stream.next(n);
    left -= n;
  }
  if (args.length > 0) out << '\n';
  return kExitOk;
}

// --- check ----------------------------------------------------------------

struct CheckArgs {
  std::optional<std::string> word;
  std::optional<std::string> file;
  std::optional<std::string> named;
  std::size_t length = 0;
  unsigned alphabet = kMaxAlphabetSize;
  std::optional<std::size_t> min_square_root;
  bool squarefree = false;
  bool cubes = false;
  bool overlaps = false;
  std::optional<std::string> factors;
  std::size_t max_witnesses = 10;
  Format format = Format::text;
};

std::vector<Word> read_lines(std::istream& in, unsigned alphabet) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; })) {
      continue;
    }
    words.push_back(parse_word(line, alphabet));
  }
  return words;
}

std::vector<Word> load_words(const CheckArgs& args, std::istream& in) {
  if (args.word) return {parse_word(*args.word, args.alphabet)};
  if (args.named) return {make_stream(*args.named).next(args.length)};
  if (args.file) {
    std::ifstream file(*args.file);
    if (!file) throw ParseError("cannot open " + *args.file);
    return read_lines(file, args.alphabet);
  }
  return read_lines(in, args.alphabet);
}

struct CheckOutcome {
  std::size_t length = 0;
  RepetitionReport repetitions;
  std::vector<FactorHit> factor_hits;
  bool passed = true;
};

CheckOutcome evaluate(const Word& w, const std::optional<std::size_t>& min_root, bool cubes,
                      bool overlaps, const std::optional<FactorSet>& factors) {
  CheckOutcome o;
  o.length = w.size();
  o.repetitions = analyze_repetitions(w, min_root.value_or(1));
  if (factors) {
    for (const Word& f : factors->members()) {
      if (auto pos = find_factor(w, f)) o.factor_hits.push_back({f, *pos});
    }
  }
  o.passed = !(min_root && !o.repetitions.squares.empty()) &&
             !(cubes && !o.repetitions.cubes.empty()) &&
             !(overlaps && !o.repetitions.overlaps.empty()) && o.factor_hits.empty();
  return o;
}

template <typename T, typename Print>
void print_occurrences(std::ostream& out, std::string_view label, const std::vector<T>& items,
                       std::size_t limit, Print print) {
  out << "  " << label << ": " << items.size() << '\n';
  const std::size_t shown = std::min(limit, items.size());
  for (std::size_t i = 0; i < shown; ++i) {
    out << "    ";
    print(items[i]);
    out << '\n';
  }
  if (shown < items.size()) out << "    ... (" << items.size() - shown << " more)\n";
}

int do_check(const CheckArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Word> words;
  std::optional<FactorSet> factors;
  try {
    words = load_words(args, in);
    if (args.factors) factors = FactorSet::parse(*args.factors, args.alphabet);
  } catch (const std::exception& e) {
    err << "repwords check: " << e.what() << '\n';
    return kExitInputError;
  }
  if (words.empty()) {
    err << "repwords check: no word given\n";
    return kExitInputError;
  }
  for (const Word& w : words) {
    if (w.size() > kMaxCheckLength) {
      err << "repwords check: word of length " << w.size() << " exceeds the limit of "
          << kMaxCheckLength << " letters\n";
      return kExitInputError;
    }
  }

  std::optional<std::size_t> min_root = args.min_square_root;
  if (args.squarefree) min_root = 1;

  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Word& w = words[k];
    const CheckOutcome o = evaluate(w, min_root, args.cubes, args.overlaps, factors);
    all_pass = all_pass && o.passed;
    if (args.format == Format::json) {
      nlohmann::json hits = nlohmann::json::array();
      for (const FactorHit& h : o.factor_hits) {
        hits.push_back({{"factor", h.factor}, {"position", h.position}});
      }
      reports.push_back({{"length", o.length},
                         {"passed", o.passed},
                         {"repetitions", o.repetitions},
                         {"factor_hits", hits}});
      continue;
    }
    out << "word " << k + 1 << ": length " << o.length << ", "
        << (o.passed ? "pass" : "violations found") << '\n';
    out << "  max_square_root: " << o.repetitions.max_square_root << '\n';
    const std::string square_label =
        "squares (root >= " + std::to_string(min_root.value_or(1)) + ")";
    print_occurrences(out, square_label, o.repetitions.squares, args.max_witnesses,
                      [&](const SquareOccurrence& s) {
                        out << "position " << s.position << " root " << s.root_length << " "
                            << w.substr(s.position, s.root_length);
                      });
    print_occurrences(out, "cubes", o.repetitions.cubes, args.max_witnesses,
                      [&](const CubeOccurrence& c) {
                        out << "position " << c.position << " root " << c.root_length << " "
                            << w.substr(c.position, c.root_length);
                      });
    print_occurrences(out, "overlaps", o.repetitions.overlaps, args.max_witnesses,
                      [&](const OverlapOccurrence& v) {
                        out << "position " << v.position << " period " << v.period << " "
                            << w.substr(v.position, 2 * v.period + 1);
                      });
    if (factors) {
      print_occurrences(out, "forbidden factors", o.factor_hits, args.max_witnesses,
                        [&](const FactorHit& h) {
                          out << h.factor << " at position " << h.position;
                        });
    }
  }
  if (args.format == Format::json) out << reports.dump(2) << '\n';
  return all_pass ? kExitOk : kExitViolation;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> only;
  bool list = false;
  std::size_t max_witnesses = 10;
  Format format = Format::text;
};

void print_report(std::ostream& out, const VerificationReport& r, std::size_t limit) {
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name;
  if (r.expected_count || r.actual_count) {
    out << " (";
    if (r.expected_count) out << "expected " << *r.expected_count << ", ";
    out << "actual " << (r.actual_count ? std::to_string(*r.actual_count) : "-") << ")";
  }
  out << '\n';
  const std::size_t shown = std::min(limit, r.witnesses.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const Witness& w = r.witnesses[i];
    out << "    " << w.kind << " " << w.subject << ":";
    for (const auto& [key, value] : w.details) out << " " << key << "=" << value;
    out << '\n';
  }
  if (shown < r.witnesses.size()) {
    out << "    ... (" << r.witnesses.size() - shown << " more)\n";
  }
}

int do_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.list) {
    for (const CheckInfo& info : check_catalog()) {
      out << info.name;
      for (std::string_view alias : info.aliases) out << " (" << alias << ")";
      out << "\n    " << info.description << '\n';
    }
    return kExitOk;
  }
  std::vector<const CheckInfo*> selected;
  if (args.only.empty()) {
    for (const CheckInfo& info : check_catalog()) selected.push_back(&info);
  }
  for (const std::string& name : args.only) {
    const CheckInfo* info = find_check(name);
    if (info == nullptr) {
      err << "repwords verify: unknown check '" << name << "' (see --list)\n";
      return kExitInputError;
    }
    selected.push_back(info);
  }

  std::vector<VerificationReport> reports;
  for (const CheckInfo* info : selected) reports.push_back(run_check(*info));

  if (args.format == Format::json) {
    out << nlohmann::json(reports).dump(2) << '\n';
  } else {
    for (const VerificationReport& r : reports) print_report(out, r, args.max_witnesses);
    const auto passed = std::count_if(reports.begin(), reports.end(),
                                      [](const VerificationReport& r) { return r.passed; });
    out << passed << "/" << reports.size() << " checks passed\n";
  }
  return all_passed(reports) ? kExitOk : kExitViolation;
}

// --- search ---------------------------------------------------------------

struct SearchArgs {
  unsigned alphabet = 2;
  bool squarefree = false;
  std::optional<std::size_t> max_square_root;
  bool no_cubes = false;
  bool no_overlaps = false;
  std::optional<std::string> factors;
  std::optional<unsigned> fix_first;
  std::size_t depth_cap = 64;
  Traversal traversal = Traversal::depth_first;
  std::size_t max_words = 20;
  Format format = Format::text;
};

int do_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  AvoidancePredicate p;
  SearchOptions options;
  try {
    p.alphabet_size = args.alphabet;
    if (args.max_square_root) p.min_forbidden_square_root = *args.max_square_root + 1;
    if (args.squarefree) p.min_forbidden_square_root = 1;
    p.forbid_cubes = args.no_cubes;
    p.forbid_overlaps = args.no_overlaps;
    if (args.factors) p.forbidden_factors = FactorSet::parse(*args.factors, args.alphabet);
    if (args.fix_first) {
      if (*args.fix_first >= args.alphabet) throw DomainError("--fix-first is outside the alphabet");
      options.fix_first = static_cast<Letter>(*args.fix_first);
    }
    options.depth_cap = args.depth_cap;
    options.traversal = args.traversal;
  } catch (const std::exception& e) {
    err << "repwords search: " << e.what() << '\n';
    return kExitInputError;
  }

  const SearchReport report = search(p, options);
  if (args.format == Format::json) {
    out << nlohmann::json(report).dump(2) << '\n';
  } else {
    out << "finite: " << (report.finite ? "true" : "false (depth cap reached; lower bound only)")
        << '\n';
    out << "leaf_count: " << report.leaf_count << '\n';
    out << "height: " << report.height << '\n';
    out << "nodes_visited: " << report.nodes_visited << '\n';
    out << "deepest_words: " << report.deepest_words.size() << '\n';
    print_list(out, report.deepest_words, args.max_words);
    out << "maximal_avoiding: " << report.maximal_avoiding.size();
    if (!report.maximal_avoiding.empty()) {
      out << " of length " << report.maximal_avoiding.front().size();
    }
    out << '\n';
    print_list(out, report.maximal_avoiding, args.max_words);
  }
  return report.finite ? kExitOk : kExitCapReached;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generate, check and search words avoiding squares, cubes and overlaps",
               "repwords"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Print a prefix of one of the built-in words");
  generate->add_option("name", gen.name, "h-fixed-point | g-of-h | thue-morse")
      ->required()
      ->check(CLI::IsMember(kGeneratorNames));
  generate->add_option("length", gen.length, "Number of letters")->required();
  generate->add_option("--format", gen.format, "text | json")
      ->transform(CLI::CheckedTransformer(kFormats));

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Report repetitions in words (stdin by default)");
  auto* source_word = check->add_option("--word", chk.word, "Word given inline");
  auto* source_file = check->add_option("--file", chk.file, "File with one word per line");
  auto* source_named = check->add_option("--named", chk.named, "Built-in word to generate")
                           ->check(CLI::IsMember(kGeneratorNames));
  source_word->excludes(source_file, source_named);
  source_file->excludes(source_named);
  check->add_option("--length", chk.length, "Prefix length for --named")->needs(source_named);
  check->add_option("--alphabet", chk.alphabet, "Alphabet size for parsing")
      ->check(CLI::Range(1u, kMaxAlphabetSize));
  check->add_option("--min-square-root", chk.min_square_root,
                    "Squares with root length >= R are violations")
      ->check(CLI::PositiveNumber);
  check->add_flag("--squarefree", chk.squarefree, "Every square is a violation");
  check->add_flag("--cubes", chk.cubes, "Cubes are violations");
  check->add_flag("--overlaps", chk.overlaps, "Overlaps are violations");
  check->add_option("--factors", chk.factors, "Forbidden factors, e.g. 12,13,21");
  check->add_option("--max-witnesses", chk.max_witnesses, "Occurrences listed per kind (text)");
  check->add_option("--format", chk.format, "text | json")
      ->transform(CLI::CheckedTransformer(kFormats));

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run the built-in finite verification checks");
  verify->add_option("--only", ver.only, "Run only the named check(s)");
  verify->add_flag("--list", ver.list, "List check names and exit");
  verify->add_option("--max-witnesses", ver.max_witnesses, "Witnesses listed per check (text)");
  verify->add_option("--format", ver.format, "text | json")
      ->transform(CLI::CheckedTransformer(kFormats));

  SearchArgs srch;
  const std::map<std::string, Traversal> traversals{{"dfs", Traversal::depth_first},
                                                    {"bfs", Traversal::breadth_first},
                                                    {"parallel", Traversal::parallel}};
  auto* search_cmd = app.add_subcommand("search", "Exhaustive avoidance-tree search");
  search_cmd->add_option("--alphabet", srch.alphabet, "Alphabet size")
      ->check(CLI::Range(1u, kMaxAlphabetSize));
  search_cmd->add_flag("--squarefree", srch.squarefree, "Forbid every square");
  search_cmd->add_option("--max-square-root", srch.max_square_root,
                         "Tolerate squares with root <= R; forbid longer roots");
  search_cmd->add_flag("--no-cubes", srch.no_cubes, "Forbid cubes");
  search_cmd->add_flag("--no-overlaps", srch.no_overlaps, "Forbid overlaps");
  search_cmd->add_option("--factors", srch.factors, "Forbidden factors, e.g. 12,13,21");
  search_cmd->add_option("--fix-first", srch.fix_first, "Label the root with this letter");
  search_cmd->add_option("--depth-cap", srch.depth_cap, "Stop expanding at this depth")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--traversal", srch.traversal, "dfs | bfs | parallel")
      ->transform(CLI::CheckedTransformer(traversals));
  search_cmd->add_option("--max-words", srch.max_words, "Words listed per kind (text)");
  search_cmd->add_option("--format", srch.format, "text | json")
      ->transform(CLI::CheckedTransformer(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*generate) return do_generate(gen, out);
    if (*check) return do_check(chk, in, out, err);
    if (*verify) return do_verify(ver, out, err);
    return do_search(srch, out, err);
  } catch (const std::exception& e) {
    err << "repwords: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv{"repwords"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace repwords::cli
