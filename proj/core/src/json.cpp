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

#include "repwords/json.hpp"

#include <string>

namespace repwords {
namespace {

nlohmann::json optional_count(const std::optional<std::size_t>& n) {
  return n ? nlohmann::json(*n) : nlohmann::json(nullptr);
}

std::optional<std::size_t> read_optional_count(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

}  // namespace

void to_json(nlohmann::json& j, const Word& w) { j = format_word(w); }

void from_json(const nlohmann::json& j, Word& w) { w = parse_word(j.get<std::string>()); }

void to_json(nlohmann::json& j, const SquareOccurrence& s) {
  j = {{"position", s.position}, {"root_length", s.root_length}};
}

void to_json(nlohmann::json& j, const CubeOccurrence& c) {
  j = {{"position", c.position}, {"root_length", c.root_length}};
}

void to_json(nlohmann::json& j, const OverlapOccurrence& o) {
  j = {{"position", o.position}, {"period", o.period}};
}

void to_json(nlohmann::json& j, const RepetitionReport& r) {
  j = {{"squares", r.squares},
       {"cubes", r.cubes},
       {"overlaps", r.overlaps},
       {"max_square_root", r.max_square_root}};
}

void to_json(nlohmann::json& j, const SearchReport& r) {
  j = {{"finite", r.finite},
       {"leaf_count", r.leaf_count},
       {"height", r.height},
       {"nodes_visited", r.nodes_visited},
       {"deepest_words", r.deepest_words},
       {"maximal_avoiding", r.maximal_avoiding}};
}

void from_json(const nlohmann::json& j, SearchReport& r) {
  j.at("finite").get_to(r.finite);
  j.at("leaf_count").get_to(r.leaf_count);
  j.at("height").get_to(r.height);
  j.at("nodes_visited").get_to(r.nodes_visited);
  j.at("deepest_words").get_to(r.deepest_words);
  j.at("maximal_avoiding").get_to(r.maximal_avoiding);
}

void to_json(nlohmann::json& j, const Witness& w) {
  nlohmann::json details = nlohmann::json::object();
  for (const auto& [key, value] : w.details) details[key] = value;
  j = {{"kind", w.kind}, {"subject", w.subject}, {"details", details}};
}

void from_json(const nlohmann::json& j, Witness& w) {
  j.at("kind").get_to(w.kind);
  j.at("subject").get_to(w.subject);
  w.details.clear();
  for (const auto& [key, value] : j.at("details").items()) {
    w.details.emplace_back(key, value.get<std::string>());
  }
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"check_name", r.check_name},
       {"passed", r.passed},
       {"expected_count", optional_count(r.expected_count)},
       {"actual_count", optional_count(r.actual_count)},
       {"witnesses", r.witnesses}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("check_name").get_to(r.check_name);
  j.at("passed").get_to(r.passed);
  r.expected_count = read_optional_count(j.at("expected_count"));
  r.actual_count = read_optional_count(j.at("actual_count"));
  j.at("witnesses").get_to(r.witnesses);
}

}  // namespace repwords
