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

#ifndef REPWORDS_JSON_HPP_
#define REPWORDS_JSON_HPP_

#include <nlohmann/json.hpp>

#include "repwords/repetition.hpp"
#include "repwords/search.hpp"
#include "repwords/verification.hpp"
#include "repwords/word.hpp"

// JSON forms of the reports. Keys are emitted in sorted order and no
// floating point values appear, so dump(parse(dump(x))) == dump(x).

namespace repwords {

// Words serialize as digit strings.
void to_json(nlohmann::json& j, const Word& w);
void from_json(const nlohmann::json& j, Word& w);

void to_json(nlohmann::json& j, const SquareOccurrence& s);
void to_json(nlohmann::json& j, const CubeOccurrence& c);
void to_json(nlohmann::json& j, const OverlapOccurrence& o);
void to_json(nlohmann::json& j, const RepetitionReport& r);

// {finite, leaf_count, height, nodes_visited, deepest_words[], maximal_avoiding[]}
void to_json(nlohmann::json& j, const SearchReport& r);
void from_json(const nlohmann::json& j, SearchReport& r);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

// {check_name, passed, expected_count, actual_count, witnesses[]}; absent
// counts are null.
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

}  // namespace repwords

#endif  // REPWORDS_JSON_HPP_
