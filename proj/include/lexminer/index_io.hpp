// Copyright 2026 The LexMiner Authors.
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

#ifndef LEXMINER_INDEX_IO_HPP_INCLUDED
#define LEXMINER_INDEX_IO_HPP_INCLUDED

#include <cmath>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lexminer/error.hpp"
#include "lexminer/text.hpp"
#include "lexminer/weighting.hpp"

// Index persistence: one JSON document, keys sorted at every level so that
// mining an unchanged corpus reproduces the file byte for byte.
namespace lexminer {

inline constexpr int kIndexFormatVersion = 1;

inline nlohmann::json index_to_json(const Index& index) {
  nlohmann::json df = nlohmann::json::object();
  for (const auto& [term, d] : index.stats().df) df[term.key()] = d;

  nlohmann::json vectors = nlohmann::json::object();
  for (const auto& vec : index.vectors()) {
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [term, w] : vec.weights) weights[term.key()] = w;
    vectors[vec.owner] = std::move(weights);
  }

  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [id, m] : index.meta()) meta[id] = {{"head", m.head}, {"verdict", m.verdict}};

  return {{"version", kIndexFormatVersion}, {"n_docs", index.n_docs()}, {"df", std::move(df)},
          {"vectors", std::move(vectors)},   {"meta", std::move(meta)}};
}

inline std::string serialize_index(const Index& index) { return index_to_json(index).dump(2) + "\n"; }

namespace detail {

inline Term term_from_key_or_throw(std::string_view key) {
  auto term = Term::from_key(key);
  if (!term) throw Error(ErrorCode::kInvalidIndex, "malformed term key '" + std::string(key) + "'");
  return *term;
}

}  // namespace detail

inline Index index_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::kInvalidIndex, "index must be a JSON object");
    if (doc.at("version").get<int>() != kIndexFormatVersion)
      throw Error(ErrorCode::kInvalidIndex, "unsupported index version " + doc.at("version").dump());

    CorpusStats stats;
    stats.n_docs = doc.at("n_docs").get<std::size_t>();
    for (const auto& [key, d] : doc.at("df").items()) {
      auto count = d.get<std::size_t>();
      if (count == 0 || count > stats.n_docs)
        throw Error(ErrorCode::kInvalidIndex, "document frequency out of range for '" + key + "'");
      stats.df.emplace(detail::term_from_key_or_throw(key), count);
    }

    std::vector<TermVector> vectors;
    for (const auto& [id, weights] : doc.at("vectors").items()) {
      TermVector vec{id, {}};
      for (const auto& [key, w] : weights.items()) {
        double value = w.get<double>();
        if (!std::isfinite(value) || value < 0.0)
          throw Error(ErrorCode::kInvalidIndex, "invalid weight for '" + key + "' in '" + id + "'");
        if (value > 0.0) vec.weights.emplace(detail::term_from_key_or_throw(key), value);
      }
      vectors.push_back(std::move(vec));
    }
    if (vectors.size() != stats.n_docs)
      throw Error(ErrorCode::kInvalidIndex, "n_docs does not match the number of vectors");

    std::map<std::string, ReportMeta> meta;
    for (const auto& [id, m] : doc.at("meta").items())
      meta.emplace(id, ReportMeta{m.at("head").get<std::string>(), m.at("verdict").get<std::string>()});

    return Index(std::move(stats), std::move(vectors), std::move(meta));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidIndex, e.what());
  }
}

inline Index parse_index(std::string_view content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidIndex, e.what());
  }
  return index_from_json(doc);
}

inline void save_index(const Index& index, const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  text::write_file(path, serialize_index(index));
}

inline Index load_index(const std::filesystem::path& path) { return parse_index(text::read_file(path)); }

}  // namespace lexminer

#endif  // LEXMINER_INDEX_IO_HPP_INCLUDED
