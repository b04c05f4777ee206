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

#ifndef LEXMINER_EVAL_HPP_INCLUDED
#define LEXMINER_EVAL_HPP_INCLUDED

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lexminer/error.hpp"
#include "lexminer/retrieval.hpp"

namespace lexminer {

/// Either a labeled query (precision) or a query plus a paraphrase of it (recall).
struct EvalCase {
  std::string query_text;
  std::optional<std::string> expected_id;
  std::optional<std::string> paraphrase_of;
};

struct EvalRow {
  std::string query_text;
  std::string kind;  // "precision" | "recall"
  std::vector<std::string> top_ids;
  std::vector<std::string> paraphrase_top_ids;  // recall rows only
  std::optional<std::string> expected_id;
  double value = 0.0;  // 1/0 hit for precision rows, Jaccard for recall rows
};

struct EvalReport {
  double precision_at_1 = 0.0;
  double recall_overlap = 0.0;
  std::size_t precision_cases = 0;
  std::size_t recall_cases = 0;
  std::vector<EvalRow> rows;
};

inline constexpr std::size_t kRecallDepth = 5;

/// |A ∩ B| / |A ∪ B|; two empty sets count as identical.
inline double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> sa(a.begin(), a.end());
  std::set<std::string> sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& x : sa) inter += sb.count(x);
  return static_cast<double>(inter) / static_cast<double>(sa.size() + sb.size() - inter);
}

inline std::vector<EvalCase> parse_eval_cases(std::string_view content) {
  std::vector<EvalCase> cases;
  try {
    auto doc = nlohmann::json::parse(content);
    if (!doc.is_array()) throw Error(ErrorCode::kInvalidCases, "cases file must be a JSON array");
    for (const auto& item : doc) {
      EvalCase c;
      c.query_text = item.at("query_text").get<std::string>();
      if (item.contains("expected_id")) c.expected_id = item["expected_id"].get<std::string>();
      if (item.contains("paraphrase_of")) c.paraphrase_of = item["paraphrase_of"].get<std::string>();
      if (c.expected_id.has_value() == c.paraphrase_of.has_value())
        throw Error(ErrorCode::kInvalidCases,
                    "case '" + c.query_text + "' needs exactly one of expected_id / paraphrase_of");
      cases.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidCases, e.what());
  }
  return cases;
}

namespace detail {

inline std::vector<std::string> top_ids(std::string_view query, const Index& index, const Lexicon& lex,
                                        const StopWordList& stops, std::size_t k) {
  SearchOptions opts;
  opts.top_k = k;
  auto outcome = search(query, index, lex, stops, opts);
  std::vector<std::string> ids;
  for (const auto& r : outcome.results) ids.push_back(r.report_id);
  return ids;
}

}  // namespace detail

inline EvalReport run_eval(const std::vector<EvalCase>& cases, const Index& index, const Lexicon& lex,
                           const StopWordList& stops) {
  EvalReport report;
  double hits = 0.0;
  double overlap = 0.0;
  for (const auto& c : cases) {
    EvalRow row;
    row.query_text = c.query_text;
    if (c.expected_id) {
      row.kind = "precision";
      row.expected_id = c.expected_id;
      row.top_ids = detail::top_ids(c.query_text, index, lex, stops, kRecallDepth);
      row.value = (!row.top_ids.empty() && row.top_ids.front() == *c.expected_id) ? 1.0 : 0.0;
      hits += row.value;
      ++report.precision_cases;
    } else {
      row.kind = "recall";
      row.top_ids = detail::top_ids(c.query_text, index, lex, stops, kRecallDepth);
      row.paraphrase_top_ids = detail::top_ids(*c.paraphrase_of, index, lex, stops, kRecallDepth);
      row.value = jaccard(row.top_ids, row.paraphrase_top_ids);
      overlap += row.value;
      ++report.recall_cases;
    }
    report.rows.push_back(std::move(row));
  }
  if (report.precision_cases > 0) report.precision_at_1 = hits / static_cast<double>(report.precision_cases);
  if (report.recall_cases > 0) report.recall_overlap = overlap / static_cast<double>(report.recall_cases);
  return report;
}

inline nlohmann::json eval_report_to_json(const EvalReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"query_text", r.query_text}, {"kind", r.kind}, {"top_ids", r.top_ids}, {"value", r.value}};
    if (r.expected_id) row["expected_id"] = *r.expected_id;
    if (r.kind == "recall") row["paraphrase_top_ids"] = r.paraphrase_top_ids;
    rows.push_back(std::move(row));
  }
  return {{"precision_at_1", report.precision_at_1},
          {"recall_overlap", report.recall_overlap},
          {"precision_cases", report.precision_cases},
          {"recall_cases", report.recall_cases},
          {"rows", std::move(rows)}};
}

}  // namespace lexminer

#endif  // LEXMINER_EVAL_HPP_INCLUDED
