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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace lexminer {
namespace {

using testing::default_lexicon;

const Index& desk_index() {
  static const Index index = mine(load_repository(testing::desk_dir()), default_lexicon(), StopWordList{});
  return index;
}

TEST(Jaccard, Examples) {
  EXPECT_EQ(jaccard({"a", "b"}, {"b", "a"}), 1.0);
  EXPECT_EQ(jaccard({"a", "b"}, {"c"}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard({"a", "b", "c"}, {"b", "c", "d"}), 0.5);
  EXPECT_EQ(jaccard({}, {}), 1.0);
  EXPECT_EQ(jaccard({"a"}, {}), 0.0);
}

TEST(EvalCases, Parsing) {
  auto cases = parse_eval_cases(R"([{"query_text":"q","expected_id":"X"},{"query_text":"p","paraphrase_of":"r"}])");
  ASSERT_EQ(cases.size(), 2u);
  EXPECT_EQ(cases[0].expected_id, "X");
  EXPECT_FALSE(cases[0].paraphrase_of);
  EXPECT_EQ(cases[1].paraphrase_of, "r");
  for (auto bad : {R"({})", R"([{"query_text":"q"}])", R"([{"query_text":"q","expected_id":"X","paraphrase_of":"r"}])",
                   R"([{"expected_id":"X"}])", "[", R"([{"query_text":1,"expected_id":"X"}])"}) {
    try {
      parse_eval_cases(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidCases) << bad;
    }
  }
}

TEST(RunEval, RowScoring) {
  const auto& index = desk_index();
  const auto& head = index.meta_for("FR-001")->head;
  std::vector<EvalCase> cases = {
      {head, std::string("FR-001"), std::nullopt},
      {head, std::string("FR-002"), std::nullopt},
      {head, std::nullopt, head},
      {"the petitioner and the court", std::nullopt, "unlawful arrest by police officers"},
  };
  auto report = run_eval(cases, index, default_lexicon(), StopWordList{});
  ASSERT_EQ(report.rows.size(), 4u);
  EXPECT_EQ(report.rows[0].value, 1.0);
  EXPECT_EQ(report.rows[1].value, 0.0);
  EXPECT_EQ(report.rows[2].value, 1.0);
  EXPECT_EQ(report.rows[3].value, 0.0);
  EXPECT_LE(report.rows[0].top_ids.size(), kRecallDepth);
  EXPECT_EQ(report.precision_cases, 2u);
  EXPECT_EQ(report.recall_cases, 2u);
  EXPECT_DOUBLE_EQ(report.precision_at_1, 0.5);
  EXPECT_DOUBLE_EQ(report.recall_overlap, 0.5);
}

TEST(RunEval, DeskFixture) {
  auto cases = parse_eval_cases(text::read_file(testing::fixture_dir() / "desk_eval_cases.json"));
  auto report = run_eval(cases, desk_index(), default_lexicon(), StopWordList{});
  EXPECT_EQ(report.precision_cases, 10u);
  EXPECT_GE(report.recall_cases, 10u);
  EXPECT_GE(report.precision_at_1, 0.8);
  EXPECT_GE(report.recall_overlap, 0.8);
  auto again = run_eval(cases, desk_index(), default_lexicon(), StopWordList{});
  EXPECT_EQ(eval_report_to_json(report).dump(), eval_report_to_json(again).dump());
}

TEST(RunEval, JsonShape) {
  std::vector<EvalCase> cases = {{"unlawful arrest", std::string("FR-001"), std::nullopt},
                                 {"unlawful arrest", std::nullopt, "unlawful detention"}};
  auto doc = eval_report_to_json(run_eval(cases, desk_index(), default_lexicon(), StopWordList{}));
  EXPECT_TRUE(doc.contains("precision_at_1"));
  EXPECT_TRUE(doc.contains("recall_overlap"));
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["kind"], "precision");
  EXPECT_EQ(doc["rows"][0]["expected_id"], "FR-001");
  EXPECT_EQ(doc["rows"][1]["kind"], "recall");
  EXPECT_TRUE(doc["rows"][1].contains("paraphrase_top_ids"));
}

}  // namespace
}  // namespace lexminer
