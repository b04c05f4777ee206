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

#include <future>

#include "live_server.hpp"
#include "test_support.hpp"

namespace lexminer {
namespace {

using nlohmann::json;

struct Fixture {
  std::shared_ptr<const Repository> corpus;
  std::shared_ptr<const Index> index;
  std::shared_ptr<const Lexicon> lexicon;
};

Fixture toy3() {
  auto repo = std::make_shared<const Repository>(load_repository(testing::toy3_dir()));
  auto lex = std::make_shared<const Lexicon>(testing::default_lexicon());
  auto index = std::make_shared<const Index>(mine(*repo, *lex, StopWordList{}));
  return {repo, index, lex};
}

std::shared_ptr<const SearchService> service(const Fixture& f, bool with_corpus = true) {
  return std::make_shared<const SearchService>(f.index, f.lexicon, StopWordList{},
                                               with_corpus ? f.corpus : nullptr);
}

TEST(SearchService, Health) {
  auto f = toy3();
  auto reply = service(f)->health();
  EXPECT_EQ(reply.status, 200);
  EXPECT_EQ(reply.body["status"], "ok");
  EXPECT_EQ(reply.body["n_docs"], 3);
  EXPECT_EQ(reply.body["vocabulary_size"], f.index->stats().vocabulary_size());
}

TEST(SearchService, SearchOrderedAndBounded) {
  auto reply = service(toy3())->search(R"({"text":"fundamental rights violation","top_k":3})");
  ASSERT_EQ(reply.status, 200);
  const auto& results = reply.body["results"];
  ASSERT_FALSE(results.empty());
  EXPECT_LE(results.size(), 3u);
  for (std::size_t i = 1; i < results.size(); ++i)
    EXPECT_GE(results[i - 1]["score"].get<double>(), results[i]["score"].get<double>());
  EXPECT_EQ(results[0]["id"], "T-001");
  EXPECT_EQ(reply.body["empty_query"], false);
  const auto& m = results[0]["matched_terms"][0];
  EXPECT_EQ(m["term"], "rights_violation");
  EXPECT_DOUBLE_EQ(m["contribution"].get<double>(),
                   m["query_weight"].get<double>() * m["doc_weight"].get<double>());
  ASSERT_EQ(reply.body["query_tags"].size(), 3u);
  EXPECT_EQ(reply.body["query_tags"][0], (json{{"surface", "fundamental"}, {"pos", "JJ"}, {"chunk", "B-NP"}}));
}

TEST(SearchService, MatchesLibrarySearch) {
  auto f = toy3();
  auto svc = service(f);
  for (auto q : {"unlawful arrest by police officers", "school teacher transfer", "equal protection"}) {
    auto reply = svc->search(json{{"text", q}}.dump());
    auto direct = search(q, *f.index, *f.lexicon, StopWordList{});
    ASSERT_EQ(reply.body["results"].size(), direct.results.size());
    for (std::size_t i = 0; i < direct.results.size(); ++i) {
      EXPECT_EQ(reply.body["results"][i]["id"], direct.results[i].report_id);
      EXPECT_EQ(reply.body["results"][i]["score"].get<double>(), direct.results[i].score);
    }
  }
}

TEST(SearchService, StopWordOnlyQuery) {
  auto reply = service(toy3())->search(R"({"text":"the petitioner"})");
  EXPECT_EQ(reply.status, 200);
  EXPECT_TRUE(reply.body["results"].empty());
  EXPECT_EQ(reply.body["empty_query"], true);
}

TEST(SearchService, BadRequests) {
  auto svc = service(toy3());
  struct Case {
    const char* body;
    const char* code;
  } cases[] = {
      {R"({"text":"   "})", "EmptyQuery"},       {R"({"text":""})", "EmptyQuery"},
      {R"({})", "EmptyQuery"},                   {R"({"text":5})", "EmptyQuery"},
      {R"({"text":"a b","top_k":0})", "InvalidTopK"}, {R"({"text":"a b","top_k":101})", "InvalidTopK"},
      {R"({"text":"a b","top_k":"3"})", "InvalidTopK"}, {R"({"text":"a b","top_k":2.5})", "InvalidTopK"},
      {"not json", "BadRequest"},                {"[1]", "BadRequest"},
  };
  for (const auto& c : cases) {
    auto reply = svc->search(c.body);
    EXPECT_EQ(reply.status, 400) << c.body;
    EXPECT_EQ(reply.body["error"], c.code) << c.body;
    EXPECT_TRUE(reply.body["message"].is_string());
  }
  EXPECT_EQ(svc->search(R"({"text":"unlawful arrest","top_k":100})").status, 200);
  EXPECT_EQ(svc->search(R"({"text":"unlawful arrest","top_k":1})").status, 200);
}

TEST(SearchService, Unavailable) {
  SearchService none(nullptr, nullptr, StopWordList{});
  EXPECT_EQ(none.health().status, 503);
  EXPECT_EQ(none.search(R"({"text":"x y"})").status, 503);
  EXPECT_EQ(none.report("T-001").status, 503);

  SearchService empty(std::make_shared<const Index>(), std::make_shared<const Lexicon>(), StopWordList{});
  auto reply = empty.search(R"({"text":"unlawful arrest"})");
  EXPECT_EQ(reply.status, 503);
  EXPECT_EQ(reply.body["error"], "EmptyCorpus");
}

TEST(SearchService, Reports) {
  auto f = toy3();
  auto full = service(f)->report("T-001");
  EXPECT_EQ(full.status, 200);
  EXPECT_EQ(full.body["id"], "T-001");
  EXPECT_EQ(full.body["detail"], "Detail of the first toy case.");
  EXPECT_EQ(full.body["verdict"], "Application allowed. Compensation of Rs. 50,000 awarded.");

  auto meta_only = service(f, false)->report("T-003");
  EXPECT_EQ(meta_only.status, 200);
  EXPECT_EQ(meta_only.body["detail"], "");
  EXPECT_EQ(meta_only.body["head"], f.index->meta_for("T-003")->head);

  auto missing = service(f)->report("T-404");
  EXPECT_EQ(missing.status, 404);
  EXPECT_EQ(missing.body["error"], "NotFound");
}

TEST(LiveServer, Endpoints) {
  auto f = toy3();
  testing::LiveServer server(service(f));
  auto cli = server.client();

  auto health = cli.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(json::parse(health->body)["n_docs"], 3);
  EXPECT_NE(health->get_header_value("Content-Type").find("application/json"), std::string::npos);

  auto ok = cli.Post("/search", R"({"text":"unlawful arrest","top_k":2})", "application/json");
  ASSERT_TRUE(ok);
  EXPECT_EQ(ok->status, 200);
  EXPECT_LE(json::parse(ok->body)["results"].size(), 2u);

  auto empty = cli.Post("/search", R"({"text":"the petitioner"})", "application/json");
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->status, 200);
  EXPECT_EQ(json::parse(empty->body)["empty_query"], true);

  auto bad = cli.Post("/search", R"({"text":"  "})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(json::parse(bad->body)["error"], "EmptyQuery");

  auto report = cli.Get("/reports/T-002");
  ASSERT_TRUE(report);
  EXPECT_EQ(report->status, 200);
  EXPECT_EQ(json::parse(report->body)["detail"], "Detail of the second toy case.");

  auto missing = cli.Get("/reports/nope");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
}

TEST(LiveServer, EscapedReportId) {
  LawReport odd{"A/B 7?", "unlawful arrest by police officers", "detail", "Dismissed."};
  LawReport plain{"C-1", "school teacher transfer", "detail", ""};
  auto repo = std::make_shared<const Repository>(std::vector{odd, plain});
  auto lex = std::make_shared<const Lexicon>(testing::default_lexicon());
  auto index = std::make_shared<const Index>(mine(*repo, *lex, StopWordList{}));
  testing::LiveServer server(std::make_shared<const SearchService>(index, lex, StopWordList{}, repo));
  auto res = server.client().Get("/reports/A%2FB%207%3F");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["id"], "A/B 7?");
  EXPECT_EQ(json::parse(res->body)["verdict"], "Dismissed.");
}

TEST(LiveServer, Cors) {
  testing::LiveServer server(service(toy3()), "http://localhost:5173");
  auto cli = server.client();
  auto res = cli.Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
  auto pre = cli.Options("/search");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);
  EXPECT_NE(pre->get_header_value("Access-Control-Allow-Methods").find("POST"), std::string::npos);

  testing::LiveServer closed(service(toy3()));
  auto plain = closed.client().Get("/health");
  ASSERT_TRUE(plain);
  EXPECT_FALSE(plain->has_header("Access-Control-Allow-Origin"));
}

TEST(LiveServer, ConcurrentRequestsAgree) {
  auto f = toy3();
  testing::LiveServer server(service(f));
  const std::string body = R"({"text":"unlawful arrest by police officers"})";
  auto expected = service(f)->search(body).body.dump();
  std::vector<std::future<std::string>> calls;
  for (int i = 0; i < 16; ++i) {
    calls.push_back(std::async(std::launch::async, [&] {
      auto res = server.client().Post("/search", body, "application/json");
      return res ? json::parse(res->body).dump() : std::string("failed");
    }));
  }
  for (auto& c : calls) EXPECT_EQ(c.get(), expected);
}

}  // namespace
}  // namespace lexminer
