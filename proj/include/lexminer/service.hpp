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

#ifndef LEXMINER_SERVICE_HPP_INCLUDED
#define LEXMINER_SERVICE_HPP_INCLUDED

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <httplib.h>
#include <json.hpp>

#include "lexminer/corpus_store.hpp"
#include "lexminer/error.hpp"
#include "lexminer/retrieval.hpp"

// Read-only HTTP/JSON facade over a mined index.
namespace lexminer {

inline constexpr std::size_t kMaxTopK = 100;
inline constexpr std::size_t kDefaultTopK = 10;

struct Reply {
  int status = 200;
  nlohmann::json body;
};

inline Reply error_reply(int status, std::string_view code, std::string_view message) {
  return {status, {{"error", code}, {"message", message}}};
}

inline nlohmann::json search_result_to_json(const SearchResult& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& m : r.matched_terms) {
    terms.push_back({{"term", m.term.key()},
                     {"query_weight", m.query_weight},
                     {"doc_weight", m.doc_weight},
                     {"contribution", m.contribution}});
  }
  return {{"id", r.report_id}, {"score", r.score}, {"head", r.head}, {"verdict", r.verdict},
          {"matched_terms", std::move(terms)}};
}

inline nlohmann::json search_outcome_to_json(const SearchOutcome& outcome) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : outcome.results) results.push_back(search_result_to_json(r));
  nlohmann::json tags = nlohmann::json::array();
  for (const auto& t : outcome.query_tokens)
    tags.push_back({{"surface", t.surface}, {"pos", to_string(t.pos)}, {"chunk", to_string(t.chunk)}});
  return {{"results", std::move(results)}, {"empty_query", outcome.empty_query}, {"query_tags", std::move(tags)}};
}

/// Request handling independent of the transport. Never mutates its state,
/// so one instance may serve any number of concurrent requests.
class SearchService {
 public:
  SearchService(std::shared_ptr<const Index> index, std::shared_ptr<const Lexicon> lexicon, StopWordList stops,
                std::shared_ptr<const Repository> corpus = nullptr)
      : index_(std::move(index)), lexicon_(std::move(lexicon)), stops_(std::move(stops)), corpus_(std::move(corpus)) {}

  Reply health() const {
    if (!index_) return error_reply(503, "IndexNotLoaded", "no index is loaded");
    return {200, {{"status", "ok"}, {"n_docs", index_->n_docs()}, {"vocabulary_size", index_->stats().vocabulary_size()}}};
  }

  Reply search(std::string_view body) const {
    if (!index_ || !lexicon_) return error_reply(503, "IndexNotLoaded", "no index is loaded");

    nlohmann::json request;
    try {
      request = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
      return error_reply(400, "BadRequest", "body is not valid JSON");
    }
    if (!request.is_object()) return error_reply(400, "BadRequest", "body must be a JSON object");

    auto text_it = request.find("text");
    if (text_it == request.end() || !text_it->is_string() || text::trim(text_it->get_ref<const std::string&>()).empty())
      return error_reply(400, "EmptyQuery", "text must be a non-empty string");

    std::size_t top_k = kDefaultTopK;
    if (auto k = request.find("top_k"); k != request.end() && !k->is_null()) {
      if (!k->is_number_integer()) return error_reply(400, "InvalidTopK", "top_k must be an integer");
      auto v = k->get<long long>();
      if (v < 1 || v > static_cast<long long>(kMaxTopK))
        return error_reply(400, "InvalidTopK", "top_k must be between 1 and 100");
      top_k = static_cast<std::size_t>(v);
    }

    try {
      SearchOptions opts;
      opts.top_k = top_k;
      auto outcome = lexminer::search(text_it->get<std::string>(), *index_, *lexicon_, stops_, opts);
      return {200, search_outcome_to_json(outcome)};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kEmptyCorpus) return error_reply(503, "EmptyCorpus", e.what());
      return error_reply(500, error_code_name(e.code()), e.what());
    }
  }

  Reply report(std::string_view id) const {
    if (!index_) return error_reply(503, "IndexNotLoaded", "no index is loaded");
    if (corpus_) {
      if (const auto* r = corpus_->find(id))
        return {200, {{"id", r->id}, {"head", r->head}, {"detail", r->detail}, {"verdict", r->verdict}}};
    }
    if (const auto* m = index_->meta_for(id))
      return {200, {{"id", std::string(id)}, {"head", m->head}, {"detail", ""}, {"verdict", m->verdict}}};
    return error_reply(404, "NotFound", "no report with id '" + std::string(id) + "'");
  }

 private:
  std::shared_ptr<const Index> index_;
  std::shared_ptr<const Lexicon> lexicon_;
  StopWordList stops_;
  std::shared_ptr<const Repository> corpus_;
};

inline void apply_reply(const Reply& reply, httplib::Response& res) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json; charset=utf-8");
}

/// Registers GET /health, POST /search and GET /reports/{id}. A non-empty
/// `allow_origin` enables CORS for that origin.
inline void install_routes(httplib::Server& server, std::shared_ptr<const SearchService> service,
                           std::string allow_origin = {}) {
  if (!allow_origin.empty()) {
    server.set_default_headers({{"Access-Control-Allow-Origin", allow_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  }
  server.Get("/health", [service](const httplib::Request&, httplib::Response& res) {
    apply_reply(service->health(), res);
  });
  server.Post("/search", [service](const httplib::Request& req, httplib::Response& res) {
    apply_reply(service->search(req.body), res);
  });
  server.Get(R"(/reports/(.+))", [service](const httplib::Request& req, httplib::Response& res) {
    apply_reply(service->report(req.matches[1].str()), res);
  });
}

}  // namespace lexminer

#endif  // LEXMINER_SERVICE_HPP_INCLUDED
