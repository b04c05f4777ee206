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

#ifndef LEXMINER_RETRIEVAL_HPP_INCLUDED
#define LEXMINER_RETRIEVAL_HPP_INCLUDED

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexminer/lingproc.hpp"
#include "lexminer/termgen.hpp"
#include "lexminer/weighting.hpp"

namespace lexminer {

struct MatchedTerm {
  Term term;
  double query_weight;
  double doc_weight;
  double contribution;  // query_weight * doc_weight
};

struct SearchResult {
  std::string report_id;
  double score = 0.0;
  std::vector<MatchedTerm> matched_terms;
  std::string head;
  std::string verdict;
};

struct SearchOutcome {
  std::vector<SearchResult> results;
  bool empty_query = false;  // the query produced no weighted term
  TermVector query_vector;
  std::vector<TaggedToken> query_tokens;
};

inline double squared_norm(const TermVector& v) {
  double s = 0.0;
  for (const auto& [t, w] : v.weights) s += w * w;
  return s;
}

/// Sum of weight products over the shared support (merge walk of two sorted maps).
inline double dot(const TermVector& a, const TermVector& b) {
  double s = 0.0;
  auto ia = a.weights.begin();
  auto ib = b.weights.begin();
  while (ia != a.weights.end() && ib != b.weights.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

/// dot(a, b) / (|a| |b|); 0 when either vector has no weight. Clamped to
/// [0, 1], which holds exactly for nonnegative weights up to rounding.
inline double cosine(const TermVector& a, const TermVector& b) {
  double na = squared_norm(a);
  double nb = squared_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  double c = dot(a, b) / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, 0.0, 1.0);
}

/// Terms present in both vectors, largest contribution first (ties by term).
inline std::vector<MatchedTerm> explain(const TermVector& query, const TermVector& doc) {
  std::vector<MatchedTerm> out;
  for (const auto& [term, qw] : query.weights) {
    auto it = doc.weights.find(term);
    if (it != doc.weights.end()) out.push_back({term, qw, it->second, qw * it->second});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MatchedTerm& a, const MatchedTerm& b) { return a.contribution > b.contribution; });
  return out;
}

struct SearchOptions {
  std::size_t top_k = 10;
  bool use_postings = true;  // skip reports sharing no term with the query
};

/// Scores a prepared query vector against the index.
inline std::vector<SearchResult> rank(const TermVector& query, const Index& index, const SearchOptions& opts) {
  if (opts.top_k == 0) throw std::invalid_argument("top_k must be positive");
  const auto& vectors = index.vectors();

  std::vector<std::size_t> candidates;
  if (opts.use_postings) {
    for (const auto& [term, w] : query.weights) {
      if (const auto* docs = index.postings(term)) candidates.insert(candidates.end(), docs->begin(), docs->end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  } else {
    candidates.resize(vectors.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  }

  std::vector<SearchResult> results;
  for (std::size_t doc : candidates) {
    const auto& vec = vectors[doc];
    double score = cosine(query, vec);
    if (score <= 0.0) continue;
    SearchResult r{vec.owner, score, explain(query, vec), {}, {}};
    if (const auto* m = index.meta_for(vec.owner)) {
      r.head = m->head;
      r.verdict = m->verdict;
    }
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.report_id < b.report_id;
  });
  if (results.size() > opts.top_k) results.resize(opts.top_k);
  return results;
}

/// Treats the query as one more document: same preprocessing and term
/// filtering, weighted with the corpus statistics, then ranked by cosine.
inline SearchOutcome search(std::string_view query_text, const Index& index, const Lexicon& lex,
                            const StopWordList& stops, const SearchOptions& opts = {}) {
  if (index.n_docs() == 0) throw Error(ErrorCode::kEmptyCorpus, "the index contains no reports");
  SearchOutcome outcome;
  outcome.query_tokens = preprocess(query_text, lex);
  auto profile = filter_stop_terms(generate_terms(outcome.query_tokens), stops);
  outcome.query_vector = tfidf_vector(profile, index.stats(), "query");
  if (outcome.query_vector.empty()) {
    outcome.empty_query = true;
    if (opts.top_k == 0) throw std::invalid_argument("top_k must be positive");
    return outcome;
  }
  outcome.results = rank(outcome.query_vector, index, opts);
  return outcome;
}

}  // namespace lexminer

#endif  // LEXMINER_RETRIEVAL_HPP_INCLUDED
