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

#ifndef LEXMINER_WEIGHTING_HPP_INCLUDED
#define LEXMINER_WEIGHTING_HPP_INCLUDED

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "lexminer/corpus_store.hpp"
#include "lexminer/error.hpp"
#include "lexminer/termgen.hpp"

namespace lexminer {

/// Document count and per-term document frequency over a mined corpus.
struct CorpusStats {
  std::size_t n_docs = 0;
  std::map<Term, std::size_t> df;

  std::size_t doc_freq(const Term& t) const {
    auto it = df.find(t);
    return it == df.end() ? 0 : it->second;
  }
  std::size_t vocabulary_size() const noexcept { return df.size(); }

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

/// Sparse nonnegative weights; zero weights are never stored.
struct TermVector {
  std::string owner;
  std::map<Term, double> weights;

  bool empty() const noexcept { return weights.empty(); }

  friend bool operator==(const TermVector&, const TermVector&) = default;
};

using Profiles = std::map<std::string, TermCounts>;

inline CorpusStats build_stats(const Profiles& profiles) {
  CorpusStats stats;
  stats.n_docs = profiles.size();
  for (const auto& [id, counts] : profiles)
    for (const auto& [term, c] : counts) ++stats.df[term];
  return stats;
}

/// Associative merge of two partial statistics over disjoint document sets.
inline CorpusStats merge_stats(CorpusStats a, const CorpusStats& b) {
  a.n_docs += b.n_docs;
  for (const auto& [term, d] : b.df) a.df[term] += d;
  return a;
}

/// weight(t) = tf(t) · ln(N / df(t)). Terms unknown to `stats` or present in
/// every document get no entry.
inline TermVector tfidf_vector(const TermCounts& profile, const CorpusStats& stats, std::string owner = {}) {
  if (stats.n_docs == 0) throw Error(ErrorCode::kEmptyCorpus, "cannot weight terms against an empty corpus");
  TermVector vec{std::move(owner), {}};
  const double n = static_cast<double>(stats.n_docs);
  for (const auto& [term, tf] : profile) {
    auto df = stats.doc_freq(term);
    if (df == 0 || df >= stats.n_docs) continue;
    double w = static_cast<double>(tf) * std::log(n / static_cast<double>(df));
    if (w > 0.0) vec.weights.emplace(term, w);
  }
  return vec;
}

struct ReportMeta {
  std::string head;
  std::string verdict;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

/// Output of mining: corpus statistics, one vector per report (ascending id)
/// and display metadata. Immutable once built.
class Index {
 public:
  Index() = default;
  Index(CorpusStats stats, std::vector<TermVector> vectors, std::map<std::string, ReportMeta> meta)
      : stats_(std::move(stats)), vectors_(std::move(vectors)), meta_(std::move(meta)) {
    std::sort(vectors_.begin(), vectors_.end(),
              [](const TermVector& a, const TermVector& b) { return a.owner < b.owner; });
    for (std::size_t doc = 0; doc < vectors_.size(); ++doc)
      for (const auto& [term, w] : vectors_[doc].weights) postings_[term].push_back(doc);
  }

  const CorpusStats& stats() const noexcept { return stats_; }
  const std::vector<TermVector>& vectors() const noexcept { return vectors_; }
  const std::map<std::string, ReportMeta>& meta() const noexcept { return meta_; }
  std::size_t n_docs() const noexcept { return stats_.n_docs; }

  /// Documents (positions in vectors()) with a nonzero weight for `term`.
  const std::vector<std::size_t>* postings(const Term& term) const {
    auto it = postings_.find(term);
    return it == postings_.end() ? nullptr : &it->second;
  }

  const TermVector* vector_for(std::string_view id) const {
    auto it = std::lower_bound(vectors_.begin(), vectors_.end(), id,
                               [](const TermVector& v, std::string_view key) { return v.owner < key; });
    return (it != vectors_.end() && it->owner == id) ? &*it : nullptr;
  }

  const ReportMeta* meta_for(std::string_view id) const {
    auto it = meta_.find(std::string(id));
    return it == meta_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Index& a, const Index& b) {
    return a.stats_ == b.stats_ && a.vectors_ == b.vectors_ && a.meta_ == b.meta_;
  }

 private:
  CorpusStats stats_;
  std::vector<TermVector> vectors_;
  std::map<std::string, ReportMeta> meta_;
  std::map<Term, std::vector<std::size_t>> postings_;
};

/// Term profile of every report, keyed by id. Profiles are computed on up to
/// `threads` workers; the result does not depend on the thread count.
inline Profiles build_profiles(const Repository& repo, const Lexicon& lex, const StopWordList& stops,
                               unsigned threads = 1) {
  const auto& reports = repo.reports();
  std::vector<TermCounts> computed(reports.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reports.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < reports.size(); ++i) computed[i] = term_profile(reports[i], lex, stops);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < reports.size(); i += threads) computed[i] = term_profile(reports[i], lex, stops);
      }));
    }
    for (auto& w : workers) w.get();
  }
  Profiles profiles;
  for (std::size_t i = 0; i < reports.size(); ++i) profiles.emplace(reports[i].id, std::move(computed[i]));
  return profiles;
}

/// Weights every profile against the statistics of the whole set and attaches
/// display metadata from `repo`.
inline Index build_index(const Profiles& profiles, const Repository& repo) {
  auto stats = build_stats(profiles);
  std::vector<TermVector> vectors;
  std::map<std::string, ReportMeta> meta;
  if (stats.n_docs > 0) {
    for (const auto& [id, profile] : profiles) vectors.push_back(tfidf_vector(profile, stats, id));
  }
  for (const auto& report : repo) meta.emplace(report.id, ReportMeta{report.head, report.verdict});
  return Index(std::move(stats), std::move(vectors), std::move(meta));
}

/// Full mining pass over the repository. An empty repository yields an empty index.
inline Index mine(const Repository& repo, const Lexicon& lex, const StopWordList& stops, unsigned threads = 1) {
  return build_index(build_profiles(repo, lex, stops, threads), repo);
}

}  // namespace lexminer

#endif  // LEXMINER_WEIGHTING_HPP_INCLUDED
