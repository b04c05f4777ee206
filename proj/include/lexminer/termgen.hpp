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

#ifndef LEXMINER_TERMGEN_HPP_INCLUDED
#define LEXMINER_TERMGEN_HPP_INCLUDED

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexminer/corpus_store.hpp"
#include "lexminer/error.hpp"
#include "lexminer/lingproc.hpp"

namespace lexminer {

/// Two-word term keyed as "w1_w2".
class Term {
 public:
  Term(std::string w1, std::string w2) : w1_(std::move(w1)), w2_(std::move(w2)), key_(w1_ + "_" + w2_) {}

  /// Splits a key at its first underscore. Words never contain '_' (see normalize()).
  static std::optional<Term> from_key(std::string_view key) {
    auto sep = key.find('_');
    if (sep == std::string_view::npos || sep == 0 || sep + 1 == key.size()) return std::nullopt;
    auto w2 = key.substr(sep + 1);
    if (w2.find('_') != std::string_view::npos) return std::nullopt;
    return Term(std::string(key.substr(0, sep)), std::string(w2));
  }

  const std::string& w1() const noexcept { return w1_; }
  const std::string& w2() const noexcept { return w2_; }
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const Term& a, const Term& b) noexcept { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept { return a.key_ <=> b.key_; }

 private:
  std::string w1_;
  std::string w2_;
  std::string key_;
};

/// Multiset of terms: term → multiplicity (always ≥ 1).
using TermCounts = std::map<Term, std::size_t>;

inline std::size_t total_count(const TermCounts& counts) {
  std::size_t n = 0;
  for (const auto& [term, c] : counts) n += c;
  return n;
}

inline constexpr std::string_view kBaselineStopWords[] = {
    "petitioner", "complainant", "plaintiff", "plaintiff-respondent", "court",
};

/// Lowercased stop words; always contains the legal baseline list.
class StopWordList {
 public:
  StopWordList() {
    for (auto w : kBaselineStopWords) words_.emplace(w);
  }

  void add(std::string_view word) {
    auto w = text::lower(text::trim(word));
    if (!w.empty()) words_.insert(std::move(w));
  }

  bool contains(std::string_view word) const { return words_.count(text::lower(word)) > 0; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const noexcept { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

/// Baseline list plus one word per line of `content` (`#` comments).
inline StopWordList parse_stop_words(std::string_view content) {
  StopWordList stops;
  for (auto line : text::split_lines(content)) {
    auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    stops.add(t);
  }
  return stops;
}

inline StopWordList load_stop_words(const std::filesystem::path& path) {
  return parse_stop_words(text::read_file(path));
}

struct TermOccurrence {
  Term term;
  std::size_t position;  // index of the first source token
};

inline bool term_left_tag(PosTag t) noexcept { return is_adjective(t) || is_noun(t); }
inline bool term_right_tag(PosTag t) noexcept { return is_noun(t); }

/// Every adjacent (Adj|Noun) Noun pair, in token order.
inline std::vector<TermOccurrence> term_occurrences(std::span<const TaggedToken> tokens) {
  std::vector<TermOccurrence> out;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    const auto& a = tokens[i];
    const auto& b = tokens[i + 1];
    if (term_left_tag(a.pos) && term_right_tag(b.pos) && !a.normal.empty() && !b.normal.empty())
      out.push_back({Term(a.normal, b.normal), i});
  }
  return out;
}

inline TermCounts generate_terms(std::span<const TaggedToken> tokens) {
  TermCounts counts;
  for (auto& occ : term_occurrences(tokens)) ++counts[std::move(occ.term)];
  return counts;
}

/// Drops every term whose first or second word is a stop word.
inline TermCounts filter_stop_terms(const TermCounts& terms, const StopWordList& stops) {
  TermCounts out;
  for (const auto& [term, count] : terms) {
    if (!stops.contains(term.w1()) && !stops.contains(term.w2())) out.emplace(term, count);
  }
  return out;
}

/// Stop-filtered terms of arbitrary text (a report head or a query).
inline TermCounts text_profile(std::string_view text, const Lexicon& lex, const StopWordList& stops) {
  auto tokens = preprocess(text, lex);
  return filter_stop_terms(generate_terms(tokens), stops);
}

inline TermCounts term_profile(const LawReport& report, const Lexicon& lex, const StopWordList& stops) {
  return text_profile(report.head, lex, stops);
}

}  // namespace lexminer

#endif  // LEXMINER_TERMGEN_HPP_INCLUDED
