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

#include <random>

#include "test_support.hpp"

namespace lexminer {
namespace {

using testing::as_key_counts;
using testing::default_lexicon;
using KeyCounts = std::map<std::string, std::size_t>;

std::vector<TaggedToken> tagged(std::initializer_list<std::pair<const char*, PosTag>> words) {
  std::vector<TaggedWord> w;
  for (const auto& [s, p] : words) w.push_back({s, p});
  return chunk(w);
}

TermCounts counts_of(std::initializer_list<const char*> keys) {
  TermCounts out;
  for (auto k : keys) ++out[*Term::from_key(k)];
  return out;
}

TEST(Term, KeyJoinsWithUnderscore) {
  Term t("annual", "interest");
  EXPECT_EQ(t.key(), "annual_interest");
  auto back = Term::from_key("annual_interest");
  ASSERT_TRUE(back);
  EXPECT_EQ(back->w1(), "annual");
  EXPECT_EQ(back->w2(), "interest");
  EXPECT_FALSE(Term::from_key("annual"));
  EXPECT_FALSE(Term::from_key("_x"));
  EXPECT_FALSE(Term::from_key("x_"));
  EXPECT_FALSE(Term::from_key("a_b_c"));
  EXPECT_LT(Term("a", "b"), Term("a", "c"));
}

TEST(GenerateTerms, Examples) {
  EXPECT_EQ(as_key_counts(generate_terms(tagged({{"eligible", PosTag::JJ}, {"candidate", PosTag::NN}}))),
            (KeyCounts{{"eligible_candidate", 1}}));
  EXPECT_EQ(as_key_counts(generate_terms(
                tagged({{"annual", PosTag::JJ}, {"interest", PosTag::NN}, {"rate", PosTag::NN}}))),
            (KeyCounts{{"annual_interest", 1}, {"interest_rate", 1}}));
  EXPECT_TRUE(generate_terms(tagged({{"of", PosTag::IN}, {"petitioner", PosTag::NN}})).empty());
  EXPECT_TRUE(generate_terms(std::vector<TaggedToken>{}).empty());
}

TEST(GenerateTerms, AdmitsComparativeAndProperNouns) {
  auto terms = generate_terms(tagged({{"higher", PosTag::JJR},
                                      {"Court", PosTag::NNP},
                                      {"best", PosTag::JJS},
                                      {"Judges", PosTag::NNPS},
                                      {"ran", PosTag::VBD},
                                      {"fast", PosTag::RB},
                                      {"cars", PosTag::NNS}}));
  EXPECT_EQ(as_key_counts(terms), (KeyCounts{{"best_judges", 1}, {"higher_court", 1}}));
}

TEST(GenerateTerms, CountsMultiplicity) {
  auto terms = generate_terms(tagged({{"police", PosTag::NN},
                                      {"officers", PosTag::NNS},
                                      {"and", PosTag::CC},
                                      {"police", PosTag::NN},
                                      {"officers", PosTag::NNS}}));
  EXPECT_EQ(as_key_counts(terms), (KeyCounts{{"police_officers", 2}}));
  EXPECT_EQ(total_count(terms), 2u);
}

TEST(GenerateTerms, PunctuationBreaksAdjacency) {
  auto terms = generate_terms(tagged({{"rights", PosTag::NNS}, {"-", PosTag::PUNCT}, {"transfer", PosTag::NN}}));
  EXPECT_TRUE(terms.empty());
}

TEST(StopWords, BaselineAlwaysPresent) {
  StopWordList stops;
  for (auto w : kBaselineStopWords) EXPECT_TRUE(stops.contains(w));
  EXPECT_TRUE(stops.contains("Petitioner"));
  EXPECT_EQ(stops.size(), 5u);
  auto extended = parse_stop_words("# extra\nRespondent\n\n");
  EXPECT_EQ(extended.size(), 6u);
  EXPECT_TRUE(extended.contains("respondent"));
  EXPECT_TRUE(extended.contains("court"));
}

TEST(FilterStopTerms, Examples) {
  StopWordList stops;
  EXPECT_TRUE(filter_stop_terms(counts_of({"transfer_petitioner"}), stops).empty());
  EXPECT_EQ(filter_stop_terms(counts_of({"fundamental_rights"}), stops), counts_of({"fundamental_rights"}));
  EXPECT_TRUE(filter_stop_terms({}, stops).empty());
  EXPECT_TRUE(filter_stop_terms(counts_of({"plaintiff-respondent_appeal", "court_order"}), stops).empty());
  EXPECT_EQ(filter_stop_terms(counts_of({"plaintiff_x", "x_y", "x_y"}), stops), counts_of({"x_y", "x_y"}));
}

TEST(TermProfile, Examples) {
  const auto& lex = default_lexicon();
  StopWordList stops;
  EXPECT_TRUE(term_profile({"R", "Transfer of petitioner as Principal", "d", ""}, lex, stops).empty());
  EXPECT_EQ(as_key_counts(term_profile({"R", "Fundamental Rights violation", "d", ""}, lex, stops)),
            (KeyCounts{{"fundamental_rights", 1}, {"rights_violation", 1}}));
  EXPECT_TRUE(term_profile({"R", "", "d", ""}, lex, stops).empty());
}

TEST(TermProfile, UsesHeadOnly) {
  const auto& lex = default_lexicon();
  StopWordList stops;
  auto p = term_profile({"R", "unlawful arrest", "police officers assaulted the journalist", ""}, lex, stops);
  EXPECT_EQ(as_key_counts(p), (KeyCounts{{"unlawful_arrest", 1}}));
}

TEST(TermProperties, RandomText) {
  const auto& lex = default_lexicon();
  StopWordList stops;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto a = testing::random_text(rng, 30);
    auto b = testing::random_text(rng, 30);
    auto tokens = preprocess(a, lex);
    auto occurrences = term_occurrences(tokens);
    ASSERT_LE(occurrences.size(), tokens.empty() ? 0 : tokens.size() - 1);
    for (const auto& occ : occurrences) {
      ASSERT_LT(occ.position + 1, tokens.size());
      EXPECT_EQ(occ.term.w1(), tokens[occ.position].normal);
      EXPECT_EQ(occ.term.w2(), tokens[occ.position + 1].normal);
      for (const auto* w : {&occ.term.w1(), &occ.term.w2()}) {
        ASSERT_FALSE(w->empty());
        ASSERT_EQ(*w, text::lower(*w));
        ASSERT_EQ(w->find('_'), std::string::npos);
      }
    }
    for (const auto& [term, n] : text_profile(a, lex, stops)) {
      ASSERT_FALSE(stops.contains(term.w1()));
      ASSERT_FALSE(stops.contains(term.w2()));
    }

    // Terms over "a . b" are the multiset union of terms over a and b.
    auto ta = tokens;
    auto tb = preprocess(b, lex);
    auto joined = ta;
    joined.push_back({".", "", PosTag::PUNCT, ChunkTag::outside()});
    joined.insert(joined.end(), tb.begin(), tb.end());
    auto expected = generate_terms(ta);
    for (const auto& [term, n] : generate_terms(tb)) expected[term] += n;
    ASSERT_EQ(generate_terms(joined), expected) << a << " | " << b;
  }
}

TEST(TermProperties, DeskCorpusFreeOfStopWords) {
  auto repo = load_repository(testing::desk_dir());
  StopWordList stops;
  for (const auto& r : repo) {
    for (const auto& [term, n] : term_profile(r, default_lexicon(), stops)) {
      for (auto w : kBaselineStopWords) {
        EXPECT_NE(term.w1(), w) << r.id;
        EXPECT_NE(term.w2(), w) << r.id;
      }
    }
  }
}

}  // namespace
}  // namespace lexminer
