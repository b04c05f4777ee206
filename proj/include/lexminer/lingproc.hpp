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

#ifndef LEXMINER_LINGPROC_HPP_INCLUDED
#define LEXMINER_LINGPROC_HPP_INCLUDED

#include <algorithm>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexminer/lexicon.hpp"
#include "lexminer/tags.hpp"
#include "lexminer/text.hpp"

// Linguistic preprocessing of head text: tokenization, POS tagging and BIO
// chunking.
namespace lexminer {

struct TaggedWord {
  std::string surface;
  PosTag pos;

  friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
};

struct TaggedToken {
  std::string surface;
  std::string normal;  // lowercased, surrounding punctuation stripped
  PosTag pos;
  ChunkTag chunk;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

namespace detail {

// Split off the start and end of whitespace-delimited words.
constexpr bool is_edge_punct(char c) noexcept {
  switch (c) {
    case '.': case ',': case ';': case ':': case '-': case '(': case ')': case '{': case '}':
    case '[': case ']': case '\'': case '"': case '/': case '!': case '?':
      return true;
    default:
      return false;
  }
}

constexpr bool is_ascii_punct(char c) noexcept {
  auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f && !text::is_alpha(c) && !text::is_digit(c);
}

inline bool all_punct(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_ascii_punct);
}

inline bool is_sentence_boundary(std::string_view surface) noexcept {
  return surface == "." || surface == "!" || surface == "?" || surface == ":" || surface == ";" || surface == "-";
}

inline bool rule_applies(const RepairRule& rule, std::span<const TaggedWord> words, std::size_t i) {
  switch (rule.context) {
    case RuleContext::kPrevTag: return i > 0 && words[i - 1].pos == *rule.value_tag;
    case RuleContext::kNextTag: return i + 1 < words.size() && words[i + 1].pos == *rule.value_tag;
    case RuleContext::kPrevWord: return i > 0 && text::lower(words[i - 1].surface) == rule.value;
    case RuleContext::kNextWord: return i + 1 < words.size() && text::lower(words[i + 1].surface) == rule.value;
  }
  return false;
}

}  // namespace detail

/// Lowercases and strips surrounding punctuation. Internal '_' becomes '-'
/// because '_' joins the two words of a term key.
inline std::string normalize(std::string_view surface) {
  while (!surface.empty() && detail::is_ascii_punct(surface.front())) surface.remove_prefix(1);
  while (!surface.empty() && detail::is_ascii_punct(surface.back())) surface.remove_suffix(1);
  std::string out = text::lower(surface);
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

/// Whitespace split, then leading/trailing punctuation becomes one token per
/// character. Internal hyphens and apostrophes stay attached, except that a
/// possessive "'s" is split off as its own token.
inline std::vector<std::string> tokenize(std::string_view input) {
  std::vector<std::string> tokens;
  for (auto word : text::split_ws(input)) {
    if (word == "'s" || word == "'S") {
      tokens.emplace_back(word);
      continue;
    }
    std::size_t lead = 0;
    while (lead < word.size() && detail::is_edge_punct(word[lead])) ++lead;
    std::size_t tail = word.size();
    while (tail > lead && detail::is_edge_punct(word[tail - 1])) --tail;

    for (std::size_t i = 0; i < lead; ++i) tokens.emplace_back(1, word[i]);
    auto core = word.substr(lead, tail - lead);
    if (!core.empty()) {
      if (core.size() > 2 && (text::ends_with(core, "'s") || text::ends_with(core, "'S"))) {
        tokens.emplace_back(core.substr(0, core.size() - 2));
        tokens.emplace_back(core.substr(core.size() - 2));
      } else {
        tokens.emplace_back(core);
      }
    }
    for (std::size_t i = tail; i < word.size(); ++i) tokens.emplace_back(1, word[i]);
  }
  return tokens;
}

namespace detail {

inline std::optional<PosTag> guess_by_suffix(std::string_view lowered, const Lexicon& lex) {
  for (const auto& rule : lex.suffix_rules()) {
    if (lowered.size() >= rule.suffix.size() + rule.min_stem && text::ends_with(lowered, rule.suffix))
      return rule.tag;
  }
  return std::nullopt;
}

inline PosTag initial_tag(std::string_view surface, bool sentence_initial, const Lexicon& lex) {
  if (surface == "'s" || surface == "'S") return PosTag::POS;
  std::string lowered = text::lower(surface);
  if (const auto* tags = lex.lookup(lowered)) return tags->front();
  if (all_punct(surface)) return PosTag::PUNCT;

  // Numbers and numbered references such as "12(1)" or "14A".
  if (text::is_digit(surface.front())) return PosTag::CD;

  // Unknown capitalized words are proper nouns unless they open a sentence.
  if (!sentence_initial && text::is_upper(surface.front())) {
    bool plural = surface.size() > 3 && surface.back() == 's' && !text::ends_with(surface, "ss");
    return plural && lex.lookup(lowered.substr(0, lowered.size() - 1)) ? PosTag::NNPS : PosTag::NNP;
  }

  // Hyphenated compounds take the class of their head (last) segment.
  if (auto dash = lowered.rfind('-'); dash != std::string::npos && dash + 1 < lowered.size()) {
    auto head = std::string_view(lowered).substr(dash + 1);
    if (const auto* tags = lex.lookup(head)) return tags->front();
    if (auto guess = guess_by_suffix(head, lex)) return *guess;
  }
  if (auto guess = guess_by_suffix(lowered, lex)) return *guess;
  if (sentence_initial && text::is_upper(surface.front()) && surface.size() > 1 &&
      std::all_of(surface.begin() + 1, surface.end(), [](char c) { return !text::is_lower(c); }))
    return PosTag::NNP;  // acronym
  return PosTag::NN;
}

}  // namespace detail

/// Assigns one tag per token: lexicon hit, else unknown-word heuristics
/// (proper-noun capitalization, suffix rules, NN fallback), then each
/// contextual repair rule in order as one left-to-right pass.
inline std::vector<TaggedWord> pos_tag(std::span<const std::string> tokens, const Lexicon& lex) {
  std::vector<TaggedWord> words;
  words.reserve(tokens.size());
  bool sentence_initial = true;
  for (const auto& token : tokens) {
    words.push_back({token, detail::initial_tag(token, sentence_initial, lex)});
    sentence_initial = detail::is_sentence_boundary(token);
  }
  for (const auto& rule : lex.repair_rules()) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].pos == rule.from && detail::rule_applies(rule, words, i)) words[i].pos = rule.to;
    }
  }
  return words;
}

namespace detail {

using TagSpan = std::span<const TaggedWord>;

inline bool np_modifier(PosTag t) noexcept {
  return is_adjective(t) || t == PosTag::CD || t == PosTag::POS;
}
inline bool np_head(PosTag t) noexcept { return is_noun(t) || t == PosTag::PRP || t == PosTag::WP; }

// Each matcher returns the length of the longest match starting at `i`, 0 if none.

// NP := DT? (JJ|JJR|JJS|CD|POS)* (NN|NNS|NNP|NNPS|PRP|WP)+
inline std::size_t match_np(TagSpan w, std::size_t i) {
  std::size_t j = i;
  if (j < w.size() && w[j].pos == PosTag::DT) ++j;
  while (j < w.size() && np_modifier(w[j].pos)) ++j;
  std::size_t heads = j;
  while (j < w.size() && np_head(w[j].pos)) ++j;
  return j > heads ? j - i : 0;
}

// VP := MD? RB? (VB|VBD|VBG|VBN|VBP|VBZ)+
inline std::size_t match_vp(TagSpan w, std::size_t i) {
  std::size_t j = i;
  if (j < w.size() && w[j].pos == PosTag::MD) ++j;
  if (j < w.size() && w[j].pos == PosTag::RB) ++j;
  std::size_t verbs = j;
  while (j < w.size() && is_verb(w[j].pos)) ++j;
  return j > verbs ? j - i : 0;
}

// PP := IN | TO
inline std::size_t match_pp(TagSpan w, std::size_t i) {
  return (w[i].pos == PosTag::IN || w[i].pos == PosTag::TO) ? 1 : 0;
}

// ADJP := RB? (JJ|JJR|JJS)+
inline std::size_t match_adjp(TagSpan w, std::size_t i) {
  std::size_t j = i;
  if (j < w.size() && w[j].pos == PosTag::RB) ++j;
  std::size_t adjs = j;
  while (j < w.size() && is_adjective(w[j].pos)) ++j;
  return j > adjs ? j - i : 0;
}

// ADVP := (RB|RBR|RBS)+
inline std::size_t match_advp(TagSpan w, std::size_t i) {
  std::size_t j = i;
  while (j < w.size() && is_adverb(w[j].pos)) ++j;
  return j - i;
}

}  // namespace detail

/// Maximal-munch chunking. At each position the longest of the NP, VP, PP,
/// ADJP and ADVP patterns wins (ties in that order); no match emits O.
inline std::vector<TaggedToken> chunk(std::span<const TaggedWord> words) {
  using Matcher = std::size_t (*)(detail::TagSpan, std::size_t);
  static constexpr std::pair<ChunkType, Matcher> kPatterns[] = {
      {ChunkType::NP, detail::match_np},     {ChunkType::VP, detail::match_vp},
      {ChunkType::PP, detail::match_pp},     {ChunkType::ADJP, detail::match_adjp},
      {ChunkType::ADVP, detail::match_advp},
  };

  std::vector<TaggedToken> out;
  out.reserve(words.size());
  std::size_t i = 0;
  while (i < words.size()) {
    std::size_t best_len = 0;
    ChunkType best_type = ChunkType::O;
    for (const auto& [type, match] : kPatterns) {
      std::size_t len = match(words, i);
      if (len > best_len) {
        best_len = len;
        best_type = type;
      }
    }
    if (best_len == 0) {
      out.push_back({words[i].surface, normalize(words[i].surface), words[i].pos, ChunkTag::outside()});
      ++i;
      continue;
    }
    for (std::size_t k = 0; k < best_len; ++k, ++i) {
      auto tag = k == 0 ? ChunkTag::begin(best_type) : ChunkTag::inside(best_type);
      out.push_back({words[i].surface, normalize(words[i].surface), words[i].pos, tag});
    }
  }
  return out;
}

/// tokenize → pos_tag → chunk.
inline std::vector<TaggedToken> preprocess(std::string_view head, const Lexicon& lex) {
  auto tokens = tokenize(head);
  auto words = pos_tag(tokens, lex);
  return chunk(words);
}

inline bool bio_well_formed(std::span<const TaggedToken> tokens) {
  return bio_well_formed(tokens | std::views::transform(&TaggedToken::chunk));
}

/// One `surface/POS/CHUNK` line per token.
inline std::string format_tag_dump(std::span<const TaggedToken> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    out += t.surface;
    out += '/';
    out += to_string(t.pos);
    out += '/';
    out += to_string(t.chunk);
    out += '\n';
  }
  return out;
}

}  // namespace lexminer

#endif  // LEXMINER_LINGPROC_HPP_INCLUDED
