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

#ifndef LEXMINER_LEXICON_HPP_INCLUDED
#define LEXMINER_LEXICON_HPP_INCLUDED

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexminer/error.hpp"
#include "lexminer/tags.hpp"
#include "lexminer/text.hpp"

namespace lexminer {

/// Unknown-word guess: words ending in `suffix` with at least `min_stem`
/// preceding bytes receive `tag`.
struct SuffixRule {
  std::string suffix;
  PosTag tag;
  std::size_t min_stem = 2;
};

enum class RuleContext { kPrevTag, kNextTag, kPrevWord, kNextWord };

/// Brill-style contextual transformation: "change FROM to TO when CONTEXT is VALUE".
struct RepairRule {
  PosTag from;
  PosTag to;
  RuleContext context;
  std::string value;  // tag name or lowercased word, depending on context
  std::optional<PosTag> value_tag;  // parsed form of `value` for tag contexts
};

// Checked in order; the first matching suffix wins.
inline std::vector<SuffixRule> default_suffix_rules() {
  return {
      {"ments", PosTag::NNS, 2}, {"tions", PosTag::NNS, 2}, {"sions", PosTag::NNS, 2},
      {"ities", PosTag::NNS, 2},
      {"tion", PosTag::NN, 2},   {"sion", PosTag::NN, 2},   {"ment", PosTag::NN, 2},
      {"ness", PosTag::NN, 2},   {"ship", PosTag::NN, 2},   {"ance", PosTag::NN, 2},
      {"ence", PosTag::NN, 2},   {"ity", PosTag::NN, 2},    {"ism", PosTag::NN, 2},
      {"ist", PosTag::NN, 2},    {"hood", PosTag::NN, 2},
      {"ible", PosTag::JJ, 2},   {"able", PosTag::JJ, 2},   {"ous", PosTag::JJ, 2},
      {"ive", PosTag::JJ, 2},    {"ful", PosTag::JJ, 2},    {"less", PosTag::JJ, 3},
      {"ical", PosTag::JJ, 2},   {"al", PosTag::JJ, 3},     {"ic", PosTag::JJ, 3},
      {"ly", PosTag::RB, 3},     {"ing", PosTag::VBG, 3},   {"ed", PosTag::VBN, 2},
      {"ss", PosTag::NN, 1},     {"us", PosTag::NN, 2},     {"is", PosTag::NN, 2},
      {"s", PosTag::NNS, 3},
  };
}

class Lexicon {
 public:
  Lexicon() : suffix_rules_(default_suffix_rules()) {}

  /// Adds or replaces an entry; `tags` must be non-empty and duplicate-free.
  void add(std::string_view word, std::vector<PosTag> tags) {
    if (tags.empty()) throw Error(ErrorCode::kInvalidLexicon, "empty tag list for '" + std::string(word) + "'");
    for (std::size_t i = 0; i < tags.size(); ++i)
      for (std::size_t j = i + 1; j < tags.size(); ++j)
        if (tags[i] == tags[j])
          throw Error(ErrorCode::kInvalidLexicon, "duplicate tag for '" + std::string(word) + "'");
    entries_[text::lower(word)] = std::move(tags);
  }

  /// Admissible tags for a lowercased word form, most likely first.
  const std::vector<PosTag>* lookup(std::string_view lowered) const {
    auto it = entries_.find(std::string(lowered));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }

  const std::vector<SuffixRule>& suffix_rules() const noexcept { return suffix_rules_; }
  void set_suffix_rules(std::vector<SuffixRule> rules) { suffix_rules_ = std::move(rules); }

  const std::vector<RepairRule>& repair_rules() const noexcept { return repair_rules_; }
  void add_repair_rule(RepairRule rule) { repair_rules_.push_back(std::move(rule)); }

 private:
  std::unordered_map<std::string, std::vector<PosTag>> entries_;
  std::vector<SuffixRule> suffix_rules_;
  std::vector<RepairRule> repair_rules_;
};

/// Reads `word<TAB>TAG1,TAG2,...` lines into `lex`. `#` starts a comment line.
inline void parse_lexicon_into(Lexicon& lex, std::string_view content) {
  std::size_t line_no = 0;
  for (auto line : text::split_lines(content)) {
    ++line_no;
    auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    auto tab = trimmed.find('\t');
    if (tab == std::string_view::npos)
      throw Error(ErrorCode::kInvalidLexicon, "line " + std::to_string(line_no) + ": expected word<TAB>tags");
    auto word = text::trim(trimmed.substr(0, tab));
    auto tag_list = text::trim(trimmed.substr(tab + 1));
    if (word.empty())
      throw Error(ErrorCode::kInvalidLexicon, "line " + std::to_string(line_no) + ": empty word");
    std::vector<PosTag> tags;
    while (!tag_list.empty()) {
      auto comma = tag_list.find(',');
      auto name = text::trim(tag_list.substr(0, comma));
      auto tag = parse_pos_tag(name);
      if (!tag)
        throw Error(ErrorCode::kInvalidLexicon,
                    "line " + std::to_string(line_no) + ": unknown tag '" + std::string(name) + "'");
      tags.push_back(*tag);
      if (comma == std::string_view::npos) break;
      tag_list.remove_prefix(comma + 1);
    }
    try {
      lex.add(word, std::move(tags));
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidLexicon, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

/// Parses one `FROM TO WHEN <PREVTAG|NEXTTAG|PREVWORD|NEXTWORD> <value>` rule.
inline RepairRule parse_repair_rule(std::string_view line) {
  auto fields = text::split_ws(line);
  if (fields.size() != 5 || fields[2] != "WHEN")
    throw Error(ErrorCode::kInvalidRule, "expected 'FROM TO WHEN <CONTEXT> <value>': " + std::string(line));
  auto from = parse_pos_tag(fields[0]);
  auto to = parse_pos_tag(fields[1]);
  if (!from || !to) throw Error(ErrorCode::kInvalidRule, "unknown tag in rule: " + std::string(line));

  RepairRule rule{*from, *to, RuleContext::kPrevTag, std::string(fields[4]), std::nullopt};
  if (fields[3] == "PREVTAG") rule.context = RuleContext::kPrevTag;
  else if (fields[3] == "NEXTTAG") rule.context = RuleContext::kNextTag;
  else if (fields[3] == "PREVWORD") rule.context = RuleContext::kPrevWord;
  else if (fields[3] == "NEXTWORD") rule.context = RuleContext::kNextWord;
  else throw Error(ErrorCode::kInvalidRule, "unknown context '" + std::string(fields[3]) + "'");

  if (rule.context == RuleContext::kPrevTag || rule.context == RuleContext::kNextTag) {
    rule.value_tag = parse_pos_tag(rule.value);
    if (!rule.value_tag) throw Error(ErrorCode::kInvalidRule, "unknown context tag '" + rule.value + "'");
  } else {
    rule.value = text::lower(rule.value);
  }
  return rule;
}

inline void parse_repair_rules_into(Lexicon& lex, std::string_view content) {
  std::size_t line_no = 0;
  for (auto line : text::split_lines(content)) {
    ++line_no;
    auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    try {
      lex.add_repair_rule(parse_repair_rule(trimmed));
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidRule, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

inline std::filesystem::path default_data_dir() {
#ifdef LEXMINER_DEFAULT_DATA_DIR
  return LEXMINER_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

/// Lexicon path: explicit argument, else $LEXMINER_LEXICON, else the bundled file.
inline std::filesystem::path resolve_lexicon_path(const std::optional<std::filesystem::path>& explicit_path = {}) {
  if (explicit_path && !explicit_path->empty()) return *explicit_path;
  if (const char* env = std::getenv("LEXMINER_LEXICON"); env != nullptr && *env != '\0') return env;
  return default_data_dir() / "lexicon.tsv";
}

/// Loads a lexicon file and, when given, a repair-rule file.
inline Lexicon load_lexicon(const std::filesystem::path& lexicon_path,
                            const std::optional<std::filesystem::path>& rules_path = {}) {
  Lexicon lex;
  parse_lexicon_into(lex, text::read_file(lexicon_path));
  if (rules_path) parse_repair_rules_into(lex, text::read_file(*rules_path));
  return lex;
}

/// The lexicon resolved by resolve_lexicon_path plus the bundled repair rules.
inline Lexicon load_default_lexicon(const std::optional<std::filesystem::path>& explicit_path = {}) {
  return load_lexicon(resolve_lexicon_path(explicit_path), default_data_dir() / "repair_rules.txt");
}

}  // namespace lexminer

#endif  // LEXMINER_LEXICON_HPP_INCLUDED
