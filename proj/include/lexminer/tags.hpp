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

#ifndef LEXMINER_TAGS_HPP_INCLUDED
#define LEXMINER_TAGS_HPP_INCLUDED

#include <array>
#include <concepts>
#include <ranges>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Penn-style part-of-speech tags plus PUNCT, and BIO chunk tags.
namespace lexminer {

enum class PosTag : std::uint8_t {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT, POS, PRP,
  PRP_S, RB, RBR, RBS, RP, SYM, TO, UH, VB, VBD, VBG, VBN, VBP, VBZ, WDT, WP, WP_S, WRB,
  PUNCT,
};

inline constexpr std::size_t kPosTagCount = 37;

inline constexpr std::array<std::string_view, kPosTagCount> kPosTagNames = {
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
    "PRP$", "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP", "WP$", "WRB",
    "PUNCT",
};

constexpr std::string_view to_string(PosTag tag) noexcept { return kPosTagNames[static_cast<std::size_t>(tag)]; }

constexpr std::optional<PosTag> parse_pos_tag(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kPosTagCount; ++i) {
    if (kPosTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

constexpr bool is_noun(PosTag t) noexcept {
  return t == PosTag::NN || t == PosTag::NNS || t == PosTag::NNP || t == PosTag::NNPS;
}
constexpr bool is_adjective(PosTag t) noexcept { return t == PosTag::JJ || t == PosTag::JJR || t == PosTag::JJS; }
constexpr bool is_verb(PosTag t) noexcept {
  return t == PosTag::VB || t == PosTag::VBD || t == PosTag::VBG || t == PosTag::VBN || t == PosTag::VBP ||
         t == PosTag::VBZ;
}
constexpr bool is_adverb(PosTag t) noexcept { return t == PosTag::RB || t == PosTag::RBR || t == PosTag::RBS; }

/// Coarse word classes used when comparing tagger output against references.
enum class WordClass { kNoun, kAdjective, kVerb, kPreposition, kOther };

constexpr WordClass word_class(PosTag t) noexcept {
  if (is_noun(t)) return WordClass::kNoun;
  if (is_adjective(t)) return WordClass::kAdjective;
  if (is_verb(t) || t == PosTag::MD) return WordClass::kVerb;
  if (t == PosTag::IN || t == PosTag::TO) return WordClass::kPreposition;
  return WordClass::kOther;
}

enum class ChunkPrefix : std::uint8_t { B, I, O };
enum class ChunkType : std::uint8_t { NP, VP, PP, ADJP, ADVP, O };

/// `<Prefix>-<Chunk Type>`; the outside tag is rendered as plain "O".
struct ChunkTag {
  ChunkPrefix prefix = ChunkPrefix::O;
  ChunkType type = ChunkType::O;

  static constexpr ChunkTag outside() noexcept { return {}; }
  static constexpr ChunkTag begin(ChunkType t) noexcept { return {ChunkPrefix::B, t}; }
  static constexpr ChunkTag inside(ChunkType t) noexcept { return {ChunkPrefix::I, t}; }

  constexpr bool is_outside() const noexcept { return prefix == ChunkPrefix::O; }

  friend constexpr bool operator==(ChunkTag, ChunkTag) = default;
};

constexpr std::string_view to_string(ChunkType t) noexcept {
  switch (t) {
    case ChunkType::NP: return "NP";
    case ChunkType::VP: return "VP";
    case ChunkType::PP: return "PP";
    case ChunkType::ADJP: return "ADJP";
    case ChunkType::ADVP: return "ADVP";
    case ChunkType::O: return "O";
  }
  return "O";
}

inline std::string to_string(ChunkTag tag) {
  if (tag.is_outside()) return "O";
  std::string out = tag.prefix == ChunkPrefix::B ? "B-" : "I-";
  out += to_string(tag.type);
  return out;
}

/// Checks the BIO invariants over a whole sequence: O prefix iff O type, and
/// every I- continues a chunk of the same type.
template <std::ranges::input_range Range>
  requires std::convertible_to<std::ranges::range_value_t<Range>, ChunkTag>
bool bio_well_formed(Range&& chunks) {
  bool first = true;
  ChunkTag prev{};
  for (ChunkTag tag : chunks) {
    if ((tag.prefix == ChunkPrefix::O) != (tag.type == ChunkType::O)) return false;
    if (tag.prefix == ChunkPrefix::I) {
      if (first || prev.is_outside() || prev.type != tag.type) return false;
    }
    prev = tag;
    first = false;
  }
  return true;
}

}  // namespace lexminer

#endif  // LEXMINER_TAGS_HPP_INCLUDED
