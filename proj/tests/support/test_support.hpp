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

// Shared helpers for the test suites: fixture paths, scratch directories,
// random generators and the independent oracles the implementation is checked
// against. Nothing here calls the code path it is used to verify.

#ifndef LEXMINER_TEST_SUPPORT_HPP_INCLUDED
#define LEXMINER_TEST_SUPPORT_HPP_INCLUDED

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lexminer/lexminer.hpp"

namespace lexminer::testing {

inline std::filesystem::path fixture_dir() { return LEXMINER_FIXTURE_DIR; }
inline std::filesystem::path toy3_dir() { return fixture_dir() / "toy3"; }
inline std::filesystem::path desk_dir() { return fixture_dir() / "desk"; }
inline std::filesystem::path cli_path() { return LEXMINER_CLI_PATH; }

/// Shared default lexicon; loading it once keeps the suites fast.
inline const Lexicon& default_lexicon() {
  static const Lexicon lex = load_default_lexicon(default_data_dir() / "lexicon.tsv");
  return lex;
}

/// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() / ("lexminer-" + tag + "-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing stdout (stderr merged when `merge_stderr`).
inline CommandResult run_command(const std::string& command, bool merge_stderr = false) {
  CommandResult result;
  std::string full = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(full.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

// ---------------------------------------------------------------------------
// Oracles

/// Cosine over dense vectors with an explicit dimension list: two plain loops.
inline double dense_cosine(const TermVector& a, const TermVector& b) {
  std::set<std::string> dims;
  for (const auto& [t, w] : a.weights) dims.insert(t.key());
  for (const auto& [t, w] : b.weights) dims.insert(t.key());
  std::vector<double> x, y;
  for (const auto& d : dims) {
    double xa = 0.0, yb = 0.0;
    for (const auto& [t, w] : a.weights)
      if (t.key() == d) xa = w;
    for (const auto& [t, w] : b.weights)
      if (t.key() == d) yb = w;
    x.push_back(xa);
    y.push_back(yb);
  }
  double num = 0.0, nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += x[i] * y[i];
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0.0 || ny == 0.0) return 0.0;
  return num / (std::sqrt(nx) * std::sqrt(ny));
}

/// TF-IDF weights recomputed by brute force: df by scanning every profile for
/// every term, then tf·ln(N/df) per (document, term). Returns id → key → weight
/// with zero weights omitted.
inline std::map<std::string, std::map<std::string, double>> brute_force_tfidf(
    const std::map<std::string, std::map<std::string, std::size_t>>& profiles) {
  std::set<std::string> vocabulary;
  for (const auto& [id, p] : profiles)
    for (const auto& [k, c] : p) vocabulary.insert(k);
  std::map<std::string, std::size_t> df;
  for (const auto& term : vocabulary) {
    std::size_t d = 0;
    for (const auto& [id, p] : profiles) {
      bool present = false;
      for (const auto& [k, c] : p)
        if (k == term && c > 0) present = true;
      if (present) ++d;
    }
    df[term] = d;
  }
  const double n = static_cast<double>(profiles.size());
  std::map<std::string, std::map<std::string, double>> out;
  for (const auto& [id, p] : profiles) {
    auto& row = out[id];
    for (const auto& [k, c] : p) {
      double w = static_cast<double>(c) * std::log(n / static_cast<double>(df[k]));
      if (w != 0.0) row[k] = w;
    }
  }
  return out;
}

inline std::map<std::string, std::size_t> as_key_counts(const TermCounts& counts) {
  std::map<std::string, std::size_t> out;
  for (const auto& [t, c] : counts) out[t.key()] = c;
  return out;
}

// ---------------------------------------------------------------------------
// Generators

/// Random nonnegative sparse vector over a vocabulary of `vocab` synthetic terms.
inline TermVector random_sparse_vector(std::mt19937_64& rng, std::size_t vocab, double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.001, 10.0);
  TermVector v;
  for (std::size_t i = 0; i < vocab; ++i) {
    if (unit(rng) < density) v.weights.emplace(Term("w" + std::to_string(i), "x"), weight(rng));
  }
  return v;
}

/// Random tag sequence drawn from the whole tag set (PUNCT included).
inline std::vector<TaggedWord> random_tagged_words(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> tag(0, kPosTagCount - 1);
  std::vector<TaggedWord> words(len(rng));
  for (std::size_t i = 0; i < words.size(); ++i)
    words[i] = {"w" + std::to_string(i), static_cast<PosTag>(tag(rng))};
  return words;
}

/// Random head-like text mixing lexicon words, punctuation and capitals.
inline std::string random_text(std::mt19937_64& rng, std::size_t max_words) {
  static const std::vector<std::string> pool = {
      "the", "petitioner", "Court", "unlawful", "arrest", "of", "police", "officers", "-", ",", "Article", "12(1)",
      "fundamental", "rights", "was", "transferred", "by", "eligible", "candidate", "'s", "(", ")", "Razick",
      "interest", "rate", "annual", "not", "and", "detention", "plaintiff-respondent", "schools", "Principal's",
      "quickly", "appointment", "challenged", ".", "Complainant", "equal", "protection", "14A", "\"quoted\"",
      "teaching", "national", "school", "zebra", "Colombo", "procured", "torture", "in", "custody"};
  std::uniform_int_distribution<std::size_t> len(0, max_words);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::string out;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += pool[pick(rng)];
  }
  return out;
}


// ---------------------------------------------------------------------------
// Hand-transcribed tagging reference

struct GoldenToken {
  std::string surface;
  std::string pos;  // as printed; punctuation tags are outside the tag set
  std::string chunk;
  bool noisy = false;
};

struct GoldenSample {
  std::string text;
  std::vector<GoldenToken> tokens;
};

inline GoldenSample load_golden(const std::filesystem::path& path) {
  GoldenSample g;
  const auto content = text::read_file(path);
  for (auto line : text::split_lines(content)) {
    if (line.starts_with("# text: ")) {
      g.text = std::string(line.substr(8));
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      f.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    g.tokens.push_back({f.at(0), f.at(1), f.at(2), f.size() > 3 && f[3] == "ocr"});
  }
  return g;
}

inline WordClass golden_class(const std::string& printed) {
  auto tag = parse_pos_tag(printed);
  return tag ? word_class(*tag) : WordClass::kOther;
}

struct Agreement {
  std::size_t scored = 0;
  std::size_t agreed = 0;
  bool aligned = false;
  double ratio() const { return scored ? static_cast<double>(agreed) / static_cast<double>(scored) : 0.0; }
};

/// Word-class agreement of `tokens` with the reference, skipping noisy rows.
inline Agreement class_agreement(const GoldenSample& golden, const std::vector<TaggedToken>& tokens) {
  Agreement a;
  if (tokens.size() != golden.tokens.size()) return a;
  a.aligned = true;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].surface != golden.tokens[i].surface) {
      a.aligned = false;
      return a;
    }
    if (golden.tokens[i].noisy) continue;
    ++a.scored;
    if (word_class(tokens[i].pos) == golden_class(golden.tokens[i].pos)) ++a.agreed;
  }
  return a;
}

}  // namespace lexminer::testing

#endif  // LEXMINER_TEST_SUPPORT_HPP_INCLUDED
