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

#ifndef LEXMINER_CORPUS_STORE_HPP_INCLUDED
#define LEXMINER_CORPUS_STORE_HPP_INCLUDED

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexminer/error.hpp"
#include "lexminer/text.hpp"

namespace lexminer {

/// One case record. Only `head` is mined; `detail` and `verdict` are kept
/// verbatim for display.
struct LawReport {
  std::string id;
  std::string head;
  std::string detail;
  std::string verdict;

  friend bool operator==(const LawReport&, const LawReport&) = default;
};

/// Reports sorted ascending by id (byte-wise). Immutable once loaded.
class Repository {
 public:
  Repository() = default;

  /// Sorts by id; throws DuplicateId if two reports share an id.
  explicit Repository(std::vector<LawReport> reports) : reports_(std::move(reports)) {
    std::sort(reports_.begin(), reports_.end(),
              [](const LawReport& a, const LawReport& b) { return a.id < b.id; });
    auto dup = std::adjacent_find(reports_.begin(), reports_.end(),
                                  [](const LawReport& a, const LawReport& b) { return a.id == b.id; });
    if (dup != reports_.end()) throw Error(ErrorCode::kDuplicateId, "duplicate report id '" + dup->id + "'");
  }

  const std::vector<LawReport>& reports() const noexcept { return reports_; }
  std::size_t size() const noexcept { return reports_.size(); }
  bool empty() const noexcept { return reports_.empty(); }
  auto begin() const noexcept { return reports_.begin(); }
  auto end() const noexcept { return reports_.end(); }

  const LawReport* find(std::string_view id) const {
    auto it = std::lower_bound(reports_.begin(), reports_.end(), id,
                               [](const LawReport& r, std::string_view key) { return r.id < key; });
    return (it != reports_.end() && it->id == id) ? &*it : nullptr;
  }

 private:
  std::vector<LawReport> reports_;
};

inline constexpr std::string_view kReportExtension = ".lawrep";

namespace detail {

enum class Section { kNone, kHead, kDetail, kVerdict };

inline std::optional<Section> section_marker(std::string_view line) {
  // Markers sit at column 0 on their own line; trailing blanks are tolerated.
  while (!line.empty() && text::is_space(line.back())) line.remove_suffix(1);
  if (line == "#HEAD") return Section::kHead;
  if (line == "#DETAIL") return Section::kDetail;
  if (line == "#VERDICT") return Section::kVerdict;
  return std::nullopt;
}

}  // namespace detail

/// Parses the `.lawrep` format:
///
///     #ID: <id>
///     #HEAD
///     <head text>
///     #DETAIL
///     <detail text, may be empty>
///     #VERDICT            (optional)
///     <verdict text>
///
/// Section bodies run to the next marker and are whitespace-trimmed.
inline LawReport parse_report(std::string_view raw) {
  if (raw.starts_with("\xEF\xBB\xBF")) raw.remove_prefix(3);
  auto lines = text::split_lines(raw);

  std::size_t pos = 0;
  while (pos < lines.size() && text::trim(lines[pos]).empty()) ++pos;
  if (pos == lines.size() || !lines[pos].starts_with("#ID:"))
    throw Error(ErrorCode::kMissingHeader, "first line must be '#ID: <id>'");

  LawReport report;
  report.id = std::string(text::trim(lines[pos].substr(4)));
  if (report.id.empty()) throw Error(ErrorCode::kMissingHeader, "empty report id");
  ++pos;

  using detail::Section;
  Section current = Section::kNone;
  bool seen[4] = {false, false, false, false};
  std::string bodies[4];
  auto flush = [&](Section s, std::size_t begin, std::size_t end) {
    if (s == Section::kNone) return;
    std::string body;
    for (std::size_t i = begin; i < end; ++i) {
      body.append(lines[i]);
      body.push_back('\n');
    }
    bodies[static_cast<int>(s)] = std::string(text::trim(body));
  };

  std::size_t body_begin = pos;
  for (; pos < lines.size(); ++pos) {
    auto marker = detail::section_marker(lines[pos]);
    if (!marker) {
      if (current == Section::kNone && !text::trim(lines[pos]).empty())
        throw Error(ErrorCode::kMalformedReport, "text before the first section marker");
      continue;
    }
    flush(current, body_begin, pos);
    auto idx = static_cast<int>(*marker);
    if (seen[idx]) throw Error(ErrorCode::kDuplicateSection, "section repeated in report '" + report.id + "'");
    seen[idx] = true;
    current = *marker;
    body_begin = pos + 1;
  }
  flush(current, body_begin, lines.size());

  if (!seen[static_cast<int>(Section::kHead)] || bodies[static_cast<int>(Section::kHead)].empty())
    throw Error(ErrorCode::kMissingHead, "report '" + report.id + "' has no #HEAD text");
  if (!seen[static_cast<int>(Section::kDetail)])
    throw Error(ErrorCode::kMissingDetail, "report '" + report.id + "' has no #DETAIL section");

  report.head = std::move(bodies[static_cast<int>(Section::kHead)]);
  report.detail = std::move(bodies[static_cast<int>(Section::kDetail)]);
  report.verdict = std::move(bodies[static_cast<int>(Section::kVerdict)]);
  return report;
}

/// Inverse of parse_report for reports whose bodies contain no marker lines.
inline std::string serialize_report(const LawReport& report) {
  std::string out;
  out += "#ID: " + report.id + "\n";
  out += "#HEAD\n" + report.head + "\n";
  out += "#DETAIL\n" + report.detail + "\n";
  if (!report.verdict.empty()) out += "#VERDICT\n" + report.verdict + "\n";
  return out;
}

/// Loads every `*.lawrep` file directly inside `source`. Parse failures are
/// rethrown with the offending filename; duplicate ids name both files.
inline Repository load_repository(const std::filesystem::path& source) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(source, ec)) throw Error(ErrorCode::kIo, "not a readable directory: " + source.string());

  std::vector<fs::path> files;
  fs::directory_iterator it(source, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot list " + source.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == kReportExtension) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::pair<LawReport, fs::path>> parsed;
  parsed.reserve(files.size());
  for (const auto& file : files) {
    std::string raw = text::read_file(file);
    try {
      parsed.emplace_back(parse_report(raw), file);
    } catch (const Error& e) {
      throw Error(e.code(), file.string() + ": " + e.what());
    }
  }
  std::sort(parsed.begin(), parsed.end(), [](const auto& a, const auto& b) { return a.first.id < b.first.id; });
  for (std::size_t i = 1; i < parsed.size(); ++i) {
    if (parsed[i].first.id == parsed[i - 1].first.id)
      throw Error(ErrorCode::kDuplicateId, "id '" + parsed[i].first.id + "' appears in both " +
                                               parsed[i - 1].second.string() + " and " + parsed[i].second.string());
  }

  std::vector<LawReport> reports;
  reports.reserve(parsed.size());
  for (auto& [report, path] : parsed) reports.push_back(std::move(report));
  return Repository(std::move(reports));
}

}  // namespace lexminer

#endif  // LEXMINER_CORPUS_STORE_HPP_INCLUDED
