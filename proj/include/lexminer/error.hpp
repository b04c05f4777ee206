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

#ifndef LEXMINER_ERROR_HPP_INCLUDED
#define LEXMINER_ERROR_HPP_INCLUDED

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexminer {

enum class ErrorCode {
  kMissingHeader,
  kMissingHead,
  kMissingDetail,
  kDuplicateSection,
  kMalformedReport,
  kDuplicateId,
  kIo,
  kInvalidLexicon,
  kInvalidRule,
  kInvalidIndex,
  kInvalidCases,
  kEmptyCorpus,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingHeader: return "MissingHeader";
    case ErrorCode::kMissingHead: return "MissingHead";
    case ErrorCode::kMissingDetail: return "MissingDetail";
    case ErrorCode::kDuplicateSection: return "DuplicateSection";
    case ErrorCode::kMalformedReport: return "MalformedReport";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidLexicon: return "InvalidLexicon";
    case ErrorCode::kInvalidRule: return "InvalidRule";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kInvalidCases: return "InvalidCases";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to an exit status or HTTP status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by malformed input data rather than the environment.
  bool is_parse_error() const noexcept {
    return code_ != ErrorCode::kIo && code_ != ErrorCode::kEmptyCorpus;
  }

 private:
  ErrorCode code_;
};

}  // namespace lexminer

#endif  // LEXMINER_ERROR_HPP_INCLUDED
