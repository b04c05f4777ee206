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

#ifndef LEXMINER_CLI_HPP_INCLUDED
#define LEXMINER_CLI_HPP_INCLUDED

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "lexminer/corpus_store.hpp"
#include "lexminer/eval.hpp"
#include "lexminer/index_io.hpp"
#include "lexminer/lexicon.hpp"
#include "lexminer/retrieval.hpp"
#include "lexminer/service.hpp"
#include "lexminer/weighting.hpp"

// Implementations of the `lexminer` subcommands. Each returns the process exit
// status and writes only to the given streams.
namespace lexminer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitIo = 3;

inline int exit_code_for(const Error& e) { return e.code() == ErrorCode::kIo ? kExitIo : kExitParse; }

struct ResourceArgs {
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> stopwords;
};

inline Lexicon load_lexicon_for(const ResourceArgs& args) { return load_default_lexicon(args.lexicon); }

inline StopWordList load_stops_for(const ResourceArgs& args) {
  return args.stopwords ? load_stop_words(*args.stopwords) : StopWordList{};
}

struct MineArgs {
  std::filesystem::path corpus;
  std::filesystem::path index;
  ResourceArgs resources;
  unsigned threads = 0;  // 0: hardware concurrency
};

inline int cmd_mine(const MineArgs& args, std::ostream& out, std::ostream& err) {
  try {
    auto lex = load_lexicon_for(args.resources);
    auto stops = load_stops_for(args.resources);
    auto repo = load_repository(args.corpus);
    unsigned threads = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
    auto profiles = build_profiles(repo, lex, stops, threads);
    for (const auto& [id, counts] : profiles)
      out << id << "\tterms=" << counts.size() << "\toccurrences=" << total_count(counts) << '\n';
    auto index = build_index(profiles, repo);
    save_index(index, args.index);
    out << "mined " << index.n_docs() << " reports, vocabulary " << index.stats().vocabulary_size() << " -> "
        << args.index.string() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

struct SearchArgs {
  std::filesystem::path index;
  std::optional<std::string> query;
  std::optional<std::filesystem::path> query_file;
  std::size_t top_k = 10;
  bool show_terms = false;
  bool show_tags = false;
  ResourceArgs resources;
};

inline std::string first_line(std::string_view s) {
  auto nl = s.find('\n');
  auto line = text::trim(s.substr(0, nl));
  return line.empty() ? "-" : std::string(line);
}

inline std::string fixed4(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << v;
  return ss.str();
}

/// Ranked table: rank, id, score (4 decimals), first line of the verdict.
inline void print_results(const SearchOutcome& outcome, bool show_terms, std::ostream& out) {
  if (outcome.results.empty()) {
    out << (outcome.empty_query ? "no matches (empty query vector)" : "no matches") << '\n';
    return;
  }
  std::size_t id_width = 2;
  for (const auto& r : outcome.results) id_width = std::max(id_width, r.report_id.size());
  out << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(id_width) + 2) << "id" << std::setw(8)
      << "score" << "verdict" << '\n';
  std::size_t rank = 0;
  for (const auto& r : outcome.results) {
    out << std::left << std::setw(6) << ++rank << std::setw(static_cast<int>(id_width) + 2) << r.report_id
        << std::setw(8) << fixed4(r.score) << first_line(r.verdict) << '\n';
    if (show_terms) {
      for (const auto& m : r.matched_terms)
        out << "      " << m.term.key() << "  q=" << fixed4(m.query_weight) << "  d=" << fixed4(m.doc_weight)
            << "  c=" << fixed4(m.contribution) << '\n';
    }
  }
}

inline int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.query.has_value() == args.query_file.has_value()) {
    err << "error: give exactly one of --query or --query-file\n";
    return kExitUsage;
  }
  if (args.top_k == 0) {
    err << "error: --top-k must be positive\n";
    return kExitUsage;
  }
  try {
    auto lex = load_lexicon_for(args.resources);
    auto stops = load_stops_for(args.resources);
    auto index = load_index(args.index);
    std::string query = args.query ? *args.query : text::read_file(*args.query_file);
    SearchOptions opts;
    opts.top_k = args.top_k;
    auto outcome = search(query, index, lex, stops, opts);
    if (args.show_tags) {
      out << "query tags:\n" << format_tag_dump(outcome.query_tokens);
    }
    print_results(outcome, args.show_terms, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

struct EvalArgs {
  std::filesystem::path index;
  std::filesystem::path cases;
  std::optional<std::filesystem::path> report_out;
  ResourceArgs resources;
};

inline int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    auto lex = load_lexicon_for(args.resources);
    auto stops = load_stops_for(args.resources);
    auto index = load_index(args.index);
    auto cases = parse_eval_cases(text::read_file(args.cases));
    auto report = run_eval(cases, index, lex, stops);
    for (const auto& row : report.rows) {
      out << row.kind << '\t' << fixed4(row.value) << '\t' << row.query_text << '\n';
    }
    out << "precision@1\t" << fixed4(report.precision_at_1) << "\t(" << report.precision_cases << " cases)\n";
    out << "recall_overlap\t" << fixed4(report.recall_overlap) << "\t(" << report.recall_cases << " pairs)\n";
    auto json = eval_report_to_json(report).dump(2) + "\n";
    if (args.report_out) {
      text::write_file(*args.report_out, json);
    } else {
      out << json;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

struct ServeArgs {
  std::filesystem::path index;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string allow_origin;
  std::optional<std::filesystem::path> corpus;
  ResourceArgs resources;
};

/// Blocks until the server stops.
inline int cmd_serve(const ServeArgs& args, std::ostream& out, std::ostream& err) {
  std::shared_ptr<const SearchService> service;
  try {
    auto index = std::make_shared<const Index>(load_index(args.index));
    auto lex = std::make_shared<const Lexicon>(load_lexicon_for(args.resources));
    std::shared_ptr<const Repository> corpus;
    if (args.corpus) corpus = std::make_shared<const Repository>(load_repository(*args.corpus));
    service = std::make_shared<const SearchService>(index, lex, load_stops_for(args.resources), corpus);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  httplib::Server server;
  install_routes(server, service, args.allow_origin);
  if (!server.bind_to_port(args.host, args.port)) {
    err << "error: cannot bind " << args.host << ':' << args.port << '\n';
    return kExitIo;
  }
  out << "listening on http://" << args.host << ':' << args.port << std::endl;
  return server.listen_after_bind() ? kExitOk : kExitIo;
}

}  // namespace lexminer::cli

#endif  // LEXMINER_CLI_HPP_INCLUDED
