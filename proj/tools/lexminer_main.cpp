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

// lexminer: mine law reports into a TF-IDF index and search it.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "lexminer/cli.hpp"

namespace {

void add_resource_options(CLI::App* cmd, lexminer::cli::ResourceArgs& res) {
  cmd->add_option("--lexicon", res.lexicon, "Lexicon file (default: $LEXMINER_LEXICON or bundled)");
  cmd->add_option("--stopwords", res.stopwords, "Extra stop words, one per line");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legal research over mined law reports"};
  app.require_subcommand(1);

  lexminer::cli::MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine a directory of .lawrep files into an index");
  mine_cmd->add_option("--corpus", mine.corpus, "Directory of report files")->required();
  mine_cmd->add_option("--index", mine.index, "Output index path")->required();
  mine_cmd->add_option("--threads", mine.threads, "Worker threads (0 = all cores)");
  add_resource_options(mine_cmd, mine.resources);

  lexminer::cli::SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Rank reports against research text");
  search_cmd->add_option("--index", search.index, "Index file")->required();
  auto* q = search_cmd->add_option("--query,-q", search.query, "Query text");
  auto* qf = search_cmd->add_option("--query-file", search.query_file, "File containing the query text");
  q->excludes(qf);
  search_cmd->add_option("--top-k,-k", search.top_k, "Maximum number of results")->capture_default_str();
  search_cmd->add_flag("--show-terms", search.show_terms, "Show matched-term contributions");
  search_cmd->add_flag("--show-tags", search.show_tags, "Dump the query's surface/POS/CHUNK tags");
  add_resource_options(search_cmd, search.resources);

  lexminer::cli::EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Run precision / paraphrase-recall evaluation cases");
  eval_cmd->add_option("--index", eval.index, "Index file")->required();
  eval_cmd->add_option("--cases", eval.cases, "JSON array of evaluation cases")->required();
  eval_cmd->add_option("--out", eval.report_out, "Write the JSON report here instead of stdout");
  add_resource_options(eval_cmd, eval.resources);

  lexminer::cli::ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP search API");
  serve_cmd->add_option("--index", serve.index, "Index file")->required();
  serve_cmd->add_option("--port,-p", serve.port, "TCP port")->capture_default_str();
  serve_cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--allow-origin", serve.allow_origin, "Enable CORS for this origin");
  serve_cmd->add_option("--corpus", serve.corpus, "Report directory, for full report text on /reports/{id}");
  add_resource_options(serve_cmd, serve.resources);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : lexminer::cli::kExitUsage;
  }

  if (*mine_cmd) return lexminer::cli::cmd_mine(mine, std::cout, std::cerr);
  if (*search_cmd) return lexminer::cli::cmd_search(search, std::cout, std::cerr);
  if (*eval_cmd) return lexminer::cli::cmd_eval(eval, std::cout, std::cerr);
  if (*serve_cmd) return lexminer::cli::cmd_serve(serve, std::cout, std::cerr);
  return lexminer::cli::kExitUsage;
}
