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

#ifndef LEXMINER_LEXMINER_HPP_INCLUDED
#define LEXMINER_LEXMINER_HPP_INCLUDED

// Everything except the HTTP service and the CLI command layer.
#include "lexminer/corpus_store.hpp"
#include "lexminer/error.hpp"
#include "lexminer/eval.hpp"
#include "lexminer/index_io.hpp"
#include "lexminer/lexicon.hpp"
#include "lexminer/lingproc.hpp"
#include "lexminer/retrieval.hpp"
#include "lexminer/tags.hpp"
#include "lexminer/termgen.hpp"
#include "lexminer/weighting.hpp"

#endif  // LEXMINER_LEXMINER_HPP_INCLUDED
