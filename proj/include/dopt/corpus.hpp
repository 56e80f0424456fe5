#pragma once

#include <string>
#include <vector>

#include "dopt/sds.hpp"

namespace dopt {

// One verified solution from the embedded reference data, tagged with where
// it comes from ("table" rows are the one-per-parameter-set list for v < 100,
// "new #k" rows are the per-parameter-set result lists).
struct CorpusEntry {
  Sds sds;
  std::string source;
};

// The built-in solution corpus, parsed once from the embedded copy of
// data/corpus.sds and cached; never mutated.
const std::vector<CorpusEntry>& builtin_corpus();

namespace detail {
// Raw text of data/corpus.sds, embedded at build time.
const char* corpus_text();
}  // namespace detail

}  // namespace dopt
