#include "dopt/corpus.hpp"

#include <sstream>

#include "dopt/sds_io.hpp"

namespace dopt {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::istringstream in(detail::corpus_text());
    std::vector<CorpusEntry> out;
    for (SdsRecord& rec : parse_records(in))
      out.push_back(CorpusEntry{std::move(rec.sds), std::move(rec.tag)});
    return out;
  }();
  return corpus;
}

}  // namespace dopt
