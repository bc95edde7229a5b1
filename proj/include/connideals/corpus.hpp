#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "connideals/graph.hpp"

namespace connideals {

enum class CorpusFormat { graph6, edges };

struct CorpusEntry {
  std::string source;  // "name:line" for graph6 corpora, "name" for edge lists
  Graph graph;
};

/// ".g6" / ".graph6" mean graph6 lines, ".edges" / ".el" / ".txt" an edge
/// list; otherwise the first non-blank line decides ("n m" header or not).
CorpusFormat detect_format(std::string_view path, std::string_view first_line);
std::optional<CorpusFormat> parse_format(std::string_view name);

/// graph6 corpora hold one graph per line (blank lines and a ">>graph6<<"
/// header are skipped); an edge-list file holds one graph. Throws ParseError
/// carrying the offending line number.
std::vector<CorpusEntry> read_corpus(std::istream& in, CorpusFormat format,
                                     const std::string& name);

}  // namespace connideals
