#include "connideals/corpus.hpp"

#include <iterator>
#include <sstream>

#include "connideals/errors.hpp"

namespace connideals {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::optional<CorpusFormat> parse_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return CorpusFormat::graph6;
  if (name == "edges" || name == "edge-list") return CorpusFormat::edges;
  return std::nullopt;
}

CorpusFormat detect_format(std::string_view path, std::string_view first_line) {
  if (ends_with(path, ".g6") || ends_with(path, ".graph6")) return CorpusFormat::graph6;
  if (ends_with(path, ".edges") || ends_with(path, ".el") || ends_with(path, ".txt")) {
    return CorpusFormat::edges;
  }
  std::istringstream probe{std::string(first_line)};
  long n = 0;
  long m = 0;
  std::string rest;
  if (probe >> n >> m && !(probe >> rest)) return CorpusFormat::edges;
  return CorpusFormat::graph6;
}

std::vector<CorpusEntry> read_corpus(std::istream& in, CorpusFormat format,
                                     const std::string& name) {
  std::vector<CorpusEntry> out;
  if (format == CorpusFormat::edges) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    out.push_back({name, parse_edge_list(text)});
    return out;
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
    if (view.empty()) continue;
    try {
      out.push_back({name + ":" + std::to_string(number), parse_graph6(view)});
    } catch (const ParseError& e) {
      throw ParseError(number, e.what());
    }
  }
  return out;
}

}  // namespace connideals
