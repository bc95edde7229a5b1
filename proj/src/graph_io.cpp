#include <charconv>
#include <string>
#include <vector>

#include "connideals/errors.hpp"
#include "connideals/graph.hpp"

namespace connideals {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return lines;
}

// Whitespace-separated nonnegative integers; nullopt if anything else shows up.
std::optional<std::vector<long>> parse_ints(std::string_view line) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || value < 0) return std::nullopt;
    const auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
    i += consumed;
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return std::nullopt;
    out.push_back(value);
  }
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  while (at < lines.size() && blank(lines[at])) ++at;
  if (at == lines.size()) throw ParseError(0, "empty edge list");
  const auto header = parse_ints(lines[at]);
  if (!header || header->size() != 2) throw ParseError(at + 1, "expected header \"n m\"");
  const long n = (*header)[0];
  const long m = (*header)[1];
  if (n > VertexSet::kCapacity) {
    throw ParseError(at + 1, "vertex count " + std::to_string(n) + " exceeds limit 64");
  }
  std::vector<Edge> edges;
  long seen = 0;
  for (std::size_t i = at + 1; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    const auto fields = parse_ints(lines[i]);
    if (!fields || fields->size() != 2) throw ParseError(i + 1, "expected edge \"u v\"");
    const long u = (*fields)[0];
    const long v = (*fields)[1];
    if (u >= n || v >= n) throw ParseError(i + 1, "vertex out of range");
    if (u == v) throw ParseError(i + 1, "loop edge");
    if (++seen > m) throw ParseError(i + 1, "more edges than declared");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (seen != m) throw ParseError(lines.size(), "fewer edges than declared");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError(0, "graph6: empty line");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw ParseError(0, "graph6: byte out of printable range");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] == 126) {
    if (line.size() < 4 || line[1] == 126) {
      throw ParseError(0, "graph6: unsupported vertex count encoding");
    }
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - 63);
    pos = 4;
  } else {
    n = line[0] - 63;
    pos = 1;
  }
  if (n > VertexSet::kCapacity) throw ParseError(0, "graph6: more than 64 vertices");
  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t want = (bits + 5) / 6;
  if (line.size() - pos != want) throw ParseError(0, "graph6: bad length");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace connideals
