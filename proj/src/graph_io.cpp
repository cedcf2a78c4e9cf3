#include "tcg/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "tcg/error.hpp"

namespace tcg {

namespace {

constexpr int kBias = 63;
constexpr char kLongOrder = '~';

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("graph6: byte outside printable range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty record", 0);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] == kLongOrder) {
    if (text.size() < 4) throw ParseError("graph6: truncated order field", text.size());
    if (text[1] == kLongOrder) throw ParseError("graph6: orders above 258047 are unsupported", 1);
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos));
    if (n <= 62) throw ParseError("graph6: non-canonical long order field", 1);
  } else {
    n = static_cast<std::size_t>(sextet(text, 0));
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity", 0);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != pos + groups) {
    throw ParseError("graph6: expected " + std::to_string(pos + groups) + " bytes, found " +
                         std::to_string(text.size()),
                     std::min(text.size(), pos + groups));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int group = sextet(text, pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (k % 6 != 0) {
    const int group = sextet(text, pos + k / 6);
    if ((group & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", pos + k / 6);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongOrder);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int group = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = line;
    if (number == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    try {
      out.push_back({number, std::string(view), parse_graph6(view)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), e.offset(), number);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> parse_numbers(const std::string& line, std::size_t number) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
      ++pos;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) throw ParseError("edge list: expected a non-negative integer", pos, number);
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::size_t> row_lines;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto values = parse_numbers(line, number);
    if (values.empty()) continue;
    if (values.size() != 2) throw ParseError("edge list: expected exactly two integers", 0, number);
    rows.push_back(std::move(values));
    row_lines.push_back(number);
  }
  if (rows.empty()) throw ParseError("edge list: missing \"n m\" header", 0, number);
  const std::size_t n = rows[0][0];
  const std::size_t m = rows[0][1];
  if (rows.size() - 1 != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(rows.size() - 1),
                     0, row_lines[0]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] >= n || rows[i][1] >= n) throw ParseError("edge list: endpoint out of range", 0, row_lines[i]);
    if (rows[i][0] == rows[i][1]) throw ParseError("edge list: self-loop", 0, row_lines[i]);
    edges.emplace_back(rows[i][0], rows[i][1]);
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0, row_lines[0]);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace tcg
