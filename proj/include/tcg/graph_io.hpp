#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// Decodes one graph6 record (no trailing newline). Throws ParseError
/// carrying the byte offset of the first bad byte.
[[nodiscard]] Graph parse_graph6(std::string_view text);

/// Encodes a graph in graph6. For n <= 62 the order is one byte; larger
/// orders use the 4-byte '~' form.
[[nodiscard]] std::string to_graph6(const Graph& g);

/// One decoded record of a graph6 corpus, with its 1-based line number.
struct Graph6Record {
  std::size_t line = 0;
  std::string text;
  Graph graph;
};

/// Reads every graph6 line of a stream. Blank lines and an optional
/// ">>graph6<<" header are skipped. Throws ParseError with the line set.
[[nodiscard]] std::vector<Graph6Record> read_graph6_stream(std::istream& in);

/// Edge-list text: first line "n m", then m lines "u v" (0-based).
[[nodiscard]] Graph parse_edge_list(std::istream& in);
[[nodiscard]] std::string to_edge_list(const Graph& g);

}  // namespace tcg
