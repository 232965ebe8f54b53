#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vulngraph/graph.hpp"

namespace vulngraph {

/// Malformed serialized input. `line` is 1-based, or 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0) : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// graph6: one byte of n + 63 (or the 126-prefixed long form for n > 62),
// followed by the upper triangle, column by column, six bits per byte.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

enum class GraphFormat { edgelist, graph6 };

/// A parsed graph plus where it came from. labels[i] is the input token that
/// was mapped to vertex i.
struct GraphDocument {
    std::string label;
    GraphFormat format = GraphFormat::edgelist;
    Graph graph;
    std::vector<std::string> labels;
};

/**
 * Edge-list text: one "u v" pair per line; blank lines and lines starting
 * with '#' are skipped; anything else is a ParseError naming the line.
 * Vertex tokens are arbitrary and are numbered in order of first appearance.
 */
GraphDocument read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Graph& g);

/// Sniffs the format: a single token of graph6 characters means graph6.
GraphDocument read_graph_document(std::istream& in);
GraphDocument read_graph_document(std::istream& in, GraphFormat format);

}  // namespace vulngraph
