#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "fbrooks/error.hpp"
#include "fbrooks/graph.hpp"

namespace fbrooks {

std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and a trailing newline. Throws
// ParseError carrying `line` and the byte offset inside it.
Graph from_graph6(std::string_view text, std::size_t line = 1);

// Calls `on_graph(graph, text, line)` per graph6 line; blank lines are
// skipped. Parse failures go to `on_error` when given, otherwise throw.
void read_graph6_stream(
    std::istream& in,
    const std::function<void(const Graph&, const std::string&, std::size_t)>& on_graph,
    const std::function<void(const ParseError&, const std::string&)>& on_error = {});

// "n m" header, then m lines "u v". Lines starting with '#' are comments.
std::string to_edge_list(const Graph& g, std::string_view header_comment = {});
Graph from_edge_list(std::string_view text);

// Either format; a first non-comment token containing a space decides edge list.
Graph parse_graph_text(std::string_view text);

}  // namespace fbrooks
