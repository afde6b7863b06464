#pragma once

#include <iosfwd>
#include <string>

#include "oal/graph.hpp"

namespace oal {

/// Edge-list format: header "n m", then m lines "u v" with 0-based endpoints.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// DIMACS format: "p edge n m" header, "e u v" lines with 1-based endpoints,
/// "c" comment lines ignored.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

/// Sniffs the format (a leading 'p'/'c' line means DIMACS) and parses.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

/// Canonical serialization: edges sorted lexicographically.
std::string serialize_edge_list(const Graph& g);
std::string serialize_dimacs(const Graph& g);

}  // namespace oal
