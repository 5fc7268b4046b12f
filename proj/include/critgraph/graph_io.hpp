#ifndef CRITGRAPH_GRAPH_IO_HPP
#define CRITGRAPH_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "critgraph/graph.hpp"
#include "json.hpp"

namespace critgraph {

// Canonical JSON form: {"n": <int>, "edges": [[i,j], ...]} with i<j,
// sorted lexicographically.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// DIMACS .col: "p edge n m" header, "e i j" lines, 1-indexed.
void write_dimacs(std::ostream& os, const Graph& g);
Graph read_dimacs(std::istream& is);

// Dispatches on extension: .col/.dimacs -> DIMACS, anything else -> JSON.
Graph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g);

}  // namespace critgraph

#endif
