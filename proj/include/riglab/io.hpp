#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "riglab/graph.hpp"

namespace riglab {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: header "n m_edges", then one "u v" line per edge with u < v,
// lexicographically sorted. Hypergraphs use the header "n arity count" and
// one sorted vertex tuple per line.
void write_edge_list(std::ostream& out, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in);
void write_hypergraph(std::ostream& out, const UniformHypergraph& h);
UniformHypergraph read_hypergraph(std::istream& in);

std::string to_edge_list(const SimpleGraph& g);
SimpleGraph load_edge_list(const std::filesystem::path& path);

}  // namespace riglab
