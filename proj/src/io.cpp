#include "riglab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace riglab {

namespace {

template <typename T>
T read_value(std::istream& in, const char* what) {
  T value{};
  if (!(in >> value)) throw ValidationError(std::string("malformed input: expected ") + what);
  return value;
}

}  // namespace

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

SimpleGraph read_edge_list(std::istream& in) {
  auto n = read_value<std::size_t>(in, "vertex count");
  auto count = read_value<std::size_t>(in, "edge count");
  std::vector<Edge> edges;
  edges.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto u = read_value<Vertex>(in, "edge endpoint");
    auto v = read_value<Vertex>(in, "edge endpoint");
    edges.push_back({u, v});
  }
  auto g = SimpleGraph::from_edges(n, std::move(edges));
  if (g.edge_count() != count) throw ValidationError("edge list contains duplicate edges");
  return g;
}

void write_hypergraph(std::ostream& out, const UniformHypergraph& h) {
  out << h.vertex_count() << ' ' << h.arity() << ' ' << h.hyperedge_count() << '\n';
  for (std::size_t i = 0; i < h.hyperedge_count(); ++i) {
    auto he = h.hyperedge(i);
    for (std::size_t j = 0; j < he.size(); ++j) out << (j ? " " : "") << he[j];
    out << '\n';
  }
}

UniformHypergraph read_hypergraph(std::istream& in) {
  auto n = read_value<std::size_t>(in, "vertex count");
  auto arity = read_value<std::size_t>(in, "arity");
  auto count = read_value<std::size_t>(in, "hyperedge count");
  std::vector<std::vector<Vertex>> hyperedges(count, std::vector<Vertex>(arity));
  for (auto& he : hyperedges) {
    for (auto& v : he) v = read_value<Vertex>(in, "hyperedge vertex");
  }
  return UniformHypergraph::from_hyperedges(n, arity, std::move(hyperedges));
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

SimpleGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_edge_list(in);
}

}  // namespace riglab
