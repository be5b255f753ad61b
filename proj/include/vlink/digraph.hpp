#pragma once

#include <cstddef>
#include <vector>

#include "vlink/laurent.hpp"

namespace vlink {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  LaurentPoly valuation = 1;
};

// Directed multigraph; parallel edges are repeated entries.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertices) : vertices_(vertices) {}

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Throws std::out_of_range for a vertex outside 0..vertex_count()-1.
  void add_edge(std::size_t source, std::size_t target, LaurentPoly valuation = 1);

  std::size_t multiplicity(std::size_t source, std::size_t target) const;  // a_ij
  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;
  bool has_loop() const;
  bool is_balanced() const;  // in-degree equals out-degree everywhere

  // Every vertex lies on an edge and the underlying undirected graph is
  // connected.
  bool is_weakly_connected() const;

  Digraph without_loops() const;

 private:
  std::size_t vertices_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace vlink
