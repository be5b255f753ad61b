#include "vlink/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlink {

void Digraph::add_edge(std::size_t source, std::size_t target, LaurentPoly valuation) {
  if (source >= vertices_ || target >= vertices_) throw std::out_of_range("edge endpoint is not a vertex");
  edges_.push_back(Edge{source, target, std::move(valuation)});
}

std::size_t Digraph::multiplicity(std::size_t source, std::size_t target) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.source == source && e.target == target;
  }));
}

std::size_t Digraph::out_degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.source == v; }));
}

std::size_t Digraph::in_degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.target == v; }));
}

bool Digraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.source == e.target; });
}

bool Digraph::is_balanced() const {
  std::vector<long> balance(vertices_, 0);
  for (const Edge& e : edges_) {
    ++balance[e.source];
    --balance[e.target];
  }
  return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
}

bool Digraph::is_weakly_connected() const {
  if (vertices_ == 0) return false;
  std::vector<std::vector<std::size_t>> adjacent(vertices_);
  for (const Edge& e : edges_) {
    adjacent[e.source].push_back(e.target);
    adjacent[e.target].push_back(e.source);
  }
  for (const auto& a : adjacent)
    if (a.empty()) return false;
  std::vector<bool> seen(vertices_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacent[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertices_;
}

Digraph Digraph::without_loops() const {
  Digraph g(vertices_);
  for (const Edge& e : edges_)
    if (e.source != e.target) g.edges_.push_back(e);
  return g;
}

}  // namespace vlink
