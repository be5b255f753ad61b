#include "vlink/arborescence.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "vlink/error.hpp"
#include "vlink/numbering.hpp"

#ifdef VLINK_HAVE_OPENMP
#include <omp.h>
#endif

namespace vlink {

LaurentMatrix graph_matrix(const Digraph& g) {
  if (g.has_loop()) throw PreconditionError("graph matrix needs a loop-free graph");
  LaurentMatrix h(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    h(e.source, e.target) -= e.valuation;
    h(e.target, e.target) += e.valuation;
  }
  return h;
}

LaurentPoly count_rooted_trees(const Digraph& g, std::size_t root) {
  if (root >= g.vertex_count()) throw std::out_of_range("root is not a vertex");
  return determinant(graph_matrix(g).without(root, root));
}

namespace {

// Every non-root vertex picks one entering edge; a choice vector is an
// arborescence iff following the picks from any vertex reaches the root.
struct ChoiceSpace {
  std::size_t root = 0;
  std::vector<std::size_t> vertices;                // non-root vertices, ascending
  std::vector<std::vector<std::size_t>> incoming;   // candidate edges per vertex
  std::uint64_t size = 0;
};

ChoiceSpace choice_space(const Digraph& g, std::size_t root) {
  if (root >= g.vertex_count()) throw std::out_of_range("root is not a vertex");
  if (g.edge_count() > kArborescenceEdgeBound)
    throw BoundExceeded("arborescence enumeration is limited to " + std::to_string(kArborescenceEdgeBound) +
                        " edges");
  ChoiceSpace s;
  s.root = root;
  s.size = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v == root) continue;
    std::vector<std::size_t> in;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (g.edges()[e].target == v && g.edges()[e].source != v) in.push_back(e);
    s.vertices.push_back(v);
    s.size *= in.size();
    s.incoming.push_back(std::move(in));
  }
  return s;
}

std::optional<Arborescence> decode(const Digraph& g, const ChoiceSpace& s, std::uint64_t index) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> picked(s.vertices.size());
  for (std::size_t i = s.vertices.size(); i-- > 0;) {
    const std::uint64_t radix = s.incoming[i].size();
    picked[i] = s.incoming[i][index % radix];
    index /= radix;
    parent[s.vertices[i]] = g.edges()[picked[i]].source;
  }
  // 0 unknown, 1 on current path, 2 reaches root
  std::vector<std::uint8_t> state(n, 0);
  state[s.root] = 2;
  for (std::size_t start : s.vertices) {
    std::vector<std::size_t> path;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = parent[v];
    }
    if (state[v] == 1) return std::nullopt;
    for (std::size_t u : path) state[u] = 2;
  }
  std::sort(picked.begin(), picked.end());
  return Arborescence{s.root, std::move(picked)};
}

}  // namespace

std::vector<Arborescence> enumerate_arborescences_serial(const Digraph& g, std::size_t root) {
  const ChoiceSpace s = choice_space(g, root);
  std::vector<Arborescence> out;
  for (std::uint64_t i = 0; i < s.size; ++i)
    if (auto tree = decode(g, s, i)) out.push_back(std::move(*tree));
  return out;
}

std::vector<Arborescence> enumerate_arborescences(const Digraph& g, std::size_t root) {
#ifdef VLINK_HAVE_OPENMP
  const ChoiceSpace s = choice_space(g, root);
  std::vector<std::vector<Arborescence>> chunks(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = s.size * t / threads;
    const std::uint64_t end = s.size * (t + 1) / threads;
    auto& chunk = chunks[t];
    for (std::uint64_t i = begin; i < end; ++i)
      if (auto tree = decode(g, s, i)) chunk.push_back(std::move(*tree));
  }
  std::vector<Arborescence> out;
  for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
#else
  return enumerate_arborescences_serial(g, root);
#endif
}

LaurentPoly weight(const Digraph& g, const Arborescence& tree) {
  LaurentPoly w = 1;
  for (std::size_t e : tree.edges) w *= g.edges()[e].valuation;
  return w;
}

namespace {

std::uint64_t count_circuits_from(const Digraph& g, const std::vector<std::vector<std::size_t>>& out_edges,
                                  std::vector<bool>& used, std::size_t at, std::size_t remaining) {
  if (remaining == 0) return at == g.edges()[0].source ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t e : out_edges[at]) {
    if (used[e]) continue;
    used[e] = true;
    total += count_circuits_from(g, out_edges, used, g.edges()[e].target, remaining - 1);
    used[e] = false;
  }
  return total;
}

}  // namespace

Integer count_eulerian_circuits(const Digraph& g, EulerianMode mode) {
  if (g.edge_count() == 0) throw PreconditionError("Eulerian circuits need at least one edge");
  if (!g.is_balanced()) throw PreconditionError("graph is not balanced");
  if (!g.is_weakly_connected()) throw PreconditionError("graph is not connected");
  if (mode == EulerianMode::best) {
    Digraph unit(g.vertex_count());
    for (const Edge& e : g.edges())
      if (e.source != e.target) unit.add_edge(e.source, e.target);
    const LaurentPoly trees = count_rooted_trees(unit, 0);
    Integer total = trees.coefficient(0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      for (std::size_t k = 2; k < g.out_degree(v); ++k) total *= k;
    return total;
  }
  if (g.edge_count() > kEulerianEdgeBound)
    throw BoundExceeded("Eulerian enumeration is limited to " + std::to_string(kEulerianEdgeBound) + " edges");
  std::vector<std::vector<std::size_t>> out_edges(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) out_edges[g.edges()[e].source].push_back(e);
  std::vector<bool> used(g.edge_count(), false);
  used[0] = true;
  return count_circuits_from(g, out_edges, used, g.edges()[0].target, g.edge_count() - 1);
}

bool has_articulation_vertex(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adjacent(n);
  for (const Edge& e : g.edges())
    if (e.source != e.target) {
      adjacent[e.source].push_back(e.target);
      adjacent[e.target].push_back(e.source);
    }
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  int clock = 0;
  bool found = false;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t v, std::size_t parent) {
    order[v] = low[v] = clock++;
    int children = 0;
    bool skipped_parent = false;
    for (std::size_t w : adjacent[v]) {
      // Only one copy of the tree edge back to the parent is skipped, so
      // parallel edges count as genuine back edges.
      if (w == parent && !skipped_parent) {
        skipped_parent = true;
        continue;
      }
      if (order[w] >= 0) {
        low[v] = std::min(low[v], order[w]);
        continue;
      }
      ++children;
      visit(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent != n && low[w] >= order[v]) found = true;
    }
    if (parent == n && children > 1) found = true;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (order[v] < 0) visit(v, n);
  return found;
}

LaurentPoly alexander_via_trees(const GaussDiagram& d) {
  if (d.crossing_count() == 0) return d.circle_count() == 1 ? LaurentPoly(1) : LaurentPoly{};
  if (!is_alternating(d)) throw PreconditionError("tree formula needs an alternating diagram");
  if (!is_almost_classical_diagram(d)) throw PreconditionError("diagram admits no integer Alexander numbering");
  const Digraph g = source_sink_graph(d, true);
  for (const Circle& c : d.circles())
    if (c.empty()) return LaurentPoly{};
  return canonicalize(count_rooted_trees(g, 0));
}

}  // namespace vlink
