#pragma once

#include <cstddef>
#include <vector>

#include "vlink/digraph.hpp"
#include "vlink/gauss.hpp"
#include "vlink/laurent.hpp"
#include "vlink/matrix.hpp"

namespace vlink {

// Spanning tree directed away from `root`: edge indices into the graph, one
// entering each non-root vertex, sorted ascending.
struct Arborescence {
  std::size_t root = 0;
  std::vector<std::size_t> edges;
};

inline constexpr std::size_t kArborescenceEdgeBound = 24;
inline constexpr std::size_t kEulerianEdgeBound = 16;

// H(i, j) = -(sum of valuations on edges i -> j) off the diagonal and
// H(j, j) = sum of valuations on edges entering j. Throws PreconditionError
// if the graph has a loop.
LaurentMatrix graph_matrix(const Digraph& g);

// Principal minor of graph_matrix at `root`: the valuation-weighted number of
// arborescences rooted there.
LaurentPoly count_rooted_trees(const Digraph& g, std::size_t root);

// All arborescences rooted at `root`, in lexicographic order of their edge
// choices. Throws BoundExceeded beyond kArborescenceEdgeBound edges. The
// parallel version splits the choice space across threads and concatenates
// chunks in order, so both return identical lists.
std::vector<Arborescence> enumerate_arborescences(const Digraph& g, std::size_t root);
std::vector<Arborescence> enumerate_arborescences_serial(const Digraph& g, std::size_t root);

// Product of edge valuations over an arborescence.
LaurentPoly weight(const Digraph& g, const Arborescence& tree);

enum class EulerianMode { best, enumerate };

// Eulerian circuits counted as edge cycles up to rotation, parallel edges
// distinguished. best: trees at vertex 0 (loops ignored) times the product of
// (outdegree - 1)!. enumerate: exhaustive count of circuits starting with
// edge 0, bounded by kEulerianEdgeBound. Throws PreconditionError unless the
// graph is balanced and weakly connected with at least one edge.
Integer count_eulerian_circuits(const Digraph& g, EulerianMode mode);

// Cut vertex of the underlying undirected multigraph (loops ignored).
bool has_articulation_vertex(const Digraph& g);

// Canonical Alexander polynomial from the valuated source-sink graph. Requires
// an alternating diagram with an integer Alexander numbering and a loop-free
// source-sink graph; the chordless unknot gives 1.
LaurentPoly alexander_via_trees(const GaussDiagram& d);

}  // namespace vlink
