#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vlink/digraph.hpp"
#include "vlink/gauss.hpp"

namespace vlink {

// Short arcs are the segments between consecutive slots. Arc indices run
// circle by circle; on a circle with slots, arc r is the segment leaving slot
// r. A chordless circle is a single closed arc.
std::size_t short_arc_count(const GaussDiagram& d);
std::size_t short_arc(const GaussDiagram& d, std::size_t circle, std::size_t slot);

// Arcs meeting a chord: the over strand enters through over_in and leaves
// through over_out, likewise for the under strand.
struct ChordArcs {
  std::size_t over_in = 0;
  std::size_t over_out = 0;
  std::size_t under_in = 0;
  std::size_t under_out = 0;
};
ChordArcs chord_short_arcs(const GaussDiagram& d, const Chord& c);

struct ArcLabeling {
  std::vector<long long> values;  // indexed by short arc
  long long modulus = 0;          // 0 for integer labels
};

// Sum of chord signs with tail on `over` and head on `under`. Throws
// std::invalid_argument if either set is empty, the sets overlap, or an
// index is out of range.
int vlk(const GaussDiagram& d, const std::vector<std::size_t>& over, const std::vector<std::size_t>& under);

// Groups of circles forming link components. The default puts each circle
// in its own group.
using Partition = std::vector<std::vector<std::size_t>>;
Partition circle_partition(const GaussDiagram& d);

// entries[i][j] = vlk(group i, group j); the diagonal is 0.
struct VlkTable {
  std::vector<std::vector<int>> entries;
};
VlkTable vlk_table(const GaussDiagram& d, const Partition& partition);

// Cheng colorability via virtual linking numbers: every component must have
// vlk(K, rest) = vlk(rest, K). Throws std::invalid_argument for a partition
// that does not cover each circle exactly once.
bool is_cheng_colorable(const GaussDiagram& d, const Partition& partition);
bool is_cheng_colorable(const GaussDiagram& d);

// Alexander numbering over the integers (modulus 0) or mod a prime. Each chord
// of sign e imposes over_out - over_in = -e, under_in = over_out and
// under_out = over_in. Throws PreconditionError for a nonprime modulus.
std::optional<ArcLabeling> numbering(const GaussDiagram& d, long long modulus);

// True iff the labeling satisfies every local rule (mod its modulus).
bool satisfies_local_rules(const GaussDiagram& d, const ArcLabeling& labeling);

bool is_checkerboard_colorable(const GaussDiagram& d);
bool is_almost_classical_diagram(const GaussDiagram& d);

bool is_prime(long long p);

// Crossing graph with one vertex per chord (index into d.chords()) and one
// edge per short arc.
//
// Alternating diagrams: each arc runs between a tail and a head and is
// directed from the chord owning the tail to the chord owning the head. With
// `valuated`, the arc into the head of chord j is weighted by its role there:
// incoming under-arc 1 and outgoing under-arc -t for positive j, -t and 1
// for negative j.
//
// Other checkerboard colorable diagrams: arcs are directed by the parity of a
// mod 2 numbering, giving two in- and two out-edges on opposite strands at
// every crossing. Unit valuations only.
//
// Throws PreconditionError if d is not checkerboard colorable, or with
// `valuated` if d is not alternating, has no chords, or yields a loop.
Digraph source_sink_graph(const GaussDiagram& d, bool valuated = false);

}  // namespace vlink
