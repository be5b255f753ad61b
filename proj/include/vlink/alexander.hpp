#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vlink/gauss.hpp"
#include "vlink/laurent.hpp"
#include "vlink/matrix.hpp"

namespace vlink {

// A long arc runs from one head (under-crossing) to the next along a circle.
// A circle without heads is a single closed arc.
struct LongArc {
  std::size_t circle = 0;
  std::optional<std::size_t> start_head;  // slot of the head it leaves, if any
  std::vector<std::size_t> segments;      // short arcs (segment leaving slot r)
};

// Arcs at one chord: `over` passes over it, `in` ends at its head and `out`
// starts there.
struct ArcIncidence {
  std::size_t over = 0;
  std::size_t in = 0;
  std::size_t out = 0;
};

struct LongArcStructure {
  std::vector<LongArc> arcs;
  std::vector<ArcIncidence> incidence;  // parallel to GaussDiagram::chords()
  std::size_t arc_count() const { return arcs.size(); }
};

LongArcStructure long_arcs(const GaussDiagram& d);

// Word letter: generator index and exponent +-1.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;
};
using Word = std::vector<Letter>;

// One generator per long arc, one relation per chord. A chord of sign e with
// arcs (over, in, out) contributes x_in x_over^e x_out^-1 x_over^-e.
struct WirtingerPresentation {
  std::size_t generator_count = 0;
  std::vector<Word> relations;
};

WirtingerPresentation wirtinger(const GaussDiagram& d);

// Fox derivatives of every relation with all generators sent to t.
LaurentMatrix fox_jacobian(const WirtingerPresentation& p);

// Entry 2 on the over-arc and -1 on each under-arc of every chord, summed when
// arcs coincide.
IntegerMatrix coloring_matrix(const GaussDiagram& d);

// |det(L)| from the coloring matrix. Throws PreconditionError unless d is
// checkerboard colorable. Diagrams with more long arcs than chords have
// determinant 0; the chordless unknot has determinant 1.
Integer determinant(const GaussDiagram& d);

// Gcd generating the smallest principal ideal containing the k-th elementary
// ideal: minors of size m-k of the n x m Fox Jacobian (0 if m-k > n).
// Throws PreconditionError unless 1 <= k <= n.
LaurentPoly elementary_ideal_gcd(const GaussDiagram& d, std::size_t k);

enum class AlexanderMode { almost_classical, gcd };

// Canonical form. almost_classical: one minor of the Fox Jacobian (last row
// and column deleted), requires an integer Alexander numbering. gcd: the
// first elementary ideal gcd (1 for the chordless unknot, 0 for other
// chordless diagrams).
LaurentPoly alexander_polynomial(const GaussDiagram& d, AlexanderMode mode);

// Long-arc labeling with values in 0..p-1 satisfying 2x - y - z = 0 (mod p)
// at every chord and using at least two distinct values. Throws
// PreconditionError if p is not prime or d is not checkerboard colorable.
std::optional<std::vector<long long>> mod_p_labeling(const GaussDiagram& d, long long p);

}  // namespace vlink
