#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vlink {

enum class ChordSign : std::int8_t { negative = -1, positive = 1 };

inline int to_int(ChordSign s) { return static_cast<int>(s); }
inline ChordSign flipped(ChordSign s) { return s == ChordSign::positive ? ChordSign::negative : ChordSign::positive; }
inline char sign_char(ChordSign s) { return s == ChordSign::positive ? '+' : '-'; }

// Tail = over-crossing (O in Gauss code), head = under-crossing (U).
enum class EndpointKind : std::uint8_t { tail, head };

struct Endpoint {
  std::size_t circle = 0;
  std::size_t position = 0;
  EndpointKind kind = EndpointKind::tail;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// One slot on a core circle, as it appears in Gauss code.
struct Token {
  EndpointKind kind = EndpointKind::tail;
  int label = 0;
  ChordSign sign = ChordSign::positive;
  friend bool operator==(const Token&, const Token&) = default;
};

using Circle = std::vector<Token>;

struct Chord {
  int label = 0;
  Endpoint tail;
  Endpoint head;
  ChordSign sign = ChordSign::positive;

  bool is_self_chord() const { return tail.circle == head.circle; }
};

// A gap between two consecutive slots of a circle: the point just before
// slot `position`. A chordless circle has the single gap 0.
struct Gap {
  std::size_t circle = 0;
  std::size_t position = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

// Gauss diagram of a virtual link diagram: counterclockwise core circles with
// signed chords pointing from the over-crossing to the under-crossing.
// Immutable once constructed; every instance satisfies the slot/chord
// incidence invariants checked by from_circles.
class GaussDiagram {
 public:
  // The chordless unknot.
  GaussDiagram();

  // Throws DiagramError unless every label occurs exactly twice, once as a
  // tail and once as a head, with matching signs, and labels are positive.
  static GaussDiagram from_circles(std::vector<Circle> circles);

  const std::vector<Circle>& circles() const { return circles_; }
  const std::vector<Chord>& chords() const { return chords_; }  // sorted by label
  std::size_t crossing_count() const { return chords_.size(); }
  std::size_t circle_count() const { return circles_.size(); }
  std::size_t slot_count(std::size_t circle) const { return circles_.at(circle).size(); }

  std::optional<std::size_t> chord_index(int label) const;
  const Chord& chord(int label) const;  // throws std::out_of_range
  const Token& token(std::size_t circle, std::size_t position) const { return circles_[circle][position]; }
  int max_label() const { return chords_.empty() ? 0 : chords_.back().label; }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) { return a.circles_ == b.circles_; }

 private:
  std::vector<Circle> circles_;
  std::vector<Chord> chords_;
};

// Parse Gauss code: circles separated by ';' (or '|'), each either '*' or a
// run of tokens (O|U)<label>(+|-). Whitespace and commas between tokens are
// ignored. Throws ParseError for syntax, DiagramError for invalid structure.
GaussDiagram parse_gauss_code(std::string_view text);

// Compact serialization with the diagram's own labels.
std::string serialize(const GaussDiagram& d);

// Canonical code: invariant under rotating each circle, permuting circles and
// relabeling chords. Connected components are canonicalized independently
// (lexicographically least over circle order and starting slots, labels
// renumbered in first-traversal order), sorted, and joined with '|'.
std::string canonical_code(const GaussDiagram& d);

// Canonical code of a raw circle list; skips diagram validation.
std::string canonical_code(const std::vector<Circle>& circles);

// The diagram spelled by canonical_code(d): circles in canonical order and
// rotation, labels renumbered.
GaussDiagram canonical_diagram(const GaussDiagram& d);

struct DiagramStats {
  std::size_t n = 0;  // classical crossings
  std::size_t k = 0;  // circles
  int writhe = 0;
  std::vector<std::vector<std::size_t>> components;  // circle indices, sorted
};

// Connected components of the chord-incidence structure on circles.
std::vector<std::vector<std::size_t>> connected_components(const GaussDiagram& d);
DiagramStats stats(const GaussDiagram& d);

bool is_alternating(const GaussDiagram& d);
bool is_visibly_split(const GaussDiagram& d);

// Remove a chord and reconnect the strands respecting orientation.
GaussDiagram oriented_smoothing(const GaussDiagram& d, int label);

// Delete a chord's two endpoints without reconnecting (virtualizing it).
GaussDiagram delete_chord(const GaussDiagram& d, int label);

// Self-chords whose oriented smoothing disconnects their component.
std::vector<int> find_nugatory(const GaussDiagram& d);

// Delete nugatory chords one at a time, lowest label first, until none remain.
GaussDiagram reduce(const GaussDiagram& d);

bool is_reduced(const GaussDiagram& d);

// Splice circle p2.circle of d2 into circle p1.circle of d1 at the gaps.
// Labels of d2 are shifted by d1.max_label(). Throws std::out_of_range for
// an invalid gap.
GaussDiagram connected_sum(const GaussDiagram& d1, Gap p1, const GaussDiagram& d2, Gap p2);

// Factor a diagram along chord-closed arcs into connected summands. A single
// summand means the diagram is prime in this diagrammatic sense.
std::vector<GaussDiagram> connected_summands(const GaussDiagram& d);

// Connected sum of alternating diagrams (checked on the finest factorization).
bool is_semi_alternating(const GaussDiagram& d);

// Relabel chords 1..n in first-traversal order, circles and slots unchanged.
GaussDiagram relabeled(const GaussDiagram& d);

}  // namespace vlink
