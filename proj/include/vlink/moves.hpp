#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlink/gauss.hpp"

namespace vlink {

enum class MoveKind : std::uint8_t { r1_insert, r1_delete, r2_insert, r2_delete, r3, f1 };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::r1_insert, MoveKind::r1_delete, MoveKind::r2_insert,
                                             MoveKind::r2_delete, MoveKind::r3, MoveKind::f1};

std::string_view move_kind_name(MoveKind k);  // "R1_insert", ..., "F1"
MoveKind parse_move_kind(std::string_view name);  // throws std::invalid_argument

class MoveSet {
 public:
  MoveSet() = default;
  MoveSet(std::initializer_list<MoveKind> kinds) {
    for (MoveKind k : kinds) insert(k);
  }
  static MoveSet virtual_moves() {
    return {MoveKind::r1_insert, MoveKind::r1_delete, MoveKind::r2_insert, MoveKind::r2_delete, MoveKind::r3};
  }
  static MoveSet welded_moves() {
    MoveSet s = virtual_moves();
    s.insert(MoveKind::f1);
    return s;
  }

  void insert(MoveKind k) { bits_ |= bit(k); }
  bool contains(MoveKind k) const { return (bits_ & bit(k)) != 0; }
  bool empty() const { return bits_ == 0; }
  // Adds the inverse kind of every member (insert <-> delete).
  MoveSet with_inverses() const;

 private:
  static std::uint8_t bit(MoveKind k) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(k)); }
  std::uint8_t bits_ = 0;
};

// A move at a definite site of a definite diagram. Fields not used by a
// kind keep their defaults.
//
//  R1_insert  new chord at `gap`, tail before head iff `tail_first`, `sign`.
//  R2_insert  new chords a, b (labels max+1, max+2) with tails [a, b] at
//             `gap` and heads at `second_gap`, [b, a] iff `reversed`; a has
//             `sign`, b the opposite. When both gaps coincide the head block
//             comes first iff `heads_first`.
//  R1_delete  labels = {c}.
//  R2_delete  labels = {a, b}.
//  R3         labels = {a, b, c}: a runs top to middle, b top to bottom, c
//             middle to bottom; each adjacent endpoint pair is reversed.
//  F1         tails at slots gap.position and the next slot are swapped.
struct MoveInstance {
  MoveKind kind = MoveKind::r1_insert;
  Gap gap;
  Gap second_gap;
  bool tail_first = true;
  bool reversed = false;
  bool heads_first = false;
  ChordSign sign = ChordSign::positive;
  std::vector<int> labels;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

std::string describe(const MoveInstance& m);

// Throws DiagramError if the move does not apply to d.
GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m);

// Every applicable move of an allowed kind whose result has at most max_n
// chords, in a fixed order (kind, then site).
std::vector<std::pair<MoveInstance, GaussDiagram>> enumerate_moves(const GaussDiagram& d, const MoveSet& allowed,
                                                                   std::size_t max_n);

struct SearchVerdict {
  enum class Status { equivalent, not_found };
  Status status = Status::not_found;
  // Each move applies to the canonical diagram of the state before it; see
  // replay_path.
  std::vector<MoveInstance> path;
  std::size_t explored = 0;
  bool bound_hit = false;
};

// Bidirectional breadth-first search over canonical codes. The allowed set
// is closed under inverses first. Layers expand in parallel; merging runs in
// frontier order so the verdict and path do not depend on thread count.
SearchVerdict equivalent_bounded(const GaussDiagram& d1, const GaussDiagram& d2, const MoveSet& allowed,
                                 std::size_t max_n, std::size_t node_budget);

// Starting from canonical_diagram(start), apply each move and
// re-canonicalize. The result's canonical code is the search target's.
GaussDiagram replay_path(const GaussDiagram& start, const std::vector<MoveInstance>& path);

}  // namespace vlink
