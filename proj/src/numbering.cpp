#include "vlink/numbering.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vlink/error.hpp"

namespace vlink {

namespace {

std::vector<std::size_t> arc_offsets(const GaussDiagram& d) {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const Circle& c : d.circles()) {
    offsets.push_back(total);
    total += std::max<std::size_t>(1, c.size());
  }
  offsets.push_back(total);
  return offsets;
}

long long reduce_mod(long long x, long long m) {
  if (m == 0) return x;
  x %= m;
  return x < 0 ? x + m : x;
}

// Union-find over arcs carrying value(x) - value(root(x)), so that every
// constraint value(a) - value(b) = c can be merged or checked in near
// constant time. This decides solvability exactly over Z and over Z/p.
class DifferenceSolver {
 public:
  DifferenceSolver(std::size_t n, long long modulus) : parent_(n), offset_(n, 0), modulus_(modulus) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  bool add(std::size_t a, std::size_t b, long long c) {
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra == rb) return reduce_mod(oa - ob - c, modulus_) == 0;
    // value(ra) - value(rb) = c - oa + ob
    parent_[ra] = rb;
    offset_[ra] = reduce_mod(c - oa + ob, modulus_);
    return true;
  }

  std::vector<long long> witness() {
    std::vector<long long> out(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) out[i] = find(i).second;
    return out;
  }

 private:
  std::pair<std::size_t, long long> find(std::size_t x) {
    long long total = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      total += offset_[root];
      root = parent_[root];
    }
    // Path compression with offsets recomputed along the way.
    std::size_t cur = x;
    long long remaining = total;
    while (parent_[cur] != cur) {
      const std::size_t next = parent_[cur];
      const long long own = offset_[cur];
      parent_[cur] = root;
      offset_[cur] = reduce_mod(remaining, modulus_);
      remaining -= own;
      cur = next;
    }
    return {root, reduce_mod(total, modulus_)};
  }

  std::vector<std::size_t> parent_;
  std::vector<long long> offset_;
  long long modulus_;
};

void check_circle_set(const GaussDiagram& d, const std::vector<std::size_t>& set, const char* name) {
  if (set.empty()) throw std::invalid_argument(std::string(name) + " circle set is empty");
  for (std::size_t c : set)
    if (c >= d.circle_count()) throw std::invalid_argument(std::string(name) + " circle index out of range");
}

}  // namespace

std::size_t short_arc_count(const GaussDiagram& d) { return arc_offsets(d).back(); }

std::size_t short_arc(const GaussDiagram& d, std::size_t circle, std::size_t slot) {
  std::size_t offset = 0;
  for (std::size_t c = 0; c < circle; ++c) offset += std::max<std::size_t>(1, d.slot_count(c));
  const std::size_t slots = d.slot_count(circle);
  return offset + (slots == 0 ? 0 : slot % slots);
}

ChordArcs chord_short_arcs(const GaussDiagram& d, const Chord& c) {
  auto before = [&](const Endpoint& e) {
    const std::size_t slots = d.slot_count(e.circle);
    return short_arc(d, e.circle, (e.position + slots - 1) % slots);
  };
  return ChordArcs{before(c.tail), short_arc(d, c.tail.circle, c.tail.position), before(c.head),
                   short_arc(d, c.head.circle, c.head.position)};
}

int vlk(const GaussDiagram& d, const std::vector<std::size_t>& over, const std::vector<std::size_t>& under) {
  check_circle_set(d, over, "over");
  check_circle_set(d, under, "under");
  const std::set<std::size_t> over_set(over.begin(), over.end());
  const std::set<std::size_t> under_set(under.begin(), under.end());
  for (std::size_t c : over_set)
    if (under_set.count(c)) throw std::invalid_argument("over and under circle sets overlap");
  int total = 0;
  for (const Chord& c : d.chords())
    if (over_set.count(c.tail.circle) && under_set.count(c.head.circle)) total += to_int(c.sign);
  return total;
}

Partition circle_partition(const GaussDiagram& d) {
  Partition p;
  for (std::size_t c = 0; c < d.circle_count(); ++c) p.push_back({c});
  return p;
}

namespace {

void check_partition(const GaussDiagram& d, const Partition& partition) {
  std::vector<int> hits(d.circle_count(), 0);
  for (const auto& group : partition) {
    if (group.empty()) throw std::invalid_argument("empty partition group");
    for (std::size_t c : group) {
      if (c >= d.circle_count()) throw std::invalid_argument("partition names a missing circle");
      ++hits[c];
    }
  }
  for (int h : hits)
    if (h != 1) throw std::invalid_argument("partition must cover every circle exactly once");
}

}  // namespace

VlkTable vlk_table(const GaussDiagram& d, const Partition& partition) {
  check_partition(d, partition);
  VlkTable t;
  t.entries.assign(partition.size(), std::vector<int>(partition.size(), 0));
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (std::size_t j = 0; j < partition.size(); ++j)
      if (i != j) t.entries[i][j] = vlk(d, partition[i], partition[j]);
  return t;
}

bool is_cheng_colorable(const GaussDiagram& d, const Partition& partition) {
  check_partition(d, partition);
  if (partition.size() < 2) return true;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < partition.size(); ++j)
      if (j != i) rest.insert(rest.end(), partition[j].begin(), partition[j].end());
    if (vlk(d, partition[i], rest) != vlk(d, rest, partition[i])) return false;
  }
  return true;
}

bool is_cheng_colorable(const GaussDiagram& d) { return is_cheng_colorable(d, circle_partition(d)); }

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::optional<ArcLabeling> numbering(const GaussDiagram& d, long long modulus) {
  if (modulus != 0 && !is_prime(modulus)) throw PreconditionError("modulus must be 0 or a prime");
  DifferenceSolver solver(short_arc_count(d), modulus);
  for (const Chord& c : d.chords()) {
    const ChordArcs a = chord_short_arcs(d, c);
    if (!solver.add(a.over_out, a.over_in, -to_int(c.sign))) return std::nullopt;
    if (!solver.add(a.under_in, a.over_out, 0)) return std::nullopt;
    if (!solver.add(a.under_out, a.over_in, 0)) return std::nullopt;
  }
  return ArcLabeling{solver.witness(), modulus};
}

bool satisfies_local_rules(const GaussDiagram& d, const ArcLabeling& labeling) {
  if (labeling.values.size() != short_arc_count(d)) return false;
  const auto& v = labeling.values;
  const long long m = labeling.modulus;
  for (const Chord& c : d.chords()) {
    const ChordArcs a = chord_short_arcs(d, c);
    if (reduce_mod(v[a.over_out] - v[a.over_in] + to_int(c.sign), m) != 0) return false;
    if (reduce_mod(v[a.under_in] - v[a.over_out], m) != 0) return false;
    if (reduce_mod(v[a.under_out] - v[a.over_in], m) != 0) return false;
  }
  return true;
}

bool is_checkerboard_colorable(const GaussDiagram& d) { return numbering(d, 2).has_value(); }
bool is_almost_classical_diagram(const GaussDiagram& d) { return numbering(d, 0).has_value(); }

Digraph source_sink_graph(const GaussDiagram& d, bool valuated) {
  const auto parity = numbering(d, 2);
  if (!parity) throw PreconditionError("diagram is not checkerboard colorable");
  const bool alternating = is_alternating(d);
  if (valuated) {
    if (!alternating) throw PreconditionError("valuated source-sink graph needs an alternating diagram");
    if (d.crossing_count() == 0) throw PreconditionError("valuated source-sink graph needs at least one chord");
  }
  Digraph g(d.crossing_count());
  for (std::size_t ci = 0; ci < d.circle_count(); ++ci) {
    const Circle& circle = d.circles()[ci];
    const std::size_t slots = circle.size();
    for (std::size_t r = 0; r < slots; ++r) {
      const Token& from = circle[r];
      const Token& to = circle[(r + 1) % slots];
      const std::size_t u = *d.chord_index(from.label);
      const std::size_t v = *d.chord_index(to.label);
      if (alternating) {
        if (from.kind == EndpointKind::tail) {
          // Segment arrives at the head of `to`: incoming under-arc there.
          LaurentPoly f = 1;
          if (valuated && to.sign == ChordSign::negative) f = LaurentPoly::monomial(-1, 1);
          g.add_edge(u, v, f);
        } else {
          // Segment leaves the head of `from`: outgoing under-arc there.
          LaurentPoly f = 1;
          if (valuated && from.sign == ChordSign::positive) f = LaurentPoly::monomial(-1, 1);
          g.add_edge(v, u, f);
        }
      } else if (parity->values[short_arc(d, ci, r)] == 0) {
        g.add_edge(u, v);
      } else {
        g.add_edge(v, u);
      }
    }
  }
  if (valuated && g.has_loop()) throw PreconditionError("source-sink graph has a loop (kink chord)");
  return g;
}

}  // namespace vlink
