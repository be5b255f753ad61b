#include "vlink/moves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "vlink/error.hpp"

#ifdef VLINK_HAVE_OPENMP
#include <omp.h>
#endif

namespace vlink {

std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_insert: return "R1_insert";
    case MoveKind::r1_delete: return "R1_delete";
    case MoveKind::r2_insert: return "R2_insert";
    case MoveKind::r2_delete: return "R2_delete";
    case MoveKind::r3: return "R3";
    case MoveKind::f1: return "F1";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view name) {
  for (MoveKind k : kAllMoveKinds)
    if (move_kind_name(k) == name) return k;
  throw std::invalid_argument("unknown move kind '" + std::string(name) + "'");
}

MoveSet MoveSet::with_inverses() const {
  MoveSet s = *this;
  if (contains(MoveKind::r1_insert) || contains(MoveKind::r1_delete)) {
    s.insert(MoveKind::r1_insert);
    s.insert(MoveKind::r1_delete);
  }
  if (contains(MoveKind::r2_insert) || contains(MoveKind::r2_delete)) {
    s.insert(MoveKind::r2_insert);
    s.insert(MoveKind::r2_delete);
  }
  return s;
}

std::string describe(const MoveInstance& m) {
  std::ostringstream out;
  out << move_kind_name(m.kind);
  auto gap = [&out](const Gap& g) { out << " gap " << g.circle << ':' << g.position; };
  switch (m.kind) {
    case MoveKind::r1_insert:
      gap(m.gap);
      out << (m.tail_first ? " tail-first" : " head-first") << ' ' << sign_char(m.sign);
      break;
    case MoveKind::r2_insert:
      out << " tails";
      gap(m.gap);
      out << " heads";
      gap(m.second_gap);
      out << (m.reversed ? " reversed" : " parallel") << ' ' << sign_char(m.sign);
      if (m.heads_first) out << " heads-first";
      break;
    case MoveKind::f1:
      gap(m.gap);
      break;
    default:
      out << " chords";
      for (int l : m.labels) out << ' ' << l;
  }
  return out.str();
}

namespace {

bool valid_gap(const GaussDiagram& d, const Gap& g) {
  if (g.circle >= d.circle_count()) return false;
  const std::size_t slots = d.slot_count(g.circle);
  return slots == 0 ? g.position == 0 : g.position < slots;
}

// 1 if a immediately precedes b, 0 if b immediately precedes a, -1 if the two
// endpoints are not adjacent on a circle with at least three slots.
int adjacency(const GaussDiagram& d, const Endpoint& a, const Endpoint& b) {
  if (a.circle != b.circle) return -1;
  const std::size_t slots = d.slot_count(a.circle);
  if (slots < 3) return -1;
  if ((a.position + 1) % slots == b.position) return 1;
  if ((b.position + 1) % slots == a.position) return 0;
  return -1;
}

bool cyclically_adjacent(const GaussDiagram& d, const Endpoint& a, const Endpoint& b) {
  if (a.circle != b.circle) return false;
  const std::size_t slots = d.slot_count(a.circle);
  return (a.position + 1) % slots == b.position || (b.position + 1) % slots == a.position;
}

bool r1_deletable(const Chord& c, const GaussDiagram& d) {
  return c.is_self_chord() && cyclically_adjacent(d, c.tail, c.head);
}

bool r2_deletable(const Chord& a, const Chord& b, const GaussDiagram& d) {
  return a.sign != b.sign && cyclically_adjacent(d, a.tail, b.tail) && cyclically_adjacent(d, a.head, b.head);
}

// Triangle with a: top -> middle, b: top -> bottom, c: middle -> bottom.
// Valid exactly when the signs fit the cyclic order of each endpoint pair.
bool r3_applicable(const Chord& a, const Chord& b, const Chord& c, const GaussDiagram& d) {
  const int top = adjacency(d, a.tail, b.tail);
  const int middle = adjacency(d, a.head, c.tail);
  const int bottom = adjacency(d, b.head, c.head);
  if (top < 0 || middle < 0 || bottom < 0) return false;
  const int ab = to_int(a.sign) * to_int(b.sign);
  const int bc = to_int(b.sign) * to_int(c.sign);
  return ab == ((middle + bottom) % 2 == 0 ? 1 : -1) && bc == ((top + middle) % 2 == 0 ? 1 : -1);
}

void swap_slots(std::vector<Circle>& circles, const Endpoint& x, const Endpoint& y) {
  std::swap(circles[x.circle][x.position], circles[y.circle][y.position]);
}

const Chord& chord_or_throw(const GaussDiagram& d, int label) {
  if (!d.chord_index(label)) throw DiagramError("move names unknown chord " + std::to_string(label));
  return d.chord(label);
}

// Insert blocks at gaps; gaps index the original circles.
std::vector<Circle> insert_blocks(std::vector<Circle> circles, std::vector<std::pair<Gap, Circle>> blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
    if (x.first.circle != y.first.circle) return x.first.circle < y.first.circle;
    return x.first.position > y.first.position;
  });
  for (const auto& [g, tokens] : blocks) {
    Circle& c = circles[g.circle];
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(g.position), tokens.begin(), tokens.end());
  }
  return circles;
}

std::vector<Circle> erase_labels(std::vector<Circle> circles, const std::vector<int>& labels) {
  for (Circle& c : circles)
    std::erase_if(c, [&](const Token& t) { return std::find(labels.begin(), labels.end(), t.label) != labels.end(); });
  return circles;
}

}  // namespace

GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m) {
  const int fresh = d.max_label() + 1;
  switch (m.kind) {
    case MoveKind::r1_insert: {
      if (!valid_gap(d, m.gap)) throw DiagramError("R1_insert: invalid gap");
      const Token tail{EndpointKind::tail, fresh, m.sign};
      const Token head{EndpointKind::head, fresh, m.sign};
      Circle block = m.tail_first ? Circle{tail, head} : Circle{head, tail};
      return GaussDiagram::from_circles(insert_blocks(d.circles(), {{m.gap, block}}));
    }
    case MoveKind::r1_delete: {
      if (m.labels.size() != 1) throw DiagramError("R1_delete takes one chord");
      if (!r1_deletable(chord_or_throw(d, m.labels[0]), d)) throw DiagramError("R1_delete: chord is not a kink");
      return GaussDiagram::from_circles(erase_labels(d.circles(), m.labels));
    }
    case MoveKind::r2_insert: {
      if (!valid_gap(d, m.gap) || !valid_gap(d, m.second_gap)) throw DiagramError("R2_insert: invalid gap");
      const int a = fresh;
      const int b = fresh + 1;
      const ChordSign sb = flipped(m.sign);
      Circle tails{{EndpointKind::tail, a, m.sign}, {EndpointKind::tail, b, sb}};
      Circle heads = m.reversed ? Circle{{EndpointKind::head, b, sb}, {EndpointKind::head, a, m.sign}}
                                : Circle{{EndpointKind::head, a, m.sign}, {EndpointKind::head, b, sb}};
      const bool same = m.gap.circle == m.second_gap.circle && m.gap.position == m.second_gap.position;
      if (same) {
        Circle block = m.heads_first ? heads : tails;
        const Circle& rest = m.heads_first ? tails : heads;
        block.insert(block.end(), rest.begin(), rest.end());
        return GaussDiagram::from_circles(insert_blocks(d.circles(), {{m.gap, block}}));
      }
      return GaussDiagram::from_circles(insert_blocks(d.circles(), {{m.gap, tails}, {m.second_gap, heads}}));
    }
    case MoveKind::r2_delete: {
      if (m.labels.size() != 2) throw DiagramError("R2_delete takes two chords");
      if (!r2_deletable(chord_or_throw(d, m.labels[0]), chord_or_throw(d, m.labels[1]), d))
        throw DiagramError("R2_delete: chords do not form a bigon");
      return GaussDiagram::from_circles(erase_labels(d.circles(), m.labels));
    }
    case MoveKind::r3: {
      if (m.labels.size() != 3) throw DiagramError("R3 takes three chords");
      const Chord& a = chord_or_throw(d, m.labels[0]);
      const Chord& b = chord_or_throw(d, m.labels[1]);
      const Chord& c = chord_or_throw(d, m.labels[2]);
      if (!r3_applicable(a, b, c, d)) throw DiagramError("R3: chords do not form a movable triangle");
      std::vector<Circle> circles = d.circles();
      swap_slots(circles, a.tail, b.tail);
      swap_slots(circles, a.head, c.tail);
      swap_slots(circles, b.head, c.head);
      return GaussDiagram::from_circles(std::move(circles));
    }
    case MoveKind::f1: {
      if (!valid_gap(d, m.gap)) throw DiagramError("F1: invalid slot");
      const std::size_t slots = d.slot_count(m.gap.circle);
      const std::size_t i = m.gap.position;
      const std::size_t j = (i + 1) % slots;
      if (slots < 3 || d.token(m.gap.circle, i).kind != EndpointKind::tail ||
          d.token(m.gap.circle, j).kind != EndpointKind::tail)
        throw DiagramError("F1: slots are not two adjacent tails");
      std::vector<Circle> circles = d.circles();
      std::swap(circles[m.gap.circle][i], circles[m.gap.circle][j]);
      return GaussDiagram::from_circles(std::move(circles));
    }
  }
  throw DiagramError("unknown move kind");
}

std::vector<std::pair<MoveInstance, GaussDiagram>> enumerate_moves(const GaussDiagram& d, const MoveSet& allowed,
                                                                   std::size_t max_n) {
  std::vector<std::pair<MoveInstance, GaussDiagram>> out;
  const std::size_t n = d.crossing_count();
  std::vector<Gap> gaps;
  for (std::size_t c = 0; c < d.circle_count(); ++c)
    for (std::size_t p = 0; p < std::max<std::size_t>(1, d.slot_count(c)); ++p) gaps.push_back(Gap{c, p});
  auto emit = [&](MoveInstance m) {
    GaussDiagram result = apply_move(d, m);
    out.emplace_back(std::move(m), std::move(result));
  };
  const ChordSign signs[] = {ChordSign::positive, ChordSign::negative};

  if (allowed.contains(MoveKind::r1_insert) && n + 1 <= max_n)
    for (const Gap& g : gaps)
      for (bool tail_first : {true, false})
        for (ChordSign s : signs) {
          MoveInstance m;
          m.kind = MoveKind::r1_insert;
          m.gap = g;
          m.tail_first = tail_first;
          m.sign = s;
          emit(std::move(m));
        }
  if (allowed.contains(MoveKind::r1_delete))
    for (const Chord& c : d.chords())
      if (r1_deletable(c, d)) {
        MoveInstance m;
        m.kind = MoveKind::r1_delete;
        m.labels = {c.label};
        emit(std::move(m));
      }
  if (allowed.contains(MoveKind::r2_insert) && n + 2 <= max_n)
    for (const Gap& g1 : gaps)
      for (const Gap& g2 : gaps)
        for (bool reversed : {false, true})
          for (ChordSign s : signs) {
            const bool same = g1.circle == g2.circle && g1.position == g2.position;
            for (bool heads_first : {false, true}) {
              if (heads_first && !same) continue;
              MoveInstance m;
              m.kind = MoveKind::r2_insert;
              m.gap = g1;
              m.second_gap = g2;
              m.reversed = reversed;
              m.sign = s;
              m.heads_first = heads_first;
              emit(std::move(m));
            }
          }
  const auto& chords = d.chords();
  if (allowed.contains(MoveKind::r2_delete))
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j)
        if (r2_deletable(chords[i], chords[j], d)) {
          MoveInstance m;
          m.kind = MoveKind::r2_delete;
          m.labels = {chords[i].label, chords[j].label};
          emit(std::move(m));
        }
  if (allowed.contains(MoveKind::r3))
    for (const Chord& a : chords)
      for (const Chord& b : chords)
        for (const Chord& c : chords) {
          if (a.label == b.label || a.label == c.label || b.label == c.label) continue;
          if (!r3_applicable(a, b, c, d)) continue;
          MoveInstance m;
          m.kind = MoveKind::r3;
          m.labels = {a.label, b.label, c.label};
          emit(std::move(m));
        }
  if (allowed.contains(MoveKind::f1))
    for (std::size_t c = 0; c < d.circle_count(); ++c) {
      const std::size_t slots = d.slot_count(c);
      if (slots < 3) continue;
      for (std::size_t p = 0; p < slots; ++p)
        if (d.token(c, p).kind == EndpointKind::tail && d.token(c, (p + 1) % slots).kind == EndpointKind::tail) {
          MoveInstance m;
          m.kind = MoveKind::f1;
          m.gap = Gap{c, p};
          emit(std::move(m));
        }
    }
  return out;
}

GaussDiagram replay_path(const GaussDiagram& start, const std::vector<MoveInstance>& path) {
  GaussDiagram d = canonical_diagram(start);
  for (const MoveInstance& m : path) d = canonical_diagram(apply_move(d, m));
  return d;
}

namespace {

struct Visit {
  std::string parent;  // empty for the root
  MoveInstance move;   // takes canonical_diagram(parent) to this state
};

using VisitMap = std::unordered_map<std::string, Visit>;

struct Child {
  std::string code;
  MoveInstance move;
};

std::vector<std::string> chain_to_root(const VisitMap& visits, const std::string& code) {
  std::vector<std::string> chain{code};
  while (!visits.at(chain.back()).parent.empty()) chain.push_back(visits.at(chain.back()).parent);
  return chain;
}

// Move on canonical_diagram(from) whose result canonicalizes to `to`; the
// first one in enumeration order.
MoveInstance connecting_move(const std::string& from, const std::string& to, const MoveSet& allowed,
                             std::size_t max_n) {
  const GaussDiagram d = parse_gauss_code(from);
  for (auto& [m, result] : enumerate_moves(d, allowed, max_n))
    if (canonical_code(result) == to) return m;
  throw std::logic_error("search graph edge has no inverse move");
}

}  // namespace

SearchVerdict equivalent_bounded(const GaussDiagram& d1, const GaussDiagram& d2, const MoveSet& requested,
                                 std::size_t max_n, std::size_t node_budget) {
  const MoveSet allowed = requested.with_inverses();
  SearchVerdict verdict;
  const std::string source = canonical_code(d1);
  const std::string target = canonical_code(d2);
  VisitMap visits[2];
  visits[0].emplace(source, Visit{});
  visits[1].emplace(target, Visit{});
  verdict.explored = source == target ? 1 : 2;
  if (source == target) {
    verdict.status = SearchVerdict::Status::equivalent;
    return verdict;
  }
  std::vector<std::string> frontier[2] = {{source}, {target}};
  constexpr std::size_t kBatch = 512;

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[1].size() < frontier[0].size() ? 1 : 0;
    VisitMap& mine = visits[side];
    const VisitMap& theirs = visits[1 - side];
    std::vector<std::string> next;
    std::vector<std::string> meetings;
    for (std::size_t begin = 0; begin < frontier[side].size() && !verdict.bound_hit; begin += kBatch) {
      const std::size_t end = std::min(frontier[side].size(), begin + kBatch);
      std::vector<std::vector<Child>> children(end - begin);
#pragma omp parallel for schedule(dynamic)
      for (long long i = static_cast<long long>(begin); i < static_cast<long long>(end); ++i) {
        const GaussDiagram d = parse_gauss_code(frontier[side][static_cast<std::size_t>(i)]);
        auto& bucket = children[static_cast<std::size_t>(i) - begin];
        for (auto& [m, result] : enumerate_moves(d, allowed, max_n))
          bucket.push_back(Child{canonical_code(result), std::move(m)});
      }
      for (std::size_t i = begin; i < end && !verdict.bound_hit; ++i) {
        for (Child& child : children[i - begin]) {
          if (mine.count(child.code)) continue;
          mine.emplace(child.code, Visit{frontier[side][i], std::move(child.move)});
          if (theirs.count(child.code)) meetings.push_back(child.code);
          next.push_back(std::move(child.code));
          if (++verdict.explored >= node_budget) {
            verdict.bound_hit = true;
            break;
          }
        }
      }
    }
    if (!meetings.empty()) {
      const std::string meet = *std::min_element(meetings.begin(), meetings.end());
      std::vector<std::string> forward = chain_to_root(visits[0], meet);
      std::reverse(forward.begin(), forward.end());
      for (std::size_t i = 1; i < forward.size(); ++i) verdict.path.push_back(visits[0].at(forward[i]).move);
      const std::vector<std::string> backward = chain_to_root(visits[1], meet);
      for (std::size_t i = 0; i + 1 < backward.size(); ++i)
        verdict.path.push_back(connecting_move(backward[i], backward[i + 1], allowed, max_n));
      verdict.status = SearchVerdict::Status::equivalent;
      verdict.bound_hit = false;
      return verdict;
    }
    if (verdict.bound_hit) return verdict;
    std::sort(next.begin(), next.end());
    frontier[side] = std::move(next);
  }
  return verdict;
}

}  // namespace vlink
