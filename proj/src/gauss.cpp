#include "vlink/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "vlink/error.hpp"

namespace vlink {

namespace {

char kind_char(EndpointKind k) { return k == EndpointKind::tail ? 'O' : 'U'; }

void append_token(std::string& out, EndpointKind kind, int label, ChordSign sign) {
  out.push_back(kind_char(kind));
  out += std::to_string(label);
  out.push_back(sign_char(sign));
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Lexicographically least serialization of one connected component, searched
// over circle orderings and starting slots with prefix pruning.
class ComponentCanonicalizer {
 public:
  ComponentCanonicalizer(const std::vector<Circle>& all, const std::vector<std::size_t>& members, int max_label)
      : all_(all), members_(members), labels_(static_cast<std::size_t>(max_label) + 1, 0) {}

  std::pair<std::string, std::vector<Circle>> run() {
    std::vector<bool> used(members_.size(), false);
    std::string current;
    std::vector<Circle> order;
    dfs(used, current, order, 1);
    return {best_, best_circles_};
  }

 private:
  bool prune(const std::string& cur) const {
    if (!have_best_) return false;
    const std::size_t n = std::min(cur.size(), best_.size());
    const int c = cur.compare(0, n, best_, 0, n);
    return c > 0 || (c == 0 && cur.size() > best_.size());
  }

  void dfs(std::vector<bool>& used, std::string& current, std::vector<Circle>& order, int next_label) {
    if (order.size() == members_.size()) {
      if (!have_best_ || current < best_) {
        best_ = current;
        best_circles_ = order;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t m = 0; m < members_.size(); ++m) {
      if (used[m]) continue;
      const Circle& circle = all_[members_[m]];
      const std::size_t rotations = circle.empty() ? 1 : circle.size();
      for (std::size_t start = 0; start < rotations; ++start) {
        const std::size_t mark = current.size();
        if (!order.empty()) current.push_back(';');
        Circle emitted;
        std::vector<int> assigned;
        int next = next_label;
        if (circle.empty()) current.push_back('*');
        for (std::size_t i = 0; i < circle.size(); ++i) {
          const Token& tok = circle[(start + i) % circle.size()];
          int& slot = labels_[static_cast<std::size_t>(tok.label)];
          if (slot == 0) {
            slot = next++;
            assigned.push_back(tok.label);
          }
          append_token(current, tok.kind, slot, tok.sign);
          emitted.push_back(Token{tok.kind, slot, tok.sign});
        }
        if (!prune(current)) {
          used[m] = true;
          order.push_back(std::move(emitted));
          dfs(used, current, order, next);
          order.pop_back();
          used[m] = false;
        }
        for (int label : assigned) labels_[static_cast<std::size_t>(label)] = 0;
        current.resize(mark);
      }
    }
  }

  const std::vector<Circle>& all_;
  const std::vector<std::size_t>& members_;
  std::vector<int> labels_;
  std::string best_;
  std::vector<Circle> best_circles_;
  bool have_best_ = false;
};

std::vector<std::vector<std::size_t>> components_of(const std::vector<Circle>& circles) {
  DisjointSets sets(circles.size());
  std::map<int, std::size_t> first_seen;
  for (std::size_t c = 0; c < circles.size(); ++c)
    for (const Token& t : circles[c]) {
      auto [it, inserted] = first_seen.emplace(t.label, c);
      if (!inserted) sets.unite(it->second, c);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < circles.size(); ++c) groups[sets.find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Circle rotated_from(const Circle& circle, std::size_t start) {
  Circle out;
  out.reserve(circle.size());
  for (std::size_t i = 0; i < circle.size(); ++i) out.push_back(circle[(start + i) % circle.size()]);
  return out;
}

}  // namespace

GaussDiagram::GaussDiagram() : circles_(1) {}

GaussDiagram GaussDiagram::from_circles(std::vector<Circle> circles) {
  if (circles.empty()) throw DiagramError("a diagram needs at least one circle");
  struct Seen {
    int count = 0;
    std::optional<Endpoint> tail;
    std::optional<Endpoint> head;
    ChordSign sign = ChordSign::positive;
  };
  std::map<int, Seen> seen;
  for (std::size_t c = 0; c < circles.size(); ++c) {
    for (std::size_t p = 0; p < circles[c].size(); ++p) {
      const Token& t = circles[c][p];
      if (t.label <= 0) throw DiagramError("chord labels must be positive integers");
      Seen& s = seen[t.label];
      ++s.count;
      if (s.count > 2) throw DiagramError("label " + std::to_string(t.label) + " occurs more than twice");
      if (s.count == 2 && s.sign != t.sign)
        throw DiagramError("sign mismatch on label " + std::to_string(t.label));
      s.sign = t.sign;
      Endpoint e{c, p, t.kind};
      auto& slot = t.kind == EndpointKind::tail ? s.tail : s.head;
      if (slot)
        throw DiagramError("label " + std::to_string(t.label) + " has two " +
                           (t.kind == EndpointKind::tail ? "over (O)" : "under (U)") + " endpoints");
      slot = e;
    }
  }
  GaussDiagram d;
  d.circles_ = std::move(circles);
  d.chords_.reserve(seen.size());
  for (const auto& [label, s] : seen) {
    if (s.count != 2) throw DiagramError("label " + std::to_string(label) + " occurs only once");
    d.chords_.push_back(Chord{label, *s.tail, *s.head, s.sign});
  }
  return d;
}

std::optional<std::size_t> GaussDiagram::chord_index(int label) const {
  auto it = std::lower_bound(chords_.begin(), chords_.end(), label,
                             [](const Chord& c, int l) { return c.label < l; });
  if (it == chords_.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - chords_.begin());
}

const Chord& GaussDiagram::chord(int label) const {
  auto idx = chord_index(label);
  if (!idx) throw std::out_of_range("unknown chord label " + std::to_string(label));
  return chords_[*idx];
}

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<Circle> circles;
  Circle current;
  bool star = false;
  bool any = false;
  std::size_t i = 0;
  auto finish_circle = [&](std::size_t at) {
    if (!star && !any) throw ParseError("empty circle", at);
    circles.push_back(std::move(current));
    current.clear();
    star = false;
    any = false;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (ch == ';' || ch == '|') {
      finish_circle(i);
      ++i;
      continue;
    }
    if (ch == '*') {
      if (star || any) throw ParseError("'*' must stand alone for a chordless circle", i);
      star = true;
      ++i;
      continue;
    }
    if (ch == 'O' || ch == 'U') {
      if (star) throw ParseError("tokens after '*'", i);
      const std::size_t token_start = i;
      ++i;
      const std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError("expected a chord label", i);
      if (i - digits > 9) throw ParseError("chord label too large", digits);
      const int label = std::stoi(std::string(text.substr(digits, i - digits)));
      if (label <= 0) throw ParseError("chord labels must be positive", digits);
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw ParseError("expected '+' or '-' after label", i);
      const ChordSign sign = text[i] == '+' ? ChordSign::positive : ChordSign::negative;
      ++i;
      current.push_back(Token{ch == 'O' ? EndpointKind::tail : EndpointKind::head, label, sign});
      any = true;
      (void)token_start;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", i);
  }
  finish_circle(text.size());
  return GaussDiagram::from_circles(std::move(circles));
}

std::string serialize(const GaussDiagram& d) {
  std::string out;
  for (std::size_t c = 0; c < d.circles().size(); ++c) {
    if (c > 0) out.push_back(';');
    const Circle& circle = d.circles()[c];
    if (circle.empty()) out.push_back('*');
    for (const Token& t : circle) append_token(out, t.kind, t.label, t.sign);
  }
  return out;
}

std::string canonical_code(const std::vector<Circle>& circles) {
  int max_label = 0;
  for (const auto& circle : circles)
    for (const Token& t : circle) max_label = std::max(max_label, t.label);
  struct Part {
    std::string code;
    std::vector<Circle> circles;
  };
  std::vector<Part> parts;
  for (const auto& members : components_of(circles)) {
    auto [code, canon] = ComponentCanonicalizer(circles, members, max_label).run();
    parts.push_back(Part{std::move(code), std::move(canon)});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.code < b.code; });
  std::string out;
  int offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p > 0) out.push_back('|');
    int local_max = 0;
    for (std::size_t c = 0; c < parts[p].circles.size(); ++c) {
      if (c > 0) out.push_back(';');
      const Circle& circle = parts[p].circles[c];
      if (circle.empty()) out.push_back('*');
      for (const Token& t : circle) {
        append_token(out, t.kind, t.label + offset, t.sign);
        local_max = std::max(local_max, t.label);
      }
    }
    offset += local_max;
  }
  return out;
}

std::string canonical_code(const GaussDiagram& d) { return canonical_code(d.circles()); }

GaussDiagram canonical_diagram(const GaussDiagram& d) { return parse_gauss_code(canonical_code(d)); }

std::vector<std::vector<std::size_t>> connected_components(const GaussDiagram& d) {
  return components_of(d.circles());
}

DiagramStats stats(const GaussDiagram& d) {
  DiagramStats s;
  s.n = d.crossing_count();
  s.k = d.circle_count();
  for (const Chord& c : d.chords()) s.writhe += to_int(c.sign);
  s.components = connected_components(d);
  return s;
}

bool is_alternating(const GaussDiagram& d) {
  for (const Circle& circle : d.circles()) {
    if (circle.empty()) continue;
    if (circle.size() == 1) return false;
    for (std::size_t i = 0; i < circle.size(); ++i)
      if (circle[i].kind == circle[(i + 1) % circle.size()].kind) return false;
  }
  return true;
}

bool is_visibly_split(const GaussDiagram& d) { return connected_components(d).size() >= 2; }

GaussDiagram oriented_smoothing(const GaussDiagram& d, int label) {
  const Chord& chord = d.chord(label);
  std::vector<Circle> out;
  const auto& circles = d.circles();
  if (chord.is_self_chord()) {
    const std::size_t c = chord.tail.circle;
    const Circle& circle = circles[c];
    const std::size_t a = std::min(chord.tail.position, chord.head.position);
    const std::size_t b = std::max(chord.tail.position, chord.head.position);
    Circle inner(circle.begin() + static_cast<std::ptrdiff_t>(a + 1), circle.begin() + static_cast<std::ptrdiff_t>(b));
    Circle outer;
    for (std::size_t i = b + 1; i < circle.size(); ++i) outer.push_back(circle[i]);
    for (std::size_t i = 0; i < a; ++i) outer.push_back(circle[i]);
    for (std::size_t i = 0; i < circles.size(); ++i) {
      if (i == c) {
        out.push_back(std::move(inner));
        out.push_back(std::move(outer));
      } else {
        out.push_back(circles[i]);
      }
    }
  } else {
    const Endpoint first = chord.tail.circle < chord.head.circle ? chord.tail : chord.head;
    const Endpoint second = chord.tail.circle < chord.head.circle ? chord.head : chord.tail;
    // Arriving at one endpoint the strand continues after the other one.
    Circle merged = rotated_from(circles[first.circle], first.position + 1);
    merged.pop_back();
    Circle tail_part = rotated_from(circles[second.circle], second.position + 1);
    tail_part.pop_back();
    merged.insert(merged.end(), tail_part.begin(), tail_part.end());
    for (std::size_t i = 0; i < circles.size(); ++i) {
      if (i == first.circle)
        out.push_back(merged);
      else if (i != second.circle)
        out.push_back(circles[i]);
    }
  }
  return GaussDiagram::from_circles(std::move(out));
}

GaussDiagram delete_chord(const GaussDiagram& d, int label) {
  (void)d.chord(label);
  std::vector<Circle> out = d.circles();
  for (Circle& circle : out)
    std::erase_if(circle, [label](const Token& t) { return t.label == label; });
  return GaussDiagram::from_circles(std::move(out));
}

std::vector<int> find_nugatory(const GaussDiagram& d) {
  const std::size_t before = connected_components(d).size();
  std::vector<int> out;
  for (const Chord& c : d.chords()) {
    if (!c.is_self_chord()) continue;
    if (connected_components(oriented_smoothing(d, c.label)).size() > before) out.push_back(c.label);
  }
  return out;
}

bool is_reduced(const GaussDiagram& d) { return find_nugatory(d).empty(); }

GaussDiagram reduce(const GaussDiagram& d) {
  GaussDiagram current = d;
  while (true) {
    const auto nugatory = find_nugatory(current);
    if (nugatory.empty()) return current;
    current = delete_chord(current, nugatory.front());
  }
}

GaussDiagram connected_sum(const GaussDiagram& d1, Gap p1, const GaussDiagram& d2, Gap p2) {
  auto check = [](const GaussDiagram& d, Gap g, const char* which) {
    if (g.circle >= d.circle_count())
      throw std::out_of_range(std::string("connected sum: no such circle in ") + which);
    const std::size_t slots = d.slot_count(g.circle);
    if (slots == 0 ? g.position != 0 : g.position >= slots)
      throw std::out_of_range(std::string("connected sum: invalid gap in ") + which);
  };
  check(d1, p1, "first diagram");
  check(d2, p2, "second diagram");
  const int offset = d1.max_label();
  auto shifted = [offset](Circle c) {
    for (Token& t : c) t.label += offset;
    return c;
  };
  const auto& c1 = d1.circles();
  const auto& c2 = d2.circles();
  Circle spliced = c1[p1.circle].empty() ? Circle{} : rotated_from(c1[p1.circle], p1.position);
  Circle inserted = shifted(c2[p2.circle].empty() ? Circle{} : rotated_from(c2[p2.circle], p2.position));
  spliced.insert(spliced.end(), inserted.begin(), inserted.end());
  std::vector<Circle> out;
  for (std::size_t i = 0; i < c1.size(); ++i) out.push_back(i == p1.circle ? spliced : c1[i]);
  for (std::size_t i = 0; i < c2.size(); ++i)
    if (i != p2.circle) out.push_back(shifted(c2[i]));
  return GaussDiagram::from_circles(std::move(out));
}

namespace {

// Shortest arc [start, start+len) of one circle (cyclic) whose chords all
// stay inside it, with a nonempty complement on the same circle.
struct ClosedArc {
  std::size_t circle = 0;
  std::size_t start = 0;
  std::size_t length = 0;
};

std::optional<ClosedArc> find_closed_arc(const GaussDiagram& d) {
  std::optional<ClosedArc> best;
  for (std::size_t c = 0; c < d.circle_count(); ++c) {
    const Circle& circle = d.circles()[c];
    const std::size_t n = circle.size();
    for (std::size_t start = 0; start < n; ++start) {
      std::map<int, int> open;
      for (std::size_t len = 1; len < n; ++len) {
        const Token& t = circle[(start + len - 1) % n];
        if (++open[t.label] == 2) open.erase(t.label);
        if (open.empty() && len % 2 == 0) {
          if (!best || len < best->length) best = ClosedArc{c, start, len};
          break;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::vector<GaussDiagram> connected_summands(const GaussDiagram& d) {
  const auto arc = find_closed_arc(d);
  if (!arc) return {d};
  const Circle& circle = d.circles()[arc->circle];
  const std::size_t n = circle.size();
  Circle piece;
  Circle rest;
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = circle[(arc->start + i) % n];
    (i < arc->length ? piece : rest).push_back(t);
  }
  std::vector<Circle> rest_circles = d.circles();
  rest_circles[arc->circle] = std::move(rest);
  std::vector<GaussDiagram> out =
      connected_summands(GaussDiagram::from_circles(std::vector<Circle>{std::move(piece)}));
  auto more = connected_summands(GaussDiagram::from_circles(std::move(rest_circles)));
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

bool is_semi_alternating(const GaussDiagram& d) {
  const auto parts = connected_summands(d);
  return std::all_of(parts.begin(), parts.end(), [](const GaussDiagram& p) { return is_alternating(p); });
}

GaussDiagram relabeled(const GaussDiagram& d) {
  std::map<int, int> map;
  int next = 1;
  std::vector<Circle> out = d.circles();
  for (Circle& circle : out)
    for (Token& t : circle) {
      auto [it, inserted] = map.emplace(t.label, next);
      if (inserted) ++next;
      t.label = it->second;
    }
  return GaussDiagram::from_circles(std::move(out));
}

}  // namespace vlink
