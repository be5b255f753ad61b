#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gen {

using vlink::Circle;
using vlink::ChordSign;
using vlink::EndpointKind;
using vlink::GaussDiagram;
using vlink::Token;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

ChordSign random_sign(Rng& rng) { return uniform(rng, 0, 1) ? ChordSign::positive : ChordSign::negative; }

// Random composition of `total` into `parts` positive pieces.
std::vector<std::size_t> composition(Rng& rng, std::size_t total, std::size_t parts) {
  std::vector<std::size_t> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> sizes;
  std::size_t previous = 0;
  for (std::size_t c : cuts) {
    sizes.push_back(c - previous);
    previous = c;
  }
  sizes.push_back(total - previous);
  return sizes;
}

}  // namespace

GaussDiagram random_diagram(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < n; ++i) {
    const ChordSign s = random_sign(rng);
    const int label = static_cast<int>(i) + 1;
    tokens.push_back(Token{EndpointKind::tail, label, s});
    tokens.push_back(Token{EndpointKind::head, label, s});
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);
  std::vector<Circle> circles(k);
  for (const Token& t : tokens) circles[uniform(rng, 0, k - 1)].push_back(t);
  return GaussDiagram::from_circles(circles);
}

GaussDiagram random_alternating(Rng& rng, std::size_t n, std::size_t k) {
  const std::vector<std::size_t> sizes = composition(rng, n, k);
  std::vector<std::pair<std::size_t, std::size_t>> tail_slots;
  std::vector<std::pair<std::size_t, std::size_t>> head_slots;
  std::vector<Circle> circles(k);
  for (std::size_t c = 0; c < k; ++c) {
    circles[c].resize(2 * sizes[c]);
    for (std::size_t j = 0; j < sizes[c]; ++j) {
      tail_slots.emplace_back(c, 2 * j);
      head_slots.emplace_back(c, 2 * j + 1);
    }
  }
  std::shuffle(head_slots.begin(), head_slots.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    const ChordSign s = random_sign(rng);
    const int label = static_cast<int>(i) + 1;
    circles[tail_slots[i].first][tail_slots[i].second] = Token{EndpointKind::tail, label, s};
    circles[head_slots[i].first][head_slots[i].second] = Token{EndpointKind::head, label, s};
  }
  return GaussDiagram::from_circles(circles);
}

bool draw_until(Rng& rng, const std::function<GaussDiagram(Rng&)>& make,
                const std::function<bool(const GaussDiagram&)>& accept, GaussDiagram& out, std::size_t attempts) {
  for (std::size_t i = 0; i < attempts; ++i) {
    GaussDiagram d = make(rng);
    if (accept(d)) {
      out = std::move(d);
      return true;
    }
  }
  return false;
}

vlink::Digraph random_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges, bool valuated) {
  const std::size_t v = uniform(rng, 2, max_vertices);
  const std::size_t e = uniform(rng, 0, max_edges);
  const vlink::LaurentPoly choices[] = {vlink::LaurentPoly(1), vlink::LaurentPoly::monomial(-1, 1),
                                        vlink::LaurentPoly::monomial(1, 2), vlink::LaurentPoly(-1)};
  vlink::Digraph g(v);
  for (std::size_t i = 0; i < e; ++i) {
    const std::size_t s = uniform(rng, 0, v - 1);
    std::size_t t = uniform(rng, 0, v - 2);
    if (t >= s) ++t;
    g.add_edge(s, t, valuated ? choices[uniform(rng, 0, 3)] : vlink::LaurentPoly(1));
  }
  return g;
}

vlink::Digraph random_balanced(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t v = uniform(rng, 2, max_vertices);
  vlink::Digraph g(v);
  while (true) {
    // A closed walk of length >= 2 without immediate repeats of a vertex.
    const std::size_t len = uniform(rng, 2, std::min<std::size_t>(v + 2, 6));
    if (g.edge_count() + len > max_edges) break;
    std::vector<std::size_t> walk{uniform(rng, 0, v - 1)};
    for (std::size_t i = 1; i < len; ++i) {
      std::size_t next = uniform(rng, 0, v - 2);
      if (next >= walk.back()) ++next;
      walk.push_back(next);
    }
    if (walk.back() == walk.front()) continue;
    for (std::size_t i = 0; i < len; ++i) g.add_edge(walk[i], walk[(i + 1) % len]);
    if (uniform(rng, 0, 2) == 0) break;
  }
  return g;
}

vlink::Digraph random_two_in_two_out(Rng& rng, std::size_t v) {
  auto derangement = [&]() {
    std::vector<std::size_t> p(v);
    std::iota(p.begin(), p.end(), 0);
    auto has_fixed_point = [&p] {
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == i) return true;
      return false;
    };
    do std::shuffle(p.begin(), p.end(), rng);
    while (has_fixed_point());
    return p;
  };
  const auto a = derangement();
  const auto b = derangement();
  vlink::Digraph g(v);
  for (std::size_t i = 0; i < v; ++i) {
    g.add_edge(i, a[i]);
    g.add_edge(i, b[i]);
  }
  return g;
}

}  // namespace gen
